#![no_main]

use braceops::io::{chain_from_json, chain_to_json};
use braceops::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for arity in 1..=4 {
        if let Ok(c) = chain_from_json(text, arity, Ring::Integers) {
            assert_eq!(chain_from_json(&chain_to_json(&c), arity, Ring::Integers).unwrap(), c);
            if c.len() <= 64 {
                let _ = c.differential();
            }
        }
    }
});
