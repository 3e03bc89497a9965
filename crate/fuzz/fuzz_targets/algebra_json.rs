#![no_main]

use braceops::io::{algebra_from_json, algebra_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(alg) = algebra_from_json(text) {
        let j = algebra_to_json(&alg);
        assert_eq!(algebra_to_json(&algebra_from_json(&j).unwrap()), j);
    }
});
