#![no_main]

use braceops::hochschild::AssocAlgebra;
use braceops::io::{cochain_from_json, cochain_to_json};
use braceops::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for alg in [AssocAlgebra::dual_numbers(Ring::Integers), AssocAlgebra::matrices2(Ring::PrimeField(3))] {
        if let Ok(c) = cochain_from_json(text, &alg) {
            let j = cochain_to_json(&c);
            assert_eq!(cochain_from_json(&j, &alg).unwrap(), c);
        }
    }
});
