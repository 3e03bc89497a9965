#![no_main]

use braceops::prelie::{vertical_decompose, Alphabet, Generator, LieWord};
use braceops::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let alpha = Alphabet::new((1..=6).map(|i| Generator::even(&format!("x{i}"))).collect()).unwrap();
    if let Ok(w) = LieWord::parse(text, &alpha) {
        assert_eq!(LieWord::parse(&w.render(&alpha), &alpha).unwrap(), w);
        let _ = vertical_decompose(&w, &alpha, Ring::Integers);
    }
});
