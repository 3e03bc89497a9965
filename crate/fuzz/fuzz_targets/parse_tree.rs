#![no_main]

use braceops::prelie::{parse_tree, render_tree, Alphabet, Generator, TreePoly};
use braceops::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::odd("b"), Generator::even("x1")]).unwrap();
    if let Ok(t) = parse_tree(text, &alpha) {
        let again = parse_tree(&render_tree(&t, &alpha), &alpha).unwrap();
        assert_eq!(again, t);
        if t.size() <= 64 {
            let _ = TreePoly::from_tree(&alpha, Ring::Integers, &t, 1);
        }
    }
});
