#![no_main]

use braceops::prelie::{Alphabet, TreeJson};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(alpha) = serde_json::from_str::<Alphabet>(text) {
        assert_eq!(serde_json::from_str::<Alphabet>(&serde_json::to_string(&alpha).unwrap()).unwrap(), alpha);
    }
    if let Ok(t) = serde_json::from_str::<TreeJson>(text) {
        let alpha: Alphabet = serde_json::from_str(r#"[{"name":"a","parity":"even"},{"name":"b","parity":"odd"}]"#).unwrap();
        let _ = t.to_tree(&alpha);
    }
});
