#![no_main]

use braceops::cells::{CompCell, PermCell};
use braceops::surjection::Surjection;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = serde_json::from_str::<CompCell>(text) {
        let _ = c.eps_degree();
    }
    if let Ok(c) = serde_json::from_str::<PermCell>(text) {
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<PermCell>(&j).unwrap(), c);
    }
    if let Ok(u) = serde_json::from_str::<Surjection>(text) {
        let _ = (u.degree(), u.complexity());
    }
});
