#![no_main]

use distgraph::construct::PathWitness;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(w) = PathWitness::from_text(text) {
        // accepted witnesses are valid and print back to the same walk
        assert!(w.validate().is_ok());
        assert_eq!(PathWitness::from_text(&w.to_text()).unwrap(), w);
    }
});
