#![no_main]

use distgraph::construct::{loop_erase, PathWitness};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = PathWitness::from_json(text) {
        assert_eq!(PathWitness::from_json(&w.to_json()).unwrap(), w);
        let erased = loop_erase(&w);
        assert!(erased.is_vertex_distinct());
        assert_eq!(erased.end(), w.end());
    }
});
