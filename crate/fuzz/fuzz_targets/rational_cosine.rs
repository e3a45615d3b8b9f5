#![no_main]

use distgraph::spectra::RationalCosine;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = text.parse::<RationalCosine>() {
        assert!(c.den() > 0);
        assert!(c.num().unsigned_abs() <= c.den().unsigned_abs());
        assert_eq!(c.to_string().parse::<RationalCosine>().unwrap(), c);
    }
});
