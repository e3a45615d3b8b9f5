//! Argument parsing only; executing arbitrary commands could run for a long
//! time on large inputs.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let argv = std::iter::once("distgraph").chain(text.split_whitespace());
    let _ = distgraph_cli::parse_args(argv);
});
