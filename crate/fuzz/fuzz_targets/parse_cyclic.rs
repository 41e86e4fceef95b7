#![no_main]

//! Cyclic-presentation files: parse, print, reparse.

use knotcover::parse_cyclic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cp) = parse_cyclic(text) {
        let again = parse_cyclic(&cp.to_string()).expect("display output parses");
        assert_eq!(again, cp);
    }
});
