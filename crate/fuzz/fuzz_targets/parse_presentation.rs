#![no_main]

//! Presentation files: parse, print, reparse.

use knotcover::{abelianize, parse_presentation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        let again = parse_presentation(&p.to_string()).expect("display output parses");
        assert_eq!(again, p);
        // keep the linear algebra small enough to stay fast
        if p.genus() <= 6 && text.len() <= 512 {
            let _ = abelianize(&p);
        }
    }
});
