#![no_main]

//! Free-group words: parse, print, reparse.

use knotcover::{parse_word, Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_word(text) {
        let again: Word = w.to_string().parse().expect("display output parses");
        assert_eq!(again, w);
        assert_eq!(w.concat(&w.inverse()), Word::identity());
    }
});
