//! Replays the checked-in fuzz corpus through the same round-trip checks the
//! fuzz targets make.

use std::fs;
use std::path::PathBuf;

use knotcover::{parse_cyclic, parse_presentation, parse_word, Word};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = String::from_utf8_lossy(&fs::read(&path).unwrap()).into_owned();
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                text,
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn presentation_seeds_round_trip() {
    for (name, text) in seeds("parse_presentation") {
        let p = parse_presentation(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p, "{name}");
    }
}

#[test]
fn word_seeds_round_trip() {
    for (name, text) in seeds("parse_word") {
        let w = parse_word(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w, "{name}");
        assert!(w.concat(&w.inverse()).is_identity(), "{name}");
    }
}

#[test]
fn cyclic_seeds_round_trip() {
    for (name, text) in seeds("parse_cyclic") {
        let cp = parse_cyclic(&text).unwrap_or_else(|e| panic!("{name}: {e:?}"));
        assert_eq!(parse_cyclic(&cp.to_string()).unwrap(), cp, "{name}");
    }
}
