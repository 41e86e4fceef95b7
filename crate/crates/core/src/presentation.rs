//! Knot-group presentations of (g,1)-knots and their abelianization.
//!
//! A presentation has generators `a1..a<g>` and `g` (the meridian) and
//! exactly `g` relators. The text format is line oriented:
//!
//! ```text
//! # Takahashi knot, p = 3, r = 2
//! genus 2
//! rel a2 a1^-2 g a2^-1 g^-1
//! rel a1 g a2^3 a1^-1 g^-1
//! ```
//!
//! A relator may carry a label, `rel r1: a1 g`. Labels must be unique.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{invariant_factors, AbelianGroup, IntMatrix};
use crate::word::{parse_word, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}, column {column}: expected {expected}")]
    SyntaxError {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("genus {genus} requires {genus} relators, found {found}")]
    GenusMismatch { genus: u32, found: usize },
    #[error("line {line}: generator a{index} is out of range for genus {genus}")]
    IndexOutOfRange { line: usize, index: u32, genus: u32 },
    #[error("line {line}: relator label '{label}' is already used")]
    DuplicateRelatorLabel { line: usize, label: String },
}

impl PresentationError {
    pub fn line(&self) -> Option<usize> {
        match self {
            PresentationError::SyntaxError { line, .. }
            | PresentationError::IndexOutOfRange { line, .. }
            | PresentationError::DuplicateRelatorLabel { line, .. } => Some(*line),
            PresentationError::GenusMismatch { .. } => None,
        }
    }
}

/// `<a1, ..., a<g>, g | r_1, ..., r_g>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotGroupPresentation {
    genus: u32,
    relators: Vec<Word>,
    labels: Vec<Option<String>>,
}

impl KnotGroupPresentation {
    pub fn new(genus: u32, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let labels = vec![None; relators.len()];
        Self::with_labels(genus, relators, labels)
    }

    /// Like [`new`](Self::new) with optional relator labels. Errors report
    /// the relator's position (1-based) as the line.
    pub fn with_labels(
        genus: u32,
        relators: Vec<Word>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, PresentationError> {
        assert_eq!(relators.len(), labels.len(), "one label slot per relator");
        if genus == 0 {
            return Err(PresentationError::SyntaxError {
                line: 0,
                column: 0,
                expected: "genus >= 1".into(),
            });
        }
        if relators.len() != genus as usize {
            return Err(PresentationError::GenusMismatch {
                genus,
                found: relators.len(),
            });
        }
        for (k, r) in relators.iter().enumerate() {
            check_alphabet(r, genus, k + 1)?;
        }
        let mut seen = BTreeSet::new();
        for (k, label) in labels.iter().enumerate() {
            if let Some(l) = label {
                if !seen.insert(l.as_str()) {
                    return Err(PresentationError::DuplicateRelatorLabel {
                        line: k + 1,
                        label: l.clone(),
                    });
                }
            }
        }
        Ok(KnotGroupPresentation {
            genus,
            relators,
            labels,
        })
    }

    /// The trivial knot in the connected sum of `genus` copies of S^2 x S^1:
    /// every relator is empty.
    pub fn trivial_knot(genus: u32) -> Self {
        Self::new(genus, vec![Word::identity(); genus as usize]).expect("valid by construction")
    }

    /// The core knot in the same manifold: `r_1 = g`, the rest empty.
    pub fn core_knot(genus: u32) -> Self {
        let mut relators = vec![Word::identity(); genus as usize];
        relators[0] = Word::letter(Generator::Gamma);
        Self::new(genus, relators).expect("valid by construction")
    }

    /// The genus-two knot in `L(p,1) # L(r,1)` whose n-fold strongly-cyclic
    /// coverings are the periodic Takahashi manifolds `T_n(p/1, r/1)`.
    pub fn takahashi(p: i64, r: i64) -> Self {
        use crate::word::Syllable;
        use Generator::{Alpha, Gamma};
        let r1 = Word::from_syllables([
            Syllable::new(Alpha(2), 1),
            Syllable::new(Alpha(1), -r),
            Syllable::new(Gamma, 1),
            Syllable::new(Alpha(2), -1),
            Syllable::new(Gamma, -1),
        ]);
        let r2 = Word::from_syllables([
            Syllable::new(Alpha(1), 1),
            Syllable::new(Gamma, 1),
            Syllable::new(Alpha(2), p),
            Syllable::new(Alpha(1), -1),
            Syllable::new(Gamma, -1),
        ]);
        Self::new(2, vec![r1, r2]).expect("valid by construction")
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Same presentation with relators reordered by `order` (a permutation
    /// of `0..genus`).
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.relators.len());
        KnotGroupPresentation {
            genus: self.genus,
            relators: order.iter().map(|&k| self.relators[k].clone()).collect(),
            labels: order.iter().map(|&k| self.labels[k].clone()).collect(),
        }
    }
}

fn check_alphabet(r: &Word, genus: u32, line: usize) -> Result<(), PresentationError> {
    for gen in r.generators() {
        match gen {
            Generator::Alpha(i) if i > genus => {
                return Err(PresentationError::IndexOutOfRange {
                    line,
                    index: i,
                    genus,
                })
            }
            Generator::X(..) => {
                return Err(PresentationError::SyntaxError {
                    line,
                    column: 0,
                    expected: "generators a<i> or g only".into(),
                })
            }
            _ => {}
        }
    }
    Ok(())
}

impl fmt::Display for KnotGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        for (r, label) in self.relators.iter().zip(&self.labels) {
            f.write_str("rel")?;
            if let Some(l) = label {
                write!(f, " {l}:")?;
            }
            if !r.is_identity() {
                write!(f, " {r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn syntax(line: usize, column: usize, expected: &str) -> PresentationError {
    PresentationError::SyntaxError {
        line,
        column,
        expected: expected.to_string(),
    }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Parses the presentation file format. Line and column numbers in errors
/// are 1-based.
pub fn parse_presentation(text: &str) -> Result<KnotGroupPresentation, PresentationError> {
    let mut genus: Option<u32> = None;
    let mut relators = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut seen_labels = BTreeSet::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let lead = content.len() - content.trim_start().len();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let col_of = |byte_offset: usize| content[..byte_offset].chars().count() + 1;
        let keyword_end = body.find(char::is_whitespace).unwrap_or(body.len());
        let keyword = &body[..keyword_end];
        let after = &body[keyword_end..];

        match (keyword, genus) {
            ("genus", None) => {
                let value = after.trim();
                let g: u32 = value
                    .parse()
                    .ok()
                    .filter(|&g| g >= 1 && value.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| {
                        let col = if value.is_empty() {
                            col_of(lead + keyword_end)
                        } else {
                            col_of(lead + body.len() - after.trim_start().len())
                        };
                        syntax(line_no, col, "positive integer genus")
                    })?;
                genus = Some(g);
            }
            (_, None) => {
                return Err(syntax(
                    line_no,
                    col_of(lead),
                    "'genus <g>' as the first statement",
                ))
            }
            ("rel", Some(g)) => {
                let mut word_text = after;
                let mut word_offset = lead + keyword_end;
                let mut label = None;
                let trimmed = after.trim_start();
                if let Some(first) = trimmed.split_whitespace().next() {
                    if let Some(name) = first.strip_suffix(':') {
                        let label_col = col_of(lead + body.len() - trimmed.len());
                        if !is_label(name) {
                            return Err(syntax(
                                line_no,
                                label_col,
                                "relator label [A-Za-z_][A-Za-z0-9_-]*",
                            ));
                        }
                        if !seen_labels.insert(name.to_string()) {
                            return Err(PresentationError::DuplicateRelatorLabel {
                                line: line_no,
                                label: name.to_string(),
                            });
                        }
                        label = Some(name.to_string());
                        let skip = (after.len() - trimmed.len()) + first.len();
                        word_text = &after[skip..];
                        word_offset += skip;
                    }
                }
                let word = parse_word(word_text).map_err(|e| {
                    let base = content[..word_offset].chars().count();
                    syntax(line_no, base + e.column, e.expected)
                })?;
                for gen in word.generators() {
                    match gen {
                        Generator::Alpha(i) if i > g => {
                            return Err(PresentationError::IndexOutOfRange {
                                line: line_no,
                                index: i,
                                genus: g,
                            })
                        }
                        Generator::X(..) => {
                            let pos = word_text.find('x').map_or(word_offset, |p| word_offset + p);
                            return Err(syntax(line_no, col_of(pos), "generators a<i> or g only"));
                        }
                        _ => {}
                    }
                }
                relators.push(word);
                labels.push(label);
            }
            ("genus", Some(_)) => {
                return Err(syntax(
                    line_no,
                    col_of(lead),
                    "'rel <word>' (genus already given)",
                ))
            }
            (_, Some(_)) => return Err(syntax(line_no, col_of(lead), "'rel <word>'")),
        }
    }

    let genus =
        genus.ok_or_else(|| syntax(text.lines().count().max(1), 1, "'genus <g>' statement"))?;
    KnotGroupPresentation::with_labels(genus, relators, labels)
}

impl FromStr for KnotGroupPresentation {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}

/// Abelian invariants of a presentation.
///
/// `h[i][j]` is the exponent sum of `a<j>` in relator `i` and `b[i]` that of
/// `g`; `h_prime` is `h` with `b` appended as a last column. `e`, `e_prime`
/// are the invariant factors of `h`, `h_prime`, zero padded to length `g`.
/// `free_rank` and `torsion` describe the first homology of the ambient
/// manifold, presented by `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyData {
    pub h: IntMatrix,
    pub b: Vec<BigInt>,
    pub h_prime: IntMatrix,
    pub e: Vec<BigInt>,
    pub e_prime: Vec<BigInt>,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyData {
    /// Builds the data directly from `h` (square) and `b`.
    pub fn from_matrices(h: IntMatrix, b: Vec<BigInt>) -> Self {
        assert_eq!(h.rows(), h.cols(), "H must be square");
        assert_eq!(b.len(), h.rows(), "b must have one entry per relator");
        let g = h.rows();
        let h_prime = h.augment(&b);
        let e = invariant_factors(&h, g).expect("rank of a g x g matrix is at most g");
        let e_prime = invariant_factors(&h_prime, g).expect("rank of a g-row matrix is at most g");
        let free_rank = e.iter().filter(|x| x.is_zero()).count();
        let torsion = e.iter().filter(|x| **x > BigInt::one()).cloned().collect();
        HomologyData {
            h,
            b,
            h_prime,
            e,
            e_prime,
            free_rank,
            torsion,
        }
    }

    pub fn genus(&self) -> usize {
        self.h.rows()
    }

    /// First homology of the ambient manifold.
    pub fn ambient_homology(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
        }
    }
}

pub fn abelianize(p: &KnotGroupPresentation) -> HomologyData {
    let (h, b) = exponent_matrices(p);
    HomologyData::from_matrices(h, b)
}

/// `H` and `b` alone, without the invariant factors.
pub fn exponent_matrices(p: &KnotGroupPresentation) -> (IntMatrix, Vec<BigInt>) {
    let g = p.genus() as usize;
    let h = IntMatrix::from_rows(p.relators().iter().map(|r| {
        (1..=g as u32)
            .map(|j| r.exponent_sum(&Generator::Alpha(j)))
            .collect::<Vec<_>>()
    }));
    let b = p
        .relators()
        .iter()
        .map(|r| r.exponent_sum(&Generator::Gamma))
        .collect();
    (h, b)
}

/// First homology of the knot complement, presented by `h_prime` on the
/// generators `a1..a<g>, g`.
pub fn homology_of_complement(p: &KnotGroupPresentation) -> AbelianGroup {
    AbelianGroup::from_relation_matrix(&abelianize(p).h_prime)
}
