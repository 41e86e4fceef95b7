//! Cyclic presentations of covering groups.
//!
//! Given a presentation and a monodromy, each relator is rewritten over the
//! hat generators `â_i = a_i g^-x_i` (stored as `Alpha(i)`), split into
//! blocks `â_j^eps g^eta`, and lifted to the word
//! `x_{j1,1}^eps1 x_{j2,k2}^eps2 ...` with `k_l = 1 + eta_1 + ... + eta_{l-1} (mod n)`.
//! The `n` shifts of each lifted word under `theta_n` give the relators of
//! the covering group.
//!
//! [`sheet_walk_lift`] computes the same lift letter by letter, tracking
//! which sheet of the covering the path is on; it is kept independent of
//! the block formula and used to cross-check it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::coverings::{violated_row, CoveringError, Monodromy};
use crate::linalg::{AbelianGroup, IntMatrix};
use crate::presentation::{exponent_matrices, KnotGroupPresentation};
use crate::word::{free_reduce, parse_word, Generator, Syllable, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    InvalidMonodromy(#[from] CoveringError),
    #[error("relator has g-exponent sum {sum}, not divisible by {n}")]
    GammaSumNotZeroModN { sum: BigInt, n: u32 },
    #[error("generator {generator} is outside the {m} x {n} alphabet")]
    GeneratorOutOfRange {
        generator: Generator,
        m: u32,
        n: u32,
    },
    #[error("cyclic presentation needs m >= 1 and n >= 2, got m = {m}, n = {n}")]
    BadShape { m: u32, n: u32 },
    #[error("expected {m} words, got {found}")]
    WordCount { m: u32, found: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Rewrites every relator over the hat generators: `a_i -> â_i g^{x_i}`.
///
/// The result reuses `Alpha(i)` for `â_i`. Each new relator has g-exponent
/// sum `b_i + sum_j a_ij x_j`, which is `0 (mod n)` for a valid monodromy.
pub fn hat_substitution(
    p: &KnotGroupPresentation,
    mono: &Monodromy,
) -> Result<KnotGroupPresentation, LiftError> {
    let (h, b) = exponent_matrices(p);
    let n = mono.n();
    if mono.images().len() != b.len() {
        return Err(CoveringError::WrongLength {
            genus: b.len(),
            found: mono.images().len(),
        }
        .into());
    }
    if let Some((row, residue)) = violated_row(&h, &b, n, mono.images()) {
        return Err(CoveringError::InvalidMonodromy { row, residue, n }.into());
    }
    let mut images = BTreeMap::new();
    images.insert(Generator::Gamma, Word::letter(Generator::Gamma));
    for (i, &xi) in mono.images().iter().enumerate() {
        let a = Generator::Alpha(i as u32 + 1);
        images.insert(
            a,
            Word::from_syllables([Syllable::new(a, 1), Syllable::new(Generator::Gamma, xi)]),
        );
    }
    let relators = p
        .relators()
        .iter()
        .map(|r| r.substitute(&images))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &relators {
        debug_assert!(r
            .exponent_sum(&Generator::Gamma)
            .is_multiple_of(&BigInt::from(n)));
    }
    Ok(
        KnotGroupPresentation::with_labels(p.genus(), relators, p.labels().to_vec())
            .expect("substitution preserves the alphabet"),
    )
}

/// One factor `â_generator^epsilon g^eta` of a relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub generator: u32,
    pub epsilon: BigInt,
    pub eta: BigInt,
}

/// A relator in block form. `rotation` is the power `c` of a leading `g^c`
/// moved to the end before splitting (zero when the relator starts with a
/// hat generator); `gamma_total` is the relator's g-exponent sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub blocks: Vec<Block>,
    pub rotation: BigInt,
    pub gamma_total: BigInt,
}

impl BlockForm {
    pub fn is_pure_gamma(&self) -> bool {
        self.blocks.is_empty() && !self.gamma_total.is_zero()
    }
}

fn check_gamma_sum(r: &Word, n: u32) -> Result<BigInt, LiftError> {
    let sum = r.exponent_sum(&Generator::Gamma);
    if sum.is_multiple_of(&BigInt::from(n)) {
        Ok(sum)
    } else {
        Err(LiftError::GammaSumNotZeroModN { sum, n })
    }
}

pub fn block_normal_form(r: &Word, n: u32) -> Result<BlockForm, LiftError> {
    let gamma_total = check_gamma_sum(r, n)?;
    let syllables = r.syllables();
    let (rotation, word) = match syllables.first() {
        Some(s) if s.generator == Generator::Gamma => {
            let rotated = free_reduce(syllables[1..].iter().cloned().chain([s.clone()]));
            (s.exponent.clone(), rotated)
        }
        _ => (BigInt::zero(), r.clone()),
    };
    let mut blocks: Vec<Block> = Vec::new();
    for s in word.syllables() {
        match s.generator {
            Generator::Alpha(j) => blocks.push(Block {
                generator: j,
                epsilon: s.exponent.clone(),
                eta: BigInt::zero(),
            }),
            Generator::Gamma => match blocks.last_mut() {
                Some(last) => last.eta += &s.exponent,
                // only a pure g-power can be left starting with g here
                None => debug_assert_eq!(word.syllable_count(), 1),
            },
            Generator::X(..) => return Err(WordError::NonCyclicGenerator(s.generator).into()),
        }
    }
    Ok(BlockForm {
        blocks,
        rotation,
        gamma_total,
    })
}

fn sheet(offset: &BigInt, n: u32) -> u32 {
    offset
        .mod_floor(&BigInt::from(n))
        .to_u32()
        .expect("residue below n")
        + 1
}

/// Lifts a block form: block `l` goes to sheet `1 + eta_1 + ... + eta_{l-1}`.
pub fn lift_blocks(form: &BlockForm, n: u32) -> Word {
    let mut offset = BigInt::zero();
    let mut raw = Vec::with_capacity(form.blocks.len());
    for block in &form.blocks {
        raw.push(Syllable::new(
            Generator::X(block.generator, sheet(&offset, n)),
            block.epsilon.clone(),
        ));
        offset += &block.eta;
    }
    free_reduce(raw)
}

/// Result of walking a relator through the sheets of the covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheetWalk {
    pub word: Word,
    pub final_sheet: u32,
}

/// Walks `r` letter by letter starting on sheet 1: `g^±1` moves one sheet
/// up or down, `â_j^±1` emits `x_{j,s}^±1` for the current sheet `s`.
pub fn sheet_walk_lift(r: &Word, n: u32) -> Result<SheetWalk, LiftError> {
    check_gamma_sum(r, n)?;
    let mut current: u32 = 1;
    let mut letters: Vec<Syllable> = Vec::new();
    for s in r.syllables() {
        match s.generator {
            Generator::Gamma => {
                // g^n is a full loop, so only the residue of the power matters
                let steps = s
                    .exponent
                    .abs()
                    .mod_floor(&BigInt::from(n))
                    .to_u32()
                    .expect("residue below n");
                for _ in 0..steps {
                    current = if s.exponent.is_positive() {
                        current % n + 1
                    } else if current == 1 {
                        n
                    } else {
                        current - 1
                    };
                }
            }
            Generator::Alpha(j) => {
                let sign = if s.exponent.is_positive() { 1 } else { -1 };
                let count = s.exponent.abs();
                match count.to_u32().filter(|&c| c <= 64) {
                    Some(c) => letters
                        .extend((0..c).map(|_| Syllable::new(Generator::X(j, current), sign))),
                    // long powers stay on one sheet; emit them as a single syllable
                    None => {
                        letters.push(Syllable::new(Generator::X(j, current), s.exponent.clone()))
                    }
                }
            }
            Generator::X(..) => return Err(WordError::NonCyclicGenerator(s.generator).into()),
        }
    }
    Ok(SheetWalk {
        word: free_reduce(letters),
        final_sheet: current,
    })
}

/// `G_n(w_1, ..., w_m)`: generators `x<i>.<j>` for `1 <= i <= m`,
/// `1 <= j <= n`, relators `theta_n^{j-1}(w_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPresentation {
    m: u32,
    n: u32,
    words: Vec<Word>,
}

impl CyclicPresentation {
    pub fn new(m: u32, n: u32, words: Vec<Word>) -> Result<Self, LiftError> {
        if m == 0 || n < 2 {
            return Err(LiftError::BadShape { m, n });
        }
        if words.len() != m as usize {
            return Err(LiftError::WordCount {
                m,
                found: words.len(),
            });
        }
        for w in &words {
            for generator in w.generators() {
                match generator {
                    Generator::X(i, j) if (1..=m).contains(&i) && (1..=n).contains(&j) => {}
                    _ => return Err(LiftError::GeneratorOutOfRange { generator, m, n }),
                }
            }
        }
        Ok(CyclicPresentation { m, n, words })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// All `m * n` relators, ordered by word then shift.
    pub fn expand_relators(&self) -> Vec<Word> {
        self.words
            .iter()
            .flat_map(|w| {
                (0..self.n).map(move |j| {
                    w.theta_shift(i64::from(j), self.n)
                        .expect("words are validated on construction")
                })
            })
            .collect()
    }

    fn column(&self, generator: Generator) -> usize {
        match generator {
            Generator::X(i, j) => (i as usize - 1) * self.n as usize + (j as usize - 1),
            _ => unreachable!("validated alphabet"),
        }
    }

    /// Abelianization of the covering group.
    pub fn covering_homology(&self) -> AbelianGroup {
        let size = (self.m * self.n) as usize;
        let mut matrix = IntMatrix::zeros(size, size);
        for (row, r) in self.expand_relators().iter().enumerate() {
            for s in r.syllables() {
                matrix[(row, self.column(s.generator))] += &s.exponent;
            }
        }
        AbelianGroup::from_relation_matrix(&matrix)
    }
}

impl fmt::Display for CyclicPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cyclic m={} n={}", self.m, self.n)?;
        for w in &self.words {
            if w.is_identity() {
                writeln!(f, "word")?;
            } else {
                writeln!(f, "word {w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicParseError {
    #[error("line {line}, column {column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error(transparent)]
    Invalid(#[from] LiftError),
}

fn cyclic_syntax(line: usize, column: usize, expected: &str) -> CyclicParseError {
    CyclicParseError::Syntax {
        line,
        column,
        expected: expected.to_string(),
    }
}

/// Parses the `cyclic m=<m> n=<n>` / `word <w>` format written by `Display`.
pub fn parse_cyclic(text: &str) -> Result<CyclicPresentation, CyclicParseError> {
    let mut shape: Option<(u32, u32)> = None;
    let mut words = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let lead = content[..content.len() - content.trim_start().len()]
            .chars()
            .count();
        let mut tokens = body.splitn(2, char::is_whitespace);
        let keyword = tokens.next().unwrap_or("");
        let rest = tokens.next().unwrap_or("");
        match (keyword, shape) {
            ("cyclic", None) => {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let value = |key: &str, field: Option<&&str>| {
                    field
                        .and_then(|f| f.strip_prefix(key))
                        .filter(|v| !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()))
                        .and_then(|v| v.parse::<u32>().ok())
                };
                match (
                    value("m=", fields.first()),
                    value("n=", fields.get(1)),
                    fields.len(),
                ) {
                    (Some(m), Some(n), 2) => shape = Some((m, n)),
                    _ => return Err(cyclic_syntax(line, lead + 8, "'m=<m> n=<n>'")),
                }
            }
            (_, None) => return Err(cyclic_syntax(line, lead + 1, "'cyclic m=<m> n=<n>' header")),
            ("word", Some(_)) => {
                let word_col = lead + keyword.len() + 1;
                let w = parse_word(rest)
                    .map_err(|e| cyclic_syntax(line, word_col + e.column, e.expected))?;
                words.push(w);
            }
            (_, Some(_)) => return Err(cyclic_syntax(line, lead + 1, "'word <w>'")),
        }
    }
    let (m, n) = shape.ok_or_else(|| cyclic_syntax(1, 1, "'cyclic m=<m> n=<n>' header"))?;
    Ok(CyclicPresentation::new(m, n, words)?)
}

impl FromStr for CyclicPresentation {
    type Err = CyclicParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cyclic(s)
    }
}

/// A relator that needed a convention the lifting formula does not cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftNote {
    /// Relator `relator` (1-based) began with `g^power`; that power was
    /// moved to the end before lifting.
    Rotated { relator: usize, power: BigInt },
    /// Relator `relator` was a pure power of `g` and lifts to empty words.
    PureGamma { relator: usize, power: BigInt },
}

impl fmt::Display for LiftNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftNote::Rotated { relator, power } => {
                write!(f, "relator {relator}: leading g^{power} rotated to the end")
            }
            LiftNote::PureGamma { relator, power } => {
                write!(
                    f,
                    "relator {relator}: pure power g^{power}, lifted to empty words"
                )
            }
        }
    }
}

/// A lifted presentation together with the conventions applied on the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub hat_relators: Vec<Word>,
    pub forms: Vec<BlockForm>,
    pub presentation: CyclicPresentation,
    pub notes: Vec<LiftNote>,
}

pub fn lift(p: &KnotGroupPresentation, mono: &Monodromy) -> Result<Lift, LiftError> {
    let n = mono.n();
    let hat = hat_substitution(p, mono)?;
    let mut forms = Vec::with_capacity(hat.relators().len());
    let mut words = Vec::with_capacity(hat.relators().len());
    let mut notes = Vec::new();
    for (k, r) in hat.relators().iter().enumerate() {
        let form = block_normal_form(r, n)?;
        if form.is_pure_gamma() {
            notes.push(LiftNote::PureGamma {
                relator: k + 1,
                power: form.gamma_total.clone(),
            });
        } else if !form.rotation.is_zero() {
            notes.push(LiftNote::Rotated {
                relator: k + 1,
                power: form.rotation.clone(),
            });
        }
        words.push(lift_blocks(&form, n));
        forms.push(form);
    }
    let presentation = CyclicPresentation::new(p.genus(), n, words)?;
    Ok(Lift {
        hat_relators: hat.relators().to_vec(),
        forms,
        presentation,
        notes,
    })
}

/// The `g`-word cyclic presentation of the covering group.
pub fn lift_words(
    p: &KnotGroupPresentation,
    mono: &Monodromy,
) -> Result<CyclicPresentation, LiftError> {
    lift(p, mono).map(|l| l.presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{abelianize, parse_presentation};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn mono(p: &KnotGroupPresentation, n: u32, x: &[u32]) -> Monodromy {
        Monodromy::new(&abelianize(p), n, x.to_vec()).unwrap()
    }

    fn blocks(triples: &[(u32, i64, i64)]) -> Vec<Block> {
        triples
            .iter()
            .map(|&(generator, e, eta)| Block {
                generator,
                epsilon: e.into(),
                eta: eta.into(),
            })
            .collect()
    }

    #[test]
    fn zero_monodromy_changes_nothing() {
        let p = KnotGroupPresentation::takahashi(3, 2);
        let hat = hat_substitution(&p, &mono(&p, 4, &[0, 0])).unwrap();
        assert_eq!(hat, p);
    }

    #[test]
    fn unsolvable_relator_rejects_every_monodromy() {
        // H = (0), b = (-1)
        let p = parse_presentation("genus 1\nrel a1 g^-1 a1^-1\n").unwrap();
        let h = abelianize(&p);
        for n in 2..6 {
            for x in 0..n {
                assert!(matches!(
                    Monodromy::new(&h, n, vec![x]),
                    Err(CoveringError::InvalidMonodromy { .. })
                ));
            }
        }
    }

    #[test]
    fn hat_substitution_on_solvable_instance() {
        // H = (0), b = (3): with n = 3 every x works
        let p = parse_presentation("genus 1\nrel a1^2 g a1^-2 g^2\n").unwrap();
        let h = abelianize(&p);
        let found = crate::coverings::brute_force_monodromies(&h, 3).unwrap();
        assert_eq!(found.len(), 3);
        let hat = hat_substitution(&p, &found[2]).unwrap();
        assert_eq!(hat.relators()[0], w("a1 g^2 a1 g a1^-1 g^-2 a1^-1 g^2"));
        assert!(hat.relators()[0]
            .exponent_sum(&Generator::Gamma)
            .is_multiple_of(&BigInt::from(3)));
    }

    #[test]
    fn block_form_of_takahashi_relator() {
        let form = block_normal_form(&w("a2 a1^-2 g a2^-1 g^-1"), 2).unwrap();
        assert_eq!(form.blocks, blocks(&[(2, 1, 0), (1, -2, 1), (2, -1, -1)]));
        assert!(form.rotation.is_zero());

        let empty = block_normal_form(&Word::identity(), 3).unwrap();
        assert!(empty.blocks.is_empty() && !empty.is_pure_gamma());

        let pure = block_normal_form(&w("g^6"), 3).unwrap();
        assert!(pure.blocks.is_empty() && pure.is_pure_gamma());
        assert_eq!(pure.gamma_total, BigInt::from(6));

        assert!(matches!(
            block_normal_form(&w("a1 g"), 2),
            Err(LiftError::GammaSumNotZeroModN { .. })
        ));
    }

    #[test]
    fn block_form_rotates_leading_gamma() {
        let form = block_normal_form(&w("g^2 a1 g a2 g^-3"), 2).unwrap();
        assert_eq!(form.rotation, BigInt::from(2));
        assert_eq!(form.blocks, blocks(&[(1, 1, 1), (2, 1, -1)]));
    }

    #[test]
    fn takahashi_words() {
        for n in 2..6 {
            let p = KnotGroupPresentation::takahashi(3, 2);
            let cp = lift_words(&p, &mono(&p, n, &[0, 0])).unwrap();
            assert_eq!(cp.words()[0].to_string(), "x2.1 x1.1^-2 x2.2^-1");
            assert_eq!(cp.words()[1].to_string(), "x1.1 x2.2^3 x1.2^-1");
        }
    }

    #[test]
    fn trivial_knot_lifts_to_free_group() {
        let p = KnotGroupPresentation::trivial_knot(3);
        let cp = lift_words(&p, &mono(&p, 4, &[1, 2, 3])).unwrap();
        assert!(cp.words().iter().all(Word::is_identity));
    }

    #[test]
    fn square_relator_lift() {
        // a1^2 g^4, n = 4: 2x = 0 mod 4, take x = 2
        let p = parse_presentation("genus 1\nrel a1^2 g^4\n").unwrap();
        let m = mono(&p, 4, &[2]);
        let l = lift(&p, &m).unwrap();
        assert_eq!(l.hat_relators[0], w("a1 g^2 a1 g^6"));
        assert_eq!(l.forms[0].blocks, blocks(&[(1, 1, 2), (1, 1, 6)]));
        assert_eq!(l.presentation.words()[0], w("x1.1 x1.3"));
        let walk = sheet_walk_lift(&l.hat_relators[0], 4).unwrap();
        assert_eq!(walk.word, w("x1.1 x1.3"));
        assert_eq!(walk.final_sheet, 1);
    }

    #[test]
    fn sheet_walk_examples() {
        let walk = sheet_walk_lift(&w("a1 g^5"), 5).unwrap();
        assert_eq!((walk.word, walk.final_sheet), (w("x1.1"), 1));
        let walk = sheet_walk_lift(&w("a2 a1^-2 g a2^-1 g^-1"), 2).unwrap();
        assert_eq!(walk.word, w("x2.1 x1.1^-2 x2.2^-1"));
        assert!(sheet_walk_lift(&w("g"), 2).is_err());
    }

    #[test]
    fn rotated_lift_is_a_theta_shift_of_the_walk() {
        let p = parse_presentation("genus 2\nrel g a1 g a2^-1 g^-2\nrel a2\n").unwrap();
        let m = mono(&p, 3, &[0, 0]);
        let l = lift(&p, &m).unwrap();
        assert_eq!(
            l.notes,
            vec![LiftNote::Rotated {
                relator: 1,
                power: BigInt::from(1)
            }]
        );
        let walk = sheet_walk_lift(&l.hat_relators[0], 3).unwrap();
        assert_eq!(
            walk.word.theta_shift(-1, 3).unwrap(),
            l.presentation.words()[0]
        );
        assert_eq!(l.presentation.words()[0], w("x1.1 x2.2^-1"));
    }

    #[test]
    fn expand_relators_orbit() {
        let cp = CyclicPresentation::new(1, 2, vec![w("x1.1 x1.2^-1")]).unwrap();
        assert_eq!(
            cp.expand_relators(),
            vec![w("x1.1 x1.2^-1"), w("x1.2 x1.1^-1")]
        );
        let cp = CyclicPresentation::new(2, 3, vec![Word::identity(), w("x2.3")]).unwrap();
        let rels = cp.expand_relators();
        assert_eq!(rels.len(), 6);
        assert!(rels[..3].iter().all(Word::is_identity));
        assert_eq!(rels[3..], [w("x2.3"), w("x2.1"), w("x2.2")]);
    }

    #[test]
    fn cyclic_validation() {
        assert!(matches!(
            CyclicPresentation::new(1, 2, vec![w("x2.1")]),
            Err(LiftError::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(
            CyclicPresentation::new(1, 2, vec![w("x1.3")]),
            Err(LiftError::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(
            CyclicPresentation::new(1, 2, vec![w("a1")]),
            Err(LiftError::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(
            CyclicPresentation::new(1, 1, vec![Word::identity()]),
            Err(LiftError::BadShape { .. })
        ));
        assert!(matches!(
            CyclicPresentation::new(2, 2, vec![Word::identity()]),
            Err(LiftError::WordCount { .. })
        ));
    }

    #[test]
    fn cyclic_text_round_trip() {
        let p = KnotGroupPresentation::takahashi(5, 1);
        let cp = lift_words(&p, &mono(&p, 3, &[0, 0])).unwrap();
        let text = cp.to_string();
        assert_eq!(
            text,
            "cyclic m=2 n=3\nword x2.1 x1.1^-1 x2.2^-1\nword x1.1 x2.2^5 x1.2^-1\n"
        );
        assert_eq!(parse_cyclic(&text).unwrap(), cp);
        let empty = CyclicPresentation::new(1, 2, vec![Word::identity()]).unwrap();
        assert_eq!(parse_cyclic(&empty.to_string()).unwrap(), empty);
        assert!(parse_cyclic("word x1.1\n").is_err());
        assert!(parse_cyclic("cyclic m=1\n").is_err());
        assert!(parse_cyclic("cyclic m=1 n=2\nword x1.3\n").is_err());
    }

    #[test]
    fn covering_homology_of_trivial_knot() {
        let p = KnotGroupPresentation::trivial_knot(1);
        let cp = lift_words(&p, &mono(&p, 3, &[0])).unwrap();
        let h = cp.covering_homology();
        assert_eq!((h.free_rank, h.torsion.len()), (3, 0));
    }
}
