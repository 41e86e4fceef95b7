//! Free-group words in syllable form.
//!
//! A [`Word`] is a list of `(generator, exponent)` syllables kept freely
//! reduced at all times: adjacent syllables never share a generator and no
//! exponent is zero. Exponents are arbitrary precision so symbolic powers
//! such as `a2^p` stay a single syllable however large `p` gets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Upper bound on the syllable count produced by [`Word::pow`].
pub const MAX_POWER_SYLLABLES: usize = 1 << 22;

/// A letter of one of the two alphabets used here: the knot-group alphabet
/// `a<i>`, `g` and the covering alphabet `x<i>.<j>`.
///
/// The derived order is `Alpha < Gamma < X`, then lexicographic on indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Alpha(u32),
    Gamma,
    X(u32, u32),
}

impl Generator {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, Generator::X(..))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Alpha(i) => write!(f, "a{i}"),
            Generator::Gamma => write!(f, "g"),
            Generator::X(i, j) => write!(f, "x{i}.{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: BigInt,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: impl Into<BigInt>) -> Self {
        Syllable {
            generator,
            exponent: exponent.into(),
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_one() {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.exponent)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("no image given for generator {0}")]
    MissingImage(Generator),
    #[error("generator {0} is not of the form x<i>.<j>")]
    NonCyclicGenerator(Generator),
    #[error("generator {generator} has sheet index outside 1..={n}")]
    SheetOutOfRange { generator: Generator, n: u32 },
    #[error("power of a word would exceed {MAX_POWER_SYLLABLES} syllables")]
    PowerTooLong,
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Freely reduces a raw syllable list. Zero exponents are dropped.
pub fn free_reduce<I>(raw: I) -> Word
where
    I: IntoIterator<Item = Syllable>,
{
    let mut out: Vec<Syllable> = Vec::new();
    for syl in raw {
        if syl.exponent.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some(top) if top.generator == syl.generator => {
                top.exponent += syl.exponent;
                if top.exponent.is_zero() {
                    out.pop();
                }
            }
            _ => out.push(syl),
        }
    }
    Word { syllables: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(generator: Generator) -> Self {
        Word::power_of(generator, 1)
    }

    pub fn power_of(generator: Generator, exponent: impl Into<BigInt>) -> Self {
        free_reduce([Syllable::new(generator, exponent)])
    }

    pub fn from_syllables<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = Syllable>,
    {
        free_reduce(raw)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn into_syllables(self) -> Vec<Syllable> {
        self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Sum of `|exponent|` over all syllables.
    pub fn letter_length(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exponent.abs()).sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.syllables.iter().map(|s| s.generator)
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.generator, -&s.exponent))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.syllables.iter().chain(other.syllables.iter()).cloned())
    }

    /// Sum of the exponents of every occurrence of `generator`.
    pub fn exponent_sum(&self, generator: &Generator) -> BigInt {
        self.syllables
            .iter()
            .filter(|s| &s.generator == generator)
            .map(|s| &s.exponent)
            .sum()
    }

    /// `self^exponent` in the free group.
    pub fn pow(&self, exponent: &BigInt) -> Result<Word, WordError> {
        if exponent.is_zero() || self.is_identity() {
            return Ok(Word::identity());
        }
        if self.syllables.len() == 1 {
            let s = &self.syllables[0];
            return Ok(Word::power_of(s.generator, &s.exponent * exponent));
        }
        // Split off the conjugating prefix: self = u c u^-1 with c cyclically reduced.
        let syl = &self.syllables;
        let mut lo = 0;
        let mut hi = syl.len() - 1;
        while lo < hi
            && syl[lo].generator == syl[hi].generator
            && syl[lo].exponent == -&syl[hi].exponent
        {
            lo += 1;
            hi -= 1;
        }
        let prefix = Word {
            syllables: syl[..lo].to_vec(),
        };
        let core = Word {
            syllables: syl[lo..=hi].to_vec(),
        };
        let base = if exponent.is_negative() {
            core.inverse()
        } else {
            core
        };
        let reps = exponent
            .abs()
            .to_usize()
            .filter(|r| r.saturating_mul(base.syllables.len()) <= MAX_POWER_SYLLABLES)
            .ok_or(WordError::PowerTooLong)?;
        let body = free_reduce(
            std::iter::repeat_n(base.syllables.iter(), reps)
                .flatten()
                .cloned(),
        );
        Ok(prefix.concat(&body).concat(&prefix.inverse()))
    }

    /// Homomorphic image of `self` under `images`.
    pub fn substitute(&self, images: &BTreeMap<Generator, Word>) -> Result<Word, WordError> {
        let mut raw = Vec::new();
        for s in &self.syllables {
            let image = images
                .get(&s.generator)
                .ok_or(WordError::MissingImage(s.generator))?;
            raw.extend(image.pow(&s.exponent)?.syllables);
        }
        Ok(free_reduce(raw))
    }

    /// Applies `theta_n^shift`, sending `x<i>.<j>` to `x<i>.<j+shift>` with
    /// the sheet index taken in `1..=n`.
    pub fn theta_shift(&self, shift: i64, n: u32) -> Result<Word, WordError> {
        let n = i64::from(n);
        let mut raw = Vec::with_capacity(self.syllables.len());
        for s in &self.syllables {
            match s.generator {
                Generator::X(i, j) => {
                    if j == 0 || i64::from(j) > n {
                        return Err(WordError::SheetOutOfRange {
                            generator: s.generator,
                            n: n as u32,
                        });
                    }
                    let sheet = (i64::from(j) - 1 + shift).mod_floor(&n) + 1;
                    raw.push(Syllable::new(
                        Generator::X(i, sheet as u32),
                        s.exponent.clone(),
                    ));
                }
                other => return Err(WordError::NonCyclicGenerator(other)),
            }
        }
        Ok(free_reduce(raw))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Error from parsing the word display syntax. `column` is 1-based, in
/// characters from the start of the parsed text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: expected {expected}")]
pub struct WordSyntaxError {
    pub column: usize,
    pub expected: &'static str,
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok().filter(|&i| i >= 1)
}

fn parse_generator(name: &str) -> Option<Generator> {
    if name == "g" {
        return Some(Generator::Gamma);
    }
    if let Some(rest) = name.strip_prefix('a') {
        return parse_index(rest).map(Generator::Alpha);
    }
    if let Some(rest) = name.strip_prefix('x') {
        let (i, j) = rest.split_once('.')?;
        return Some(Generator::X(parse_index(i)?, parse_index(j)?));
    }
    None
}

fn parse_exponent(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses the display syntax, e.g. `a2 a1^-2 g a2^-1 g^-1`.
///
/// Tokens are separated by whitespace. The result is freely reduced, so
/// `a1 a1^-1` parses to the identity.
pub fn parse_word(text: &str) -> Result<Word, WordSyntaxError> {
    let mut raw = Vec::new();
    let mut column = 1;
    let mut rest = text;
    while !rest.is_empty() {
        let ws = rest.len() - rest.trim_start().len();
        column += rest[..ws].chars().count();
        rest = &rest[ws..];
        if rest.is_empty() {
            break;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let (name, exp) = match token.split_once('^') {
            Some((name, exp)) => (name, Some(exp)),
            None => (token, None),
        };
        let generator = parse_generator(name).ok_or(WordSyntaxError {
            column,
            expected: "generator a<i>, g or x<i>.<j> with indices >= 1",
        })?;
        let exponent = match exp {
            None => BigInt::one(),
            Some(e) => parse_exponent(e).ok_or(WordSyntaxError {
                column: column + name.chars().count() + 1,
                expected: "integer exponent after '^'",
            })?,
        };
        raw.push(Syllable::new(generator, exponent));
        column += token.chars().count();
        rest = &rest[end..];
    }
    Ok(free_reduce(raw))
}

impl FromStr for Word {
    type Err = WordSyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{Alpha, Gamma, X};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    // Letter-by-letter reducer over (generator, +-1) pairs, independent of
    // the syllable merge in `free_reduce`.
    fn letter_reduce(raw: &[(Generator, i64)]) -> Vec<(Generator, i64)> {
        let mut stack: Vec<(Generator, i64)> = Vec::new();
        for &(g, e) in raw {
            let sign = e.signum();
            for _ in 0..e.abs() {
                if stack.last() == Some(&(g, -sign)) {
                    stack.pop();
                } else {
                    stack.push((g, sign));
                }
            }
        }
        let mut out: Vec<(Generator, i64)> = Vec::new();
        for (g, e) in stack {
            match out.last_mut() {
                Some(top) if top.0 == g => top.1 += e,
                _ => out.push((g, e)),
            }
        }
        out
    }

    fn as_pairs(word: &Word) -> Vec<(Generator, i64)> {
        word.syllables()
            .iter()
            .map(|s| (s.generator, s.exponent.to_i64().unwrap()))
            .collect()
    }

    #[test]
    fn free_reduce_examples() {
        let r = free_reduce([Syllable::new(Alpha(1), 1), Syllable::new(Alpha(1), -1)]);
        assert!(r.is_identity());

        let r = free_reduce([
            Syllable::new(Alpha(1), 2),
            Syllable::new(Alpha(1), 3),
            Syllable::new(Gamma, 1),
        ]);
        assert_eq!(as_pairs(&r), vec![(Alpha(1), 5), (Gamma, 1)]);

        let raw = [
            (Alpha(2), 1),
            (Gamma, 1),
            (Gamma, -1),
            (Alpha(2), -1),
            (Alpha(1), 4),
        ];
        let r = free_reduce(raw.iter().map(|&(g, e)| Syllable::new(g, e)));
        assert_eq!(as_pairs(&r), letter_reduce(&raw));
        assert_eq!(as_pairs(&r), vec![(Alpha(1), 4)]);
    }

    #[test]
    fn zero_exponent_is_absorbed() {
        let r = free_reduce([
            Syllable::new(Alpha(1), 1),
            Syllable::new(Gamma, 0),
            Syllable::new(Alpha(1), 1),
        ]);
        assert_eq!(as_pairs(&r), vec![(Alpha(1), 2)]);
    }

    #[test]
    fn exponent_sums_on_takahashi_relators() {
        let r1 = w("a2 a1^-2 g a2^-1 g^-1");
        assert_eq!(r1.exponent_sum(&Alpha(1)), BigInt::from(-2));
        assert_eq!(Word::identity().exponent_sum(&Gamma), BigInt::zero());
        let r2 = w("a1 g a2^3 a1^-1 g^-1");
        assert_eq!(r2.exponent_sum(&Gamma), BigInt::zero());
        assert_eq!(r2.exponent_sum(&Alpha(2)), BigInt::from(3));
    }

    #[test]
    fn substitute_examples() {
        let mut images = BTreeMap::new();
        images.insert(Alpha(1), w("a1 g^2"));
        assert_eq!(w("a1").substitute(&images).unwrap(), w("a1 g^2"));
        assert_eq!(w("a1^-1").substitute(&images).unwrap(), w("g^-2 a1^-1"));

        let mut images = BTreeMap::new();
        images.insert(Alpha(1), w("a1 g"));
        images.insert(Gamma, w("g"));
        assert_eq!(
            w("a1 g a1^-1").substitute(&images).unwrap(),
            w("a1 g a1^-1")
        );
        // letter expansion: a1 g | g | g^-1 a1^-1
        let expanded = [
            (Alpha(1), 1),
            (Gamma, 1),
            (Gamma, 1),
            (Gamma, -1),
            (Alpha(1), -1),
        ];
        assert_eq!(
            as_pairs(&w("a1 g a1^-1").substitute(&images).unwrap()),
            letter_reduce(&expanded)
        );
    }

    #[test]
    fn substitute_missing_image() {
        let images = BTreeMap::new();
        assert_eq!(
            w("a1 g").substitute(&images),
            Err(WordError::MissingImage(Alpha(1)))
        );
    }

    #[test]
    fn pow_of_conjugate() {
        let c = w("a1 a2 g a1^-1");
        let cubed = c.pow(&BigInt::from(3)).unwrap();
        assert_eq!(cubed, c.concat(&c).concat(&c));
        assert_eq!(
            c.pow(&BigInt::from(-2)).unwrap(),
            c.inverse().concat(&c.inverse())
        );
        assert_eq!(
            w("g^3")
                .pow(&BigInt::from(10).pow(30))
                .unwrap()
                .exponent_sum(&Gamma),
            BigInt::from(3) * BigInt::from(10).pow(30)
        );
    }

    #[test]
    fn theta_shift_examples() {
        let word = w("x2.1 x1.1^-2 x2.2^-1");
        assert_eq!(word.theta_shift(1, 2).unwrap(), w("x2.2 x1.2^-2 x2.1^-1"));
        assert_eq!(word.theta_shift(0, 2).unwrap(), word);
        assert_eq!(word.theta_shift(2, 2).unwrap(), word);
        assert_eq!(
            word.theta_shift(-3, 2).unwrap(),
            word.theta_shift(1, 2).unwrap()
        );
    }

    #[test]
    fn theta_shift_rejects_knot_alphabet() {
        assert_eq!(
            w("x1.1 g").theta_shift(1, 3),
            Err(WordError::NonCyclicGenerator(Gamma))
        );
        assert!(matches!(
            w("x1.4").theta_shift(1, 3),
            Err(WordError::SheetOutOfRange { .. })
        ));
    }

    #[test]
    fn display_and_parse() {
        let word = free_reduce([
            Syllable::new(Alpha(2), 1),
            Syllable::new(Alpha(1), -2),
            Syllable::new(Gamma, 1),
            Syllable::new(X(3, 12), 7),
        ]);
        assert_eq!(word.to_string(), "a2 a1^-2 g x3.12^7");
        assert_eq!(w(&word.to_string()), word);
        assert_eq!(w("   ").to_string(), "");
    }

    #[test]
    fn parse_errors_carry_columns() {
        assert_eq!(parse_word("a1 b2").unwrap_err().column, 4);
        assert_eq!(parse_word("a1  g^x").unwrap_err().column, 7);
        assert_eq!(parse_word("a0").unwrap_err().column, 1);
        assert!(parse_word("x1").is_err());
        assert!(parse_word("a1^+2").is_err());
        assert!(parse_word("a1^").is_err());
    }

    #[test]
    fn generator_order() {
        let mut gens = vec![X(1, 2), Gamma, Alpha(3), Alpha(1), X(1, 1), X(1, 1)];
        gens.sort();
        gens.dedup();
        assert_eq!(gens, vec![Alpha(1), Alpha(3), Gamma, X(1, 1), X(1, 2)]);
    }
}
