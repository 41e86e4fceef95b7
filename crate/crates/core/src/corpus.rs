//! Seeded random inputs for the oracle suites.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::coverings::{enumerate_monodromies, Monodromy};
use crate::linalg::IntMatrix;
use crate::presentation::{abelianize, KnotGroupPresentation};
use crate::word::{Generator, Syllable, Word};

#[derive(Clone, Copy, Debug)]
pub struct PresentationShape {
    pub max_genus: u32,
    /// Raw syllables drawn per relator (before free reduction).
    pub max_relator_len: usize,
    pub max_abs_exponent: i64,
}

impl Default for PresentationShape {
    fn default() -> Self {
        PresentationShape {
            max_genus: 3,
            max_relator_len: 12,
            max_abs_exponent: 5,
        }
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, genus: u32, len: usize, max_abs: i64) -> Word {
    let raw: Vec<Syllable> = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..=genus);
            let generator = if k == 0 {
                Generator::Gamma
            } else {
                Generator::Alpha(k)
            };
            let mut e = rng.gen_range(1..=max_abs);
            if rng.gen_bool(0.5) {
                e = -e;
            }
            Syllable::new(generator, e)
        })
        .collect();
    Word::from_syllables(raw)
}

pub fn random_presentation<R: Rng + ?Sized>(
    rng: &mut R,
    shape: PresentationShape,
) -> KnotGroupPresentation {
    let genus = rng.gen_range(1..=shape.max_genus);
    let relators = (0..genus)
        .map(|_| {
            let len = rng.gen_range(0..=shape.max_relator_len);
            random_word(rng, genus, len, shape.max_abs_exponent)
        })
        .collect();
    KnotGroupPresentation::new(genus, relators).expect("alphabet respects genus")
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    // bias toward sparse and rank-deficient matrices now and then
    let density = *[1.0, 1.0, 0.6, 0.3].choose(rng).expect("nonempty");
    IntMatrix::from_rows((0..rows).map(|_| {
        (0..cols)
            .map(|_| {
                if rng.gen_bool(density) {
                    BigInt::from(rng.gen_range(-bound..=bound))
                } else {
                    BigInt::from(0)
                }
            })
            .collect::<Vec<_>>()
    }))
}

/// A presentation with a covering of degree `n` and one of its monodromies,
/// found by rejection sampling.
pub fn random_valid_lift<R: Rng + ?Sized>(
    rng: &mut R,
    shape: PresentationShape,
    max_n: u32,
) -> (KnotGroupPresentation, Monodromy) {
    loop {
        let p = random_presentation(rng, shape);
        let n = rng.gen_range(2..=max_n);
        let h = abelianize(&p);
        let list = enumerate_monodromies(&h, n, Some(256)).expect("n >= 2");
        if let Some(m) = list.monodromies.choose(rng) {
            return (p, m.clone());
        }
    }
}
