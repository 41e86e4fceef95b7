//! Seeded oracle suites, run by `knotcover selftest`.
//!
//! Each suite draws its cases from a [`ChaCha8Rng`] seeded with the given
//! seed, so a seed always reproduces the same cases. The fingerprint of a
//! suite hashes the textual form of every case it ran.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{random_matrix, random_presentation, random_valid_lift, PresentationShape};
use crate::coverings::{brute_force_monodromies, covering_count, covering_exists, unique_covering};
use crate::lift::{lift, sheet_walk_lift};
use crate::linalg::smith_normal_form;
use crate::presentation::abelianize;
use crate::word::Generator;

#[derive(Clone, Copy, Debug)]
pub struct SelftestOptions {
    pub seed: u64,
    pub snf_cases: usize,
    pub count_cases: usize,
    pub lift_cases: usize,
    /// Test hook: perturb every Smith form before it is checked.
    pub corrupt_snf: bool,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            seed: 42,
            snf_cases: 200,
            count_cases: 500,
            lift_cases: 500,
            corrupt_snf: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
    pub fingerprint: u64,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
            fingerprint: FNV_OFFSET,
        }
    }

    fn record(&mut self, case: &str, outcome: Result<(), String>) {
        for b in case.bytes().chain(*b"\n") {
            self.fingerprint = (self.fingerprint ^ u64::from(b)).wrapping_mul(FNV_PRIME);
        }
        match outcome {
            Ok(()) => self.passed += 1,
            Err(msg) => {
                self.failed += 1;
                if self.first_failure.is_none() {
                    self.first_failure = Some(format!("{case}: {msg}"));
                }
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

pub fn run(opts: SelftestOptions) -> SelftestReport {
    SelftestReport {
        seed: opts.seed,
        suites: vec![snf_suite(&opts), count_suite(&opts), lift_suite(&opts)],
    }
}

/// `U M V = D`, unimodular transforms, nonnegative divisibility chain.
pub fn snf_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut suite = SuiteResult::new("snf");
    for _ in 0..opts.snf_cases {
        let m = random_matrix(&mut rng, 6, 20);
        let mut snf = smith_normal_form(&m);
        if opts.corrupt_snf {
            snf.d[(0, 0)] += 1;
        }
        suite.record(&m.to_string(), snf.verify(&m).map_err(|e| e.to_string()));
    }
    suite
}

/// Existence and count formulas against an exhaustive scan of `Z_n^g`.
pub fn count_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut suite = SuiteResult::new("count-vs-brute-force");
    for _ in 0..opts.count_cases {
        let p = random_presentation(&mut rng, PresentationShape::default());
        let h = abelianize(&p);
        for n in 2..=12u32 {
            let case = format!("{} n={n}", p.to_string().replace('\n', "; "));
            let outcome = (|| {
                let brute = brute_force_monodromies(&h, n).map_err(|e| e.to_string())?;
                let exists = covering_exists(&h, n);
                if exists != !brute.is_empty() {
                    return Err(format!(
                        "exists = {exists}, brute force found {}",
                        brute.len()
                    ));
                }
                let count = covering_count(&h, n);
                if count != BigUint::from(brute.len()) {
                    return Err(format!(
                        "count = {count}, brute force found {}",
                        brute.len()
                    ));
                }
                if unique_covering(&h, n) && !count.is_one() {
                    return Err(format!("unique covering but count = {count}"));
                }
                Ok(())
            })();
            suite.record(&case, outcome);
        }
    }
    suite
}

/// Block-formula lift against the sheet walk, and closure of every walk.
pub fn lift_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(2));
    let mut suite = SuiteResult::new("lift-vs-sheet-walk");
    for _ in 0..opts.lift_cases {
        let (p, mono) = random_valid_lift(&mut rng, PresentationShape::default(), 8);
        let n = mono.n();
        let case = format!(
            "{} n={n} x={:?}",
            p.to_string().replace('\n', "; "),
            mono.images()
        );
        let outcome = (|| {
            let l = lift(&p, &mono).map_err(|e| e.to_string())?;
            for (k, r) in l.hat_relators.iter().enumerate() {
                let walk = sheet_walk_lift(r, n).map_err(|e| e.to_string())?;
                if walk.final_sheet != 1 {
                    return Err(format!(
                        "relator {}: walk ends on sheet {}",
                        k + 1,
                        walk.final_sheet
                    ));
                }
                // the block lift puts the first hat letter on sheet 1; the walk
                // starts at the basepoint, before any leading g-power
                let lead = match r.syllables().first() {
                    Some(s) if s.generator == Generator::Gamma => s.exponent.clone(),
                    _ => BigInt::zero(),
                };
                let shift = lead
                    .mod_floor(&BigInt::from(n))
                    .to_i64()
                    .expect("residue below n");
                let expected = walk
                    .word
                    .theta_shift(-shift, n)
                    .map_err(|e| e.to_string())?;
                if expected != l.presentation.words()[k] {
                    return Err(format!(
                        "relator {}: block lift {} but sheet walk {}",
                        k + 1,
                        l.presentation.words()[k],
                        expected
                    ));
                }
            }
            Ok(())
        })();
        suite.record(&case, outcome);
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seed: u64) -> SelftestOptions {
        SelftestOptions {
            seed,
            snf_cases: 20,
            count_cases: 20,
            lift_cases: 20,
            corrupt_snf: false,
        }
    }

    #[test]
    fn passes_and_is_deterministic() {
        let a = run(small(42));
        assert!(a.ok(), "{a:?}");
        let b = run(small(42));
        assert_eq!(a, b);
        let c = run(small(43));
        assert_ne!(a.suites[0].fingerprint, c.suites[0].fingerprint);
    }

    #[test]
    fn corrupted_snf_is_reported() {
        let report = run(SelftestOptions {
            corrupt_snf: true,
            ..small(42)
        });
        assert!(!report.ok());
        assert_eq!(report.suites[0].passed, 0);
        assert!(report.suites[0].first_failure.is_some());
    }
}
