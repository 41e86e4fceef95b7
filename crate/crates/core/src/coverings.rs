//! Existence, uniqueness, counting and enumeration of n-fold
//! strongly-cyclic branched coverings.
//!
//! With the meridian `g` sent to `1`, a covering is the same thing as a
//! vector `x` in `Z_n^g` with `H x + b = 0 (mod n)`, and distinct vectors
//! give inequivalent coverings.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::{gcd_with_modulus, solve_congruences, CongruenceSolutionSet, IntMatrix};
use crate::presentation::HomologyData;

/// Largest `n^g` that [`brute_force_monodromies`] will scan.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// Largest solution count [`enumerate_monodromies`] materializes without a cap.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("covering degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("monodromy has {found} entries, genus is {genus}")]
    WrongLength { genus: usize, found: usize },
    #[error("monodromy entry {value} is not reduced mod {n}")]
    NotReduced { value: u32, n: u32 },
    #[error("monodromy violates relator {row}: H x + b = {residue} (mod {n}), expected 0")]
    InvalidMonodromy { row: usize, residue: u32, n: u32 },
    #[error("{count} coverings exist, more than the enumeration limit {limit}")]
    CountExceedsLimit { count: BigUint, limit: u64 },
    #[error("search space n^g = {size} exceeds {BRUTE_FORCE_LIMIT}")]
    SearchSpaceTooLarge { size: BigUint },
}

/// A monodromy `a_i -> x_i`, `g -> 1` into `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monodromy {
    n: u32,
    x: Vec<u32>,
}

impl Monodromy {
    /// Validates `x` against the congruences of `h`.
    pub fn new(h: &HomologyData, n: u32, x: Vec<u32>) -> Result<Self, CoveringError> {
        check_degree(n)?;
        if x.len() != h.genus() {
            return Err(CoveringError::WrongLength {
                genus: h.genus(),
                found: x.len(),
            });
        }
        if let Some(&value) = x.iter().find(|&&v| v >= n) {
            return Err(CoveringError::NotReduced { value, n });
        }
        if let Some((row, residue)) = first_violation(h, n, &x) {
            return Err(CoveringError::InvalidMonodromy { row, residue, n });
        }
        Ok(Monodromy { n, x })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Images of `a1..a<g>`.
    pub fn images(&self) -> &[u32] {
        &self.x
    }

    pub fn gamma_image(&self) -> u32 {
        1
    }
}

fn check_degree(n: u32) -> Result<(), CoveringError> {
    if n < 2 {
        Err(CoveringError::DegreeTooSmall(n))
    } else {
        Ok(())
    }
}

/// First row `i` (1-based) with `(H x + b)_i != 0 (mod n)`, with its residue.
pub fn first_violation(h: &HomologyData, n: u32, x: &[u32]) -> Option<(usize, u32)> {
    violated_row(&h.h, &h.b, n, x)
}

pub(crate) fn violated_row(h: &IntMatrix, b: &[BigInt], n: u32, x: &[u32]) -> Option<(usize, u32)> {
    let modulus = BigInt::from(n);
    (0..b.len()).find_map(|i| {
        let value: BigInt = h
            .row(i)
            .iter()
            .zip(x)
            .map(|(a, &xi)| a * BigInt::from(xi))
            .sum::<BigInt>()
            + &b[i];
        let r = value.mod_floor(&modulus);
        (!r.is_zero()).then(|| (i + 1, r.to_u32().expect("residue below n")))
    })
}

/// A covering exists iff `gcd(e_i, n) = gcd(e'_i, n)` for every `i`.
///
/// # Panics
/// If `n < 2`.
pub fn covering_exists(h: &HomologyData, n: u32) -> bool {
    assert!(n >= 2, "covering degree must be at least 2");
    h.e.iter()
        .zip(&h.e_prime)
        .all(|(e, ep)| gcd_with_modulus(e, n) == gcd_with_modulus(ep, n))
}

/// `n^d * gcd(t_1, n) * ... * gcd(t_s, n)` when a covering exists, else 0.
///
/// # Panics
/// If `n < 2`.
pub fn covering_count(h: &HomologyData, n: u32) -> BigUint {
    if !covering_exists(h, n) {
        return BigUint::zero();
    }
    let free = BigUint::from(n).pow(h.free_rank as u32);
    h.torsion
        .iter()
        .map(|t| BigUint::from(gcd_with_modulus(t, n)))
        .fold(free, |acc, f| acc * f)
}

/// Whether the covering of degree `n` is unique: the ambient homology is
/// finite and its order is prime to `n`.
pub fn unique_covering(h: &HomologyData, n: u32) -> bool {
    assert!(n >= 2, "covering degree must be at least 2");
    let order: BigInt = h.torsion.iter().product();
    h.free_rank == 0 && order.gcd(&BigInt::from(n)).is_one()
}

/// Coverings with monodromies `x` and `y` are equivalent iff `y = u x` for
/// a unit `u` of `Z_n` fixing the meridian image `1`, which leaves only `u = 1`.
pub fn equivalent_monodromies(x: &[u32], y: &[u32], n: u32) -> bool {
    let n64 = u64::from(n);
    x.len() == y.len()
        && (1..n64).any(|u| {
            u.gcd(&n64) == 1
                && u % n64 == 1 % n64
                && x.iter()
                    .zip(y)
                    .all(|(&a, &b)| (u * u64::from(a)) % n64 == u64::from(b))
        })
}

/// The solution set of `H x = -b (mod n)`.
pub fn solution_set(h: &HomologyData, n: u32) -> Result<CongruenceSolutionSet, CoveringError> {
    check_degree(n)?;
    Ok(solve_congruences(&h.h, &h.b, n).expect("H is square and b matches its size"))
}

/// A possibly truncated, lexicographically ordered list of monodromies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyList {
    pub count: BigUint,
    pub monodromies: Vec<Monodromy>,
    pub truncated: bool,
}

/// Materializes the monodromies in lexicographic order.
///
/// With `limit = Some(cap)` at most `cap` are returned and `truncated` is
/// set when more exist. Without a cap, a count above [`MATERIALIZE_LIMIT`]
/// is an error carrying the exact count.
pub fn enumerate_monodromies(
    h: &HomologyData,
    n: u32,
    limit: Option<usize>,
) -> Result<MonodromyList, CoveringError> {
    let set = solution_set(h, n)?;
    let count = set.cardinality();
    if limit.is_none() && count > BigUint::from(MATERIALIZE_LIMIT) {
        return Err(CoveringError::CountExceedsLimit {
            count,
            limit: MATERIALIZE_LIMIT,
        });
    }
    let take = limit.unwrap_or(usize::MAX);
    let monodromies: Vec<Monodromy> = set
        .iter_lex()
        .take(take)
        .map(|x| {
            debug_assert_eq!(first_violation(h, n, &x), None);
            Monodromy { n, x }
        })
        .collect();
    let truncated = BigUint::from(monodromies.len()) < count;
    Ok(MonodromyList {
        count,
        monodromies,
        truncated,
    })
}

/// Exhaustive scan of `Z_n^g`, independent of the Smith form route.
pub fn brute_force_monodromies(h: &HomologyData, n: u32) -> Result<Vec<Monodromy>, CoveringError> {
    check_degree(n)?;
    let g = h.genus();
    let size = BigUint::from(n).pow(g as u32);
    if size > BigUint::from(BRUTE_FORCE_LIMIT) {
        return Err(CoveringError::SearchSpaceTooLarge { size });
    }
    let modulus = BigInt::from(n);
    let reduce = |v: &BigInt| v.mod_floor(&modulus).to_u64().expect("residue below n");
    let rows: Vec<Vec<u64>> = (0..g)
        .map(|i| h.h.row(i).iter().map(reduce).collect())
        .collect();
    let b: Vec<u64> = h.b.iter().map(reduce).collect();
    let n64 = u64::from(n);

    let mut out = Vec::new();
    let mut x = vec![0u32; g];
    loop {
        let ok = rows.iter().zip(&b).all(|(row, bi)| {
            let s = row
                .iter()
                .zip(&x)
                .fold(*bi, |acc, (a, &xi)| (acc + a * u64::from(xi)) % n64);
            s == 0
        });
        if ok {
            out.push(Monodromy { n, x: x.clone() });
        }
        // odometer, last coordinate fastest
        let mut k = g;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            x[k] += 1;
            if x[k] < n {
                break;
            }
            x[k] = 0;
        }
    }
}

/// Everything known about coverings of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringReport {
    pub n: u32,
    pub exists: bool,
    pub count: BigUint,
    pub unique: bool,
    pub monodromies: Vec<Monodromy>,
    pub truncated: bool,
}

pub fn covering_report(
    h: &HomologyData,
    n: u32,
    cap: usize,
) -> Result<CoveringReport, CoveringError> {
    check_degree(n)?;
    let list = enumerate_monodromies(h, n, Some(cap))?;
    let count = covering_count(h, n);
    debug_assert_eq!(count, list.count);
    Ok(CoveringReport {
        n,
        exists: !count.is_zero(),
        count,
        unique: unique_covering(h, n),
        monodromies: list.monodromies,
        truncated: list.truncated,
    })
}
