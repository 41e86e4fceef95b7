//! Exact integer matrix algebra.
//!
//! Smith normal form with unimodular transforms, and the solution set of a
//! square linear congruence system `H x = -b (mod n)` described by a
//! particular solution plus generators with periods.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("pad length {pad_to} is shorter than the {nonzero} nonzero invariant factors")]
    PadTooShort { pad_to: usize, nonzero: usize },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u32),
    #[error("expected a {expected} system, got {found}")]
    ShapeMismatch { expected: String, found: String },
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = IntMatrix::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows<T, R>(rows: R) -> Self
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal<T: Into<BigInt>>(entries: impl IntoIterator<Item = T>) -> Self {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Restriction to the first `cols` columns.
    pub fn leading_columns(&self, cols: usize) -> IntMatrix {
        assert!(cols <= self.cols);
        IntMatrix::from_rows((0..self.rows).map(|i| self.row(i)[..cols].to_vec()))
            .with_shape(self.rows, cols)
    }

    /// Appends `column` on the right.
    pub fn augment(&self, column: &[BigInt]) -> IntMatrix {
        assert_eq!(column.len(), self.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            out[(i, self.cols)] = column[i].clone();
        }
        out
    }

    // `from_rows` cannot infer a column count for zero rows.
    fn with_shape(mut self, rows: usize, cols: usize) -> IntMatrix {
        if self.data.is_empty() {
            self.rows = rows;
            self.cols = cols;
        }
        self
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = factor * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = factor * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

/// A violated [`SnfResult`] invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnfViolation {
    #[error("transform shapes do not match the input")]
    Shape,
    #[error("U*M*V differs from D")]
    Product,
    #[error("D has a nonzero off-diagonal entry")]
    OffDiagonal,
    #[error("D has a negative diagonal entry")]
    Negative,
    #[error("diagonal entries break the divisibility chain at position {0}")]
    Divisibility(usize),
    #[error("{0} is not unimodular")]
    NotUnimodular(&'static str),
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows.min(self.d.cols);
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|e| !e.is_zero()).count()
    }

    /// Checks every invariant against the matrix the result was computed from.
    pub fn verify(&self, m: &IntMatrix) -> Result<(), SnfViolation> {
        if self.u.rows != m.rows
            || self.u.cols != m.rows
            || self.v.rows != m.cols
            || self.v.cols != m.cols
            || self.d.rows != m.rows
            || self.d.cols != m.cols
        {
            return Err(SnfViolation::Shape);
        }
        if self.u.mul(m).mul(&self.v) != self.d {
            return Err(SnfViolation::Product);
        }
        for i in 0..self.d.rows {
            for j in 0..self.d.cols {
                if i != j && !self.d[(i, j)].is_zero() {
                    return Err(SnfViolation::OffDiagonal);
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(Signed::is_negative) {
            return Err(SnfViolation::Negative);
        }
        for k in 1..diag.len() {
            // zero is divisible by everything, and nothing nonzero follows a zero
            let ok = if diag[k - 1].is_zero() {
                diag[k].is_zero()
            } else {
                diag[k].is_multiple_of(&diag[k - 1])
            };
            if !ok {
                return Err(SnfViolation::Divisibility(k));
            }
        }
        if self.u.det().abs() != BigInt::one() {
            return Err(SnfViolation::NotUnimodular("U"));
        }
        if self.v.det().abs() != BigInt::one() {
            return Err(SnfViolation::NotUnimodular("V"));
        }
        Ok(())
    }
}

/// Smith normal form by elementary operations, always pivoting on the entry
/// of least absolute value in the remaining block (ties: lowest row, then
/// lowest column).
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    'diag: for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| x.abs() < a[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'diag;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a[(t, t)].clone();
            let mut clear = true;
            for i in t + 1..rows {
                let q = &a[(i, t)] / &p;
                if !q.is_zero() {
                    let neg = -q;
                    a.add_row_multiple(i, t, &neg);
                    u.add_row_multiple(i, t, &neg);
                }
                clear &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &a[(t, j)] / &p;
                if !q.is_zero() {
                    let neg = -q;
                    a.add_col_multiple(j, t, &neg);
                    v.add_col_multiple(j, t, &neg);
                }
                clear &= a[(t, j)].is_zero();
            }
            if !clear {
                continue;
            }
            let bad_row =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    let result = SnfResult { d: a, u, v };
    debug_assert_eq!(result.verify(m), Ok(()));
    result
}

/// Diagonal of the Smith form, nonzero entries first, zero padded to `pad_to`.
pub fn invariant_factors(m: &IntMatrix, pad_to: usize) -> Result<Vec<BigInt>, LinalgError> {
    let mut factors: Vec<BigInt> = smith_normal_form(m)
        .diagonal()
        .into_iter()
        .filter(|e| !e.is_zero())
        .collect();
    if factors.len() > pad_to {
        return Err(LinalgError::PadTooShort {
            pad_to,
            nonzero: factors.len(),
        });
    }
    factors.resize(pad_to, BigInt::zero());
    Ok(factors)
}

/// `gcd(a, n)` with the convention `gcd(0, n) = n`.
pub fn gcd_with_modulus(a: &BigInt, n: u32) -> u32 {
    let g = a.gcd(&BigInt::from(n));
    g.to_u32().expect("gcd with a u32 modulus fits in u32")
}

/// A finitely generated abelian group `Z^free_rank + Z_t1 + ... + Z_ts`
/// with `1 < t1 | t2 | ... | ts`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// The group with one generator per column and one relation per row.
    pub fn from_relation_matrix(relations: &IntMatrix) -> AbelianGroup {
        let snf = smith_normal_form(relations);
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|e| !e.is_zero()).count();
        AbelianGroup {
            free_rank: relations.cols - rank,
            torsion: diag.into_iter().filter(|e| *e > BigInt::one()).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Solutions of `H x = -b (mod n)` for square `H`.
///
/// Every solution is `particular + sum c_k * basis[k].0 (mod n)` with
/// `0 <= c_k < basis[k].1`, and distinct coefficient choices give distinct
/// solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSolutionSet {
    pub modulus: u32,
    pub particular: Option<Vec<u32>>,
    pub basis: Vec<(Vec<u32>, u32)>,
}

fn residue(x: &BigInt, n: u32) -> u32 {
    x.mod_floor(&BigInt::from(n))
        .to_u32()
        .expect("residue below a u32 modulus")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Solves `H x = -b (mod n)` through the Smith form `U H V = D`: with
/// `x = V y` the system splits into `D_ii y_i = (U(-b))_i (mod n)`.
pub fn solve_congruences(
    h: &IntMatrix,
    b: &[BigInt],
    n: u32,
) -> Result<CongruenceSolutionSet, LinalgError> {
    if n < 2 {
        return Err(LinalgError::ModulusTooSmall(n));
    }
    let g = h.rows;
    if h.cols != g || b.len() != g {
        return Err(LinalgError::ShapeMismatch {
            expected: format!("{g}x{g} matrix with length-{g} vector"),
            found: format!(
                "{}x{} matrix with length-{} vector",
                h.rows,
                h.cols,
                b.len()
            ),
        });
    }
    let snf = smith_normal_form(h);
    let neg_b: Vec<BigInt> = b.iter().map(|x| -x).collect();
    let c = snf.u.mul_vec(&neg_b);
    let modulus = BigInt::from(n);

    let mut y = Vec::with_capacity(g);
    let mut basis = Vec::new();
    let mut solvable = true;
    for i in 0..g {
        let dii = &snf.d[(i, i)];
        let gi = BigInt::from(gcd_with_modulus(dii, n));
        let ci = c[i].mod_floor(&modulus);
        if !ci.is_multiple_of(&gi) {
            solvable = false;
            y.push(BigInt::zero());
            continue;
        }
        let reduced = &modulus / &gi;
        let yi = if reduced.is_one() {
            BigInt::zero()
        } else {
            (&ci / &gi) * mod_inverse(&(dii / &gi), &reduced) % &reduced
        };
        y.push(yi);
        if gi > BigInt::one() {
            let mut step = vec![BigInt::zero(); g];
            step[i] = reduced;
            let column = snf.v.mul_vec(&step);
            basis.push((
                column.iter().map(|v| residue(v, n)).collect(),
                gi.to_u32().expect("gcd fits"),
            ));
        }
    }

    if !solvable {
        return Ok(CongruenceSolutionSet {
            modulus: n,
            particular: None,
            basis: Vec::new(),
        });
    }
    let particular = snf.v.mul_vec(&y).iter().map(|v| residue(v, n)).collect();
    Ok(CongruenceSolutionSet {
        modulus: n,
        particular: Some(particular),
        basis,
    })
}

impl CongruenceSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn cardinality(&self) -> BigUint {
        if self.particular.is_none() {
            return BigUint::zero();
        }
        self.basis.iter().map(|(_, p)| BigUint::from(*p)).product()
    }

    /// All solutions in lexicographic order, generated lazily.
    pub fn iter_lex(&self) -> LexSolutions {
        LexSolutions::new(self)
    }
}

/// Row-style Hermite basis of the lattice spanned by `generators` together
/// with `n * e_k` for every `k`; row `k` has its leading entry in column `k`.
fn echelon_basis(generators: &[Vec<u32>], dim: usize, n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for k in 0..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[k] = BigInt::from(n);
        rows.push(e);
    }
    let mut out = Vec::with_capacity(dim);
    for col in 0..dim {
        // fold every remaining row's entry in `col` into a single gcd row
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            let Some(p) = pivot.take() else {
                pivot = Some(row);
                continue;
            };
            let e = p[col].extended_gcd(&row[col]);
            let pa = &p[col] / &e.gcd;
            let ra = &row[col] / &e.gcd;
            let combined: Vec<BigInt> = p
                .iter()
                .zip(&row)
                .map(|(x, y)| &e.x * x + &e.y * y)
                .collect();
            let cleared: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &ra * x - &pa * y).collect();
            debug_assert!(cleared[col].is_zero());
            rest.push(cleared);
            pivot = Some(combined);
        }
        let mut p = pivot.expect("lattice contains n*e_k, so every column has a pivot");
        if p[col].is_negative() {
            p.iter_mut().for_each(|x| *x = -&*x);
        }
        out.push(p);
        rows = rest;
    }
    out
}

/// Lexicographic iterator over a [`CongruenceSolutionSet`].
pub struct LexSolutions {
    n: u64,
    // per row: (diagonal entry, row entries mod n)
    rows: Vec<(u64, Vec<u64>)>,
    // stack[k] is the partial vector before choosing coordinate k
    stack: Vec<Vec<u64>>,
    counters: Vec<u64>,
    done: bool,
}

impl LexSolutions {
    fn new(set: &CongruenceSolutionSet) -> Self {
        let n = set.modulus;
        let Some(particular) = &set.particular else {
            return LexSolutions {
                n: u64::from(n),
                rows: Vec::new(),
                stack: Vec::new(),
                counters: Vec::new(),
                done: true,
            };
        };
        let dim = particular.len();
        let gens: Vec<Vec<u32>> = set.basis.iter().map(|(v, _)| v.clone()).collect();
        let rows = echelon_basis(&gens, dim, n)
            .into_iter()
            .enumerate()
            .map(|(k, row)| {
                let d = row[k].to_u64().expect("diagonal divides n");
                let reduced = row.iter().map(|x| u64::from(residue(x, n))).collect();
                (d, reduced)
            })
            .collect();
        let mut it = LexSolutions {
            n: u64::from(n),
            rows,
            stack: vec![particular.iter().map(|&x| u64::from(x)).collect()],
            counters: vec![0; dim],
            done: false,
        };
        it.descend_from(0);
        it
    }

    /// Fills `stack[k+1..]` using the current counters from level `k` down.
    fn descend_from(&mut self, k: usize) {
        self.stack.truncate(k + 1);
        for level in k..self.rows.len() {
            let base = &self.stack[level];
            let (d, row) = &self.rows[level];
            let target = base[level] % d + self.counters[level] * d;
            // base[level] + c*d = target (mod n), with d | target - base[level]
            let c = ((target + self.n - base[level]) % self.n) / d;
            let next: Vec<u64> = base
                .iter()
                .zip(row)
                .map(|(x, r)| (x + c * r) % self.n)
                .collect();
            self.stack.push(next);
        }
    }
}

impl Iterator for LexSolutions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let current: Vec<u32> = self
            .stack
            .last()
            .expect("stack holds at least the particular solution")
            .iter()
            .map(|&x| x as u32)
            .collect();
        // advance the odometer, deepest level first
        let mut level = self.rows.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            level -= 1;
            let d = self.rows[level].0;
            if self.counters[level] + 1 < self.n / d {
                self.counters[level] += 1;
                for c in &mut self.counters[level + 1..] {
                    *c = 0;
                }
                self.descend_from(level);
                break;
            }
        }
        Some(current)
    }
}
