//! Exact linear algebra: fraction-free Gaussian elimination over the
//! integers, subspaces with canonical echelon forms, dense rational matrices.
//!
//! Pivoting is fixed: columns are scanned left to right and the first row
//! (in current order) with a nonzero entry becomes the pivot row. Rows of the
//! final form are primitive integer vectors with a positive leading entry and
//! zeros above and below every pivot, which makes the form a function of the
//! row space alone.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Clears denominators of a rational row (result is primitive).
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut d = BigInt::one();
    for x in row {
        if !x.is_zero() {
            d = d.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_neg = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_neg {
        g = -g;
    }
    if !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

/// `target ← a·target − b·source`, where `a = source[col]`, `b = target[col]`.
fn eliminate(target: &mut [BigInt], source: &[BigInt], col: usize) {
    let b = target[col].clone();
    if b.is_zero() {
        return;
    }
    let a = &source[col];
    let g = a.gcd(&b);
    let (a, b) = (a / &g, b / &g);
    for (t, s) in target.iter_mut().zip(source) {
        if s.is_zero() {
            if !t.is_zero() {
                *t *= &a;
            }
        } else {
            *t = &*t * &a - s * &b;
        }
    }
    make_primitive(target);
}

/// Reduced echelon form of the span of some integer rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn from_integer_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Echelon {
        let mut rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut r| {
                assert_eq!(r.len(), cols, "row length mismatch");
                make_primitive(&mut r);
                r
            })
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..cols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let (head, tail) = rows.split_at_mut(top + 1);
            let pivot = &head[top];
            for r in tail.iter_mut() {
                eliminate(r, pivot, col);
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        // back substitution
        for k in (0..rows.len()).rev() {
            let col = pivots[k];
            let (head, tail) = rows.split_at_mut(k);
            let pivot = &tail[0];
            for r in head.iter_mut() {
                eliminate(r, pivot, col);
            }
        }
        Echelon { cols, rows, pivots }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Echelon {
        Echelon::from_integer_rows(cols, rows.iter().map(|r| integer_row(r)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Reduces `v` against the echelon rows; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<BigInt> {
        let mut r = integer_row(v);
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            eliminate(&mut r, row, col);
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coefficients of `v` in the echelon rows, when `v` is in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self
            .rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &col)| &v[col] / Rational::from_integer(row[col].clone()))
            .collect();
        let mut rest: Vec<Rational> = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= c * Rational::from_integer(y.clone());
                }
            }
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn rational_rows(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect()
    }
}

/// A subspace of `k^cols`, stored by its canonical echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(cols: usize) -> Subspace {
        Subspace { echelon: Echelon { cols, rows: Vec::new(), pivots: Vec::new() } }
    }

    pub fn full(cols: usize) -> Subspace {
        let rows = (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Subspace { echelon: Echelon { cols, rows, pivots: (0..cols).collect() } }
    }

    pub fn from_spanning(cols: usize, vectors: &[Vec<Rational>]) -> Subspace {
        Subspace { echelon: Echelon::from_rows(cols, vectors) }
    }

    pub fn from_echelon(echelon: Echelon) -> Subspace {
        Subspace { echelon }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.cols
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.echelon.rational_rows()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.echelon.rows.clone();
        rows.extend(other.echelon.rows.iter().cloned());
        Subspace { echelon: Echelon::from_integer_rows(self.ambient_dim(), rows) }
    }

    /// Zassenhaus: echelonize `[u | u]` and `[w | 0]`; the rows whose left
    /// half vanishes span the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let c = self.ambient_dim();
        let mut rows = Vec::new();
        for r in &self.echelon.rows {
            rows.push(r.iter().chain(r.iter()).cloned().collect::<Vec<_>>());
        }
        for r in &other.echelon.rows {
            rows.push(r.iter().cloned().chain(core::iter::repeat(BigInt::zero()).take(c)).collect());
        }
        let e = Echelon::from_integer_rows(2 * c, rows);
        let inter = e
            .rows
            .iter()
            .filter(|r| r[..c].iter().all(|x| x.is_zero()))
            .map(|r| r[c..].to_vec())
            .collect();
        Subspace { echelon: Echelon::from_integer_rows(c, inter) }
    }

    /// Image under `v ↦ v·M` for a `cols × m` matrix `M`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.basis().iter().map(|v| m.left_apply(v)).collect();
        Subspace::from_spanning(m.cols, &rows)
    }
}

/// Solves `Σ x_i a_i = target` for the given vectors; free variables are set
/// to zero. `None` when the target is not in the span.
pub fn solve_combination(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = vectors.len();
    let dim = target.len();
    // equations: one row per coordinate, unknowns x_0..x_{k-1}, then rhs
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|c| {
            let mut r: Vec<Rational> = vectors.iter().map(|v| v[c].clone()).collect();
            r.push(target[c].clone());
            r
        })
        .collect();
    let e = Echelon::from_rows(k + 1, &rows);
    if e.pivots.last() == Some(&k) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); k];
    for (row, &col) in e.rows.iter().zip(&e.pivots) {
        x[col] = Rational::new(row[k].clone(), row[col].clone());
    }
    Some(x)
}

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: alloc::vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = alloc::vec![Rational::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.cols, &self.row_vecs()).rank()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let e = Echelon::from_rows(2 * n, &aug);
        if e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in e.rows.iter().enumerate() {
            for j in 0..n {
                inv.set(i, j, Rational::new(row[n + j].clone(), row[i].clone()));
            }
        }
        Some(inv)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }

    /// `{v : v·M = 0}` as a subspace of `k^rows`.
    pub fn left_kernel(&self) -> Subspace {
        let e = Echelon::from_rows(self.rows, &self.transpose().row_vecs());
        let mut basis = Vec::new();
        for free in (0..self.rows).filter(|c| !e.pivots.contains(c)) {
            let mut v = alloc::vec![Rational::zero(); self.rows];
            v[free] = Rational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -Rational::new(row[free].clone(), row[p].clone());
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.rows, &basis)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("\t")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// The prime used by [`rank_mod_p`].
pub const RANK_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Residue of a rational modulo [`RANK_PRIME`]; `None` when the prime
/// divides the denominator.
pub fn residue(x: &Rational) -> Option<u64> {
    let p = BigInt::from(RANK_PRIME);
    let num = x.numer().mod_floor(&p).to_u64()?;
    let den = x.denom().mod_floor(&p).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, RANK_PRIME - 2)))
}

/// Rank over `Z/pZ` with `p =` [`RANK_PRIME`], destroying `rows`.
pub fn rank_mod_p(rows: &mut [Vec<u64>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut top = 0;
    for col in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(top, p);
        let inv = pow_mod(rows[top][col], RANK_PRIME - 2);
        for x in rows[top].iter_mut() {
            *x = mul_mod(*x, inv);
        }
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot = &head[top];
        for r in tail.iter_mut() {
            let f = r[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(pivot.iter()).skip(col) {
                if y != 0 {
                    *x = (*x + RANK_PRIME - mul_mod(f, y)) % RANK_PRIME;
                }
            }
        }
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    top
}
