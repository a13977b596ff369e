//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers or rationals.
//! Rank, solving and determinants go through fraction-free (Bareiss)
//! elimination on row-scaled integer copies; the Smith normal form uses
//! elementary row/column operations with a minimal-absolute-value pivot.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<BigRational>;
pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    /// An empty row list gives a `0 x cols` matrix with `cols = 0`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has length {}, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Submatrix keeping the listed rows and columns, in the listed order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    let slot = &mut out[(i, j)];
                    *slot = std::mem::replace(slot, T::zero()) + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

impl RatMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Scales each row of `m` by the least common multiple of its denominators.
/// Returns the integer matrix and the (positive) scale factors.
fn integerize_rows(m: &RatMatrix) -> (IntMatrix, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(m.rows);
    let mut out = IntMatrix::zeros(m.rows, m.cols);
    for i in 0..m.rows {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for j in 0..m.cols {
            let x = &m[(i, j)];
            out[(i, j)] = x.numer() * (&lcm / x.denom());
        }
        scales.push(lcm);
    }
    (out, scales)
}

/// Fraction-free Gaussian elimination in place. Returns the pivot
/// positions `(row, col)` of the resulting echelon form and the number of
/// row swaps performed.
///
/// After the pass, entry `(i, j)` below/right of the processed pivots is the
/// minor on the pivot rows/columns extended by row `i` and column `j`, so
/// every division by the previous pivot is exact.
fn bareiss(a: &mut IntMatrix) -> (Vec<(usize, usize)>, usize) {
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            swaps += 1;
        }
        let pivot = a[(r, c)].clone();
        for i in r + 1..a.rows {
            let factor = a[(i, c)].clone();
            for j in c + 1..a.cols {
                let v = &pivot * &a[(i, j)] - &factor * &a[(r, j)];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division not exact");
                a[(i, j)] = v / &prev;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        pivots.push((r, c));
        r += 1;
    }
    (pivots, swaps)
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    let (mut a, _) = integerize_rows(m);
    bareiss(&mut a).0.len()
}

/// Rank of an integer matrix over the rationals.
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    bareiss(&mut a).0.len()
}

/// Exact determinant of a square rational matrix.
pub fn determinant(m: &RatMatrix) -> Result<BigRational> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(BigRational::one());
    }
    let (mut a, scales) = integerize_rows(m);
    let (pivots, swaps) = bareiss(&mut a);
    if pivots.len() < m.rows {
        return Ok(BigRational::zero());
    }
    let n = m.rows;
    let mut det = a[(n - 1, n - 1)].clone();
    if swaps % 2 == 1 {
        det = -det;
    }
    let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(BigRational::new(det, denom))
}

/// Leading principal minors `det(M[0..k, 0..k])` for `k = 1..=n`.
pub fn leading_principal_minors(m: &RatMatrix) -> Result<Vec<BigRational>> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    (1..=m.rows)
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            determinant(&m.select(&idx, &idx))
        })
        .collect()
}

/// Sylvester's criterion: symmetric `m` is positive definite iff every
/// leading principal minor is positive. The empty matrix counts as positive
/// definite.
pub fn is_positive_definite(m: &RatMatrix) -> Result<bool> {
    Ok(leading_principal_minors(m)?.iter().all(Signed::is_positive))
}

/// Solves `m x = b` exactly. Free variables are set to zero.
pub fn solve(m: &RatMatrix, b: &[BigRational]) -> Result<Vec<BigRational>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            m.rows,
            b.len()
        )));
    }
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (mut a, _) = integerize_rows(&aug);
    let (pivots, _) = bareiss(&mut a);
    if pivots.iter().any(|&(_, c)| c == m.cols) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![BigRational::zero(); m.cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = BigRational::from_integer(a[(r, m.cols)].clone());
        for j in c + 1..m.cols {
            if !a[(r, j)].is_zero() {
                acc -= BigRational::from_integer(a[(r, j)].clone()) * &x[j];
            }
        }
        x[c] = acc / BigRational::from_integer(a[(r, c)].clone());
    }
    Ok(x)
}

/// Reduced row echelon form over the rationals together with the pivot
/// columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let (mut a, _) = integerize_rows(m);
    let (pivots, _) = bareiss(&mut a);
    let mut out = a.to_rational();
    // back-substitute to clear entries above pivots and normalize
    for (k, &(r, c)) in pivots.iter().enumerate().rev() {
        let p = out[(r, c)].clone();
        for j in 0..m.cols {
            if !out[(r, j)].is_zero() {
                out[(r, j)] = &out[(r, j)] / &p;
            }
        }
        for &(r2, _) in &pivots[..k] {
            let f = out[(r2, c)].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..m.cols {
                if !out[(r, j)].is_zero() {
                    let v = &f * &out[(r, j)];
                    out[(r2, j)] -= v;
                }
            }
        }
    }
    for i in pivots.len()..m.rows {
        for j in 0..m.cols {
            out[(i, j)] = BigRational::zero();
        }
    }
    (out, pivots.into_iter().map(|(_, c)| c).collect())
}

/// Basis of the right null space, one vector per free column of the RREF.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let (r, pivot_cols) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector (content 1, same
/// direction). The zero vector maps to the zero vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Smith normal form `U * M * V = diag(d_1, d_2, ...)` with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Length `min(rows, cols)`, nonnegative, divisibility chain, zeros last.
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Number of zero diagonal entries plus the columns beyond the diagonal:
    /// the free rank of the cokernel `Z^rows / im(M^T)` when `M` is read as a
    /// relation matrix with one relation per row and one generator per column.
    pub fn free_rank_of_cokernel(&self, generators: usize) -> usize {
        generators - self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| *d > &BigInt::one())
            .cloned()
            .collect()
    }
}

fn add_row_multiple(a: &mut IntMatrix, target: usize, source: usize, k: &BigInt) {
    for j in 0..a.cols {
        if !a[(source, j)].is_zero() {
            let v = k * &a[(source, j)];
            a[(target, j)] += v;
        }
    }
}

fn add_col_multiple(a: &mut IntMatrix, target: usize, source: usize, k: &BigInt) {
    for i in 0..a.rows {
        if !a[(i, source)].is_zero() {
            let v = k * &a[(i, source)];
            a[(i, target)] += v;
        }
    }
}

/// Smith normal form by elementary operations. The pivot is the nonzero
/// entry of minimal absolute value in the active block, ties broken by
/// row-major position.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    let mut t = 0;
    'outer: while t < steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            let pivot = a[(t, t)].clone();
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&pivot);
                if !q.is_zero() {
                    let nq = -q;
                    add_row_multiple(&mut a, i, t, &nq);
                    add_row_multiple(&mut u, i, t, &nq);
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&pivot);
                if !q.is_zero() {
                    let nq = -q;
                    add_col_multiple(&mut a, j, t, &nq);
                    add_col_multiple(&mut v, j, t, &nq);
                }
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&a[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    add_row_multiple(&mut a, t, i, &one);
                    add_row_multiple(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -a[(t, j)].clone();
            }
            for j in 0..rows {
                u[(t, j)] = -u[(t, j)].clone();
            }
        }
        t += 1;
    }
    SmithForm {
        diagonal: (0..steps).map(|i| a[(i, i)].clone()).collect(),
        u,
        v,
    }
}

/// Incrementally maintained row space of integer vectors, kept in a
/// fraction-free echelon form with rows divided by their content.
#[derive(Clone, Debug, Default)]
pub struct RowSpan {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowSpan {
    pub fn new(dim: usize) -> Self {
        RowSpan {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the rank increased.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length differs from span dimension");
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            let p = row[*pc].clone();
            for j in 0..self.dim {
                if row[j].is_zero() {
                    if !v[j].is_zero() {
                        v[j] *= &p;
                    }
                } else {
                    v[j] = &p * &v[j] - &f * &row[j];
                }
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if g.is_zero() {
                return false;
            }
            if !g.is_one() {
                for x in v.iter_mut() {
                    *x /= &g;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                self.rows.push((pc, v));
                true
            }
            None => false,
        }
    }
}
