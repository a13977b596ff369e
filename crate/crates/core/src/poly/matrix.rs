use super::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

/// Dense matrix of polynomials over one ring, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

/// Up to this size determinants use cofactor expansion.
const COFACTOR_LIMIT: usize = 4;

impl PolyMatrix {
    pub fn new(ring: &PolyRing, rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::DomainMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        PolyMatrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Parses each entry with the ring's polynomial syntax.
    pub fn parse(ring: &PolyRing, rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, parsed)
    }

    pub fn zeros(ring: &PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<MultiPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The matrix with column `j` deleted.
    pub fn remove_col(&self, j: usize) -> Self {
        let entries = (0..self.rows)
            .flat_map(|i| (0..self.cols).filter(move |&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| self.get(i, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    fn minor_matrix(&self, skip_row: usize, skip_col: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&i| i != skip_row)
            .flat_map(|i| (0..self.cols).filter(move |&c| c != skip_col).map(move |c| (i, c)))
            .map(|(i, c)| self.get(i, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn scale(&self, c: &MultiPoly) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.try_mul(c)).collect::<Result<_>>()?;
        Ok(PolyMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::DomainMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    pub fn mul_vec(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        (0..self.rows)
            .map(|i| {
                v.iter().enumerate().try_fold(self.ring.zero(), |acc, (k, x)| {
                    acc.try_add(&self.get(i, k).try_mul(x)?)
                })
            })
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Cofactor expansion for small matrices, fraction-free elimination
    /// otherwise.
    pub fn determinant(&self) -> Result<MultiPoly> {
        self.require_square()?;
        if self.rows <= COFACTOR_LIMIT {
            self.determinant_cofactor()
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn determinant_cofactor(&self) -> Result<MultiPoly> {
        self.require_square()?;
        Ok(self.cofactor_rec())
    }

    fn cofactor_rec(&self) -> MultiPoly {
        match self.rows {
            0 => self.ring.one(),
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            n => {
                let mut acc = self.ring.zero();
                for j in 0..n {
                    if self.get(0, j).is_zero() {
                        continue;
                    }
                    let t = self.get(0, j) * &self.minor_matrix(0, j).cofactor_rec();
                    acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
                }
                acc
            }
        }
    }

    /// Bareiss elimination; every division is exact.
    pub fn determinant_bareiss(&self) -> Result<MultiPoly> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(self.ring.one());
        }
        let mut a: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = self.ring.one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(self.ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    let (q, r) = num.div_rem(&prev)?;
                    if !r.is_zero() {
                        return Err(Error::Inconsistent(
                            "fraction-free elimination produced an inexact division".into(),
                        ));
                    }
                    a[i][j] = q;
                }
                a[i][k] = self.ring.zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Transposed cofactor matrix. For 1x1 input this is `[[1]]`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(PolyMatrix::identity(&self.ring, 1));
        }
        let mut entries = vec![self.ring.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let m = self.minor_matrix(i, j).determinant()?;
                entries[j * n + i] = if (i + j) % 2 == 0 { m } else { -m };
            }
        }
        PolyMatrix::new(&self.ring, n, n, entries)
    }
}
