//! Codimension of rank loci of matrices of linear forms, estimated by
//! counting points over F_p.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::modp;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RankShape {
    /// `n x n`; the locus is the singular locus of `det = 0`, i.e. rank `<= n-2`.
    Square,
    /// `n x (n-1)`; the locus is rank `< n-1`.
    NByNMinus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplingMethod {
    /// Uniform points of F_p^N, counting those in the locus.
    Uniform,
    /// Uniform subspaces `W` of dimension `cols - max_rank`, counting points
    /// whose kernel contains `W`. Unbiased for the incidence count, which
    /// for a generic locus equals its point count to leading order.
    KernelIncidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CodimEstimate {
    Estimate {
        codim: usize,
        log_p_count: f64,
        trials: usize,
    },
    /// No sample hit the locus.
    Indeterminate { trials: usize },
}

impl CodimEstimate {
    pub fn codim(&self) -> Option<usize> {
        match self {
            CodimEstimate::Estimate { codim, .. } => Some(*codim),
            CodimEstimate::Indeterminate { .. } => None,
        }
    }
}

/// `rows x cols` matrix whose entries are linear forms in `ambient`
/// variables over F_p. `coeffs[i][j][l]` is the coefficient of `x_l` in
/// entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormMatrix {
    pub rows: usize,
    pub cols: usize,
    pub ambient: usize,
    pub prime: u64,
    pub coeffs: Vec<Vec<Vec<u64>>>,
}

impl LinearFormMatrix {
    pub fn random<R: Rng>(rows: usize, cols: usize, ambient: usize, prime: u64, rng: &mut R) -> Self {
        let coeffs = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| (0..ambient).map(|_| rng.gen_range(0..prime)).collect())
                    .collect()
            })
            .collect();
        LinearFormMatrix {
            rows,
            cols,
            ambient,
            prime,
            coeffs,
        }
    }

    /// Entry `(i, j)` is the variable `x_{i*cols + j}`.
    pub fn generic(rows: usize, cols: usize, prime: u64) -> Self {
        let ambient = rows * cols;
        let coeffs = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| (0..ambient).map(|l| u64::from(l == i * cols + j)).collect())
                    .collect()
            })
            .collect();
        LinearFormMatrix {
            rows,
            cols,
            ambient,
            prime,
            coeffs,
        }
    }

    pub fn evaluate(&self, x: &[u64]) -> Vec<Vec<u64>> {
        let p = self.prime;
        self.coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|form| {
                        form.iter()
                            .zip(x)
                            .fold(0, |acc, (&c, &xi)| modp::add(acc, modp::mul(c, xi, p), p))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank_at(&self, x: &[u64]) -> usize {
        modp::rank(self.evaluate(x), self.prime)
    }

    /// Linear conditions on `x` for `M(x) w = 0`.
    fn kernel_conditions(&self, w: &[u64]) -> Vec<Vec<u64>> {
        let p = self.prime;
        (0..self.rows)
            .map(|i| {
                (0..self.ambient)
                    .map(|l| {
                        (0..self.cols).fold(0, |acc, j| {
                            modp::add(acc, modp::mul(self.coeffs[i][j][l], w[j], p), p)
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn log_p(x: f64, p: u64) -> f64 {
    x.ln() / (p as f64).ln()
}

/// `log_p` of the number of `k`-dimensional subspaces of F_p^m.
fn log_grassmannian(k: usize, m: usize, p: u64) -> f64 {
    (0..k)
        .map(|i| {
            let num = (p as f64).powi((m - i) as i32) - 1.0;
            let den = (p as f64).powi((k - i) as i32) - 1.0;
            log_p(num, p) - log_p(den, p)
        })
        .sum()
}

fn random_subspace<R: Rng>(k: usize, m: usize, p: u64, rng: &mut R) -> Vec<Vec<u64>> {
    loop {
        let basis: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..m).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if modp::rank(basis.clone(), p) == k {
            return basis;
        }
    }
}

/// Estimates the codimension of `{x : rank M(x) <= max_rank}` in F_p^N.
pub fn estimate_codim<R: Rng>(
    m: &LinearFormMatrix,
    max_rank: usize,
    trials: usize,
    method: SamplingMethod,
    rng: &mut R,
) -> CodimEstimate {
    let p = m.prime;
    let n = m.ambient;
    if trials == 0 {
        return CodimEstimate::Indeterminate { trials };
    }
    let log_count = match method {
        SamplingMethod::Uniform => {
            let hits = (0..trials)
                .filter(|_| {
                    let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                    m.rank_at(&x) <= max_rank
                })
                .count();
            if hits == 0 {
                return CodimEstimate::Indeterminate { trials };
            }
            n as f64 + log_p(hits as f64 / trials as f64, p)
        }
        SamplingMethod::KernelIncidence => {
            let k = m.cols.saturating_sub(max_rank);
            if k == 0 {
                // every point qualifies
                n as f64
            } else {
                let dims: Vec<usize> = (0..trials)
                    .map(|_| {
                        let w = random_subspace(k, m.cols, p, rng);
                        let conds: Vec<Vec<u64>> = w.iter().flat_map(|v| m.kernel_conditions(v)).collect();
                        n - modp::rank(conds, p)
                    })
                    .collect();
                let top = *dims.iter().max().expect("trials > 0");
                let scaled: f64 = dims.iter().map(|&d| (p as f64).powi(d as i32 - top as i32)).sum();
                log_grassmannian(k, m.cols, p) + top as f64 + log_p(scaled / trials as f64, p)
            }
        }
    };
    let codim = (n as f64 - log_count).round().max(0.0) as usize;
    CodimEstimate::Estimate {
        codim,
        log_p_count: log_count,
        trials,
    }
}

/// Random `n x n` or `n x (n-1)` matrix of linear forms in `ambient_dim`
/// variables; estimates the codimension of its degeneracy locus.
pub fn rank_locus_codim_estimate(
    n: usize,
    shape: RankShape,
    ambient_dim: usize,
    prime: u64,
    trials: usize,
    method: SamplingMethod,
    seed: u64,
) -> Result<CodimEstimate> {
    if !modp::is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if ambient_dim < 4 {
        return Err(Error::DimensionMismatch(format!(
            "ambient dimension {ambient_dim} < 4"
        )));
    }
    let (cols, max_rank) = match shape {
        RankShape::Square if n >= 2 => (n, n - 2),
        RankShape::NByNMinus1 if n >= 2 => (n - 1, n - 2),
        _ => return Err(Error::DimensionMismatch(format!("matrix size {n} < 2"))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = LinearFormMatrix::random(n, cols, ambient_dim, prime, &mut rng);
    Ok(estimate_codim(&m, max_rank, trials, method, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_two_by_two_singular_locus() {
        let m = LinearFormMatrix::generic(2, 2, 101);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = estimate_codim(&m, 0, 200, SamplingMethod::KernelIncidence, &mut rng);
        assert_eq!(e.codim(), Some(4));
    }

    #[test]
    fn uniform_misses_codim_four() {
        let m = LinearFormMatrix::generic(2, 2, 101);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = estimate_codim(&m, 0, 1000, SamplingMethod::Uniform, &mut rng);
        assert_eq!(e, CodimEstimate::Indeterminate { trials: 1000 });
    }

    #[test]
    fn column_of_two_forms() {
        let m = LinearFormMatrix::generic(2, 1, 7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = estimate_codim(&m, 0, 4000, SamplingMethod::Uniform, &mut rng);
        assert_eq!(e.codim(), Some(2));
    }

    #[test]
    fn three_by_two_random() {
        let e = rank_locus_codim_estimate(3, RankShape::NByNMinus1, 6, 101, 300, SamplingMethod::KernelIncidence, 7)
            .unwrap();
        assert_eq!(e.codim(), Some(2));
    }

    #[test]
    fn preconditions() {
        assert!(rank_locus_codim_estimate(3, RankShape::Square, 6, 100, 10, SamplingMethod::Uniform, 0).is_err());
        assert!(rank_locus_codim_estimate(3, RankShape::Square, 3, 101, 10, SamplingMethod::Uniform, 0).is_err());
        assert!(rank_locus_codim_estimate(1, RankShape::Square, 6, 101, 10, SamplingMethod::Uniform, 0).is_err());
    }
}
