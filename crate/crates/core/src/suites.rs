//! Seeded fuzz suites over the polynomial kernels.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{
    blowup_chart, derive_adjoint_relation, rank_locus_codim_estimate, verify_chart, Chart, CoeffDomain,
    MultiPoly, PolyMatrix, PolyRing, RankShape, SamplingMethod,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Adjugate,
    Adjoint,
    Charts,
    Detvar,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Adjugate, Suite::Adjoint, Suite::Charts, Suite::Detvar];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Adjugate => "adjugate",
            Suite::Adjoint => "adjoint",
            Suite::Charts => "charts",
            Suite::Detvar => "detvar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub cases: usize,
    pub failures: usize,
    /// Free-form description of the first failing case.
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }
}

/// Polynomials with up to `terms` terms of total degree ≤ `degree` and
/// coefficients in [−3, 3].
pub fn random_poly<R: Rng>(ring: &PolyRing, terms: usize, degree: u32, rng: &mut R) -> MultiPoly {
    let mut p = ring.zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let nvars = ring.nvars();
        let mut exps = vec![0u32; nvars];
        let mut left = rng.gen_range(0..=degree);
        while left > 0 {
            exps[rng.gen_range(0..nvars)] += 1;
            left -= 1;
        }
        let c = rng.gen_range(-3i64..=3);
        let t = ring.monomial(exps, BigRational::from_integer(c.into())).expect("exponent count matches ring");
        p = &p + &t;
    }
    p
}

pub fn random_matrix<R: Rng>(ring: &PolyRing, rows: usize, cols: usize, rng: &mut R) -> PolyMatrix {
    let entries = (0..rows * cols).map(|_| random_poly(ring, 3, 2, rng)).collect();
    PolyMatrix::new(ring, rows, cols, entries).expect("entry count matches shape")
}

fn fuzz_ring() -> PolyRing {
    PolyRing::new(CoeffDomain::Int, &["x", "y", "z"]).expect("valid ring")
}

/// adj(M)·M = M·adj(M) = det(M)·I on random square matrices up to 4×4.
pub fn adjugate_suite(cases: usize, seed: u64) -> Result<SuiteResult> {
    let ring = fuzz_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteResult { suite: Suite::Adjugate, cases: 0, failures: 0, first_failure: None };
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let m = random_matrix(&ring, n, n, &mut rng);
        let adj = m.adjugate()?;
        let det = m.determinant()?;
        let scalar = PolyMatrix::identity(&ring, n).scale(&det)?;
        let ok = adj.mul(&m)? == scalar && m.mul(&adj)? == scalar;
        out.record(ok, || format!("case {case}: {n}x{n}"));
    }
    Ok(out)
}

/// The adjoint relation residual vanishes on random (H, f).
pub fn adjoint_suite(cases: usize, seed: u64) -> Result<SuiteResult> {
    let ring = fuzz_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteResult { suite: Suite::Adjoint, cases: 0, failures: 0, first_failure: None };
    for case in 0..cases {
        let n = rng.gen_range(2..=4);
        let h = random_matrix(&ring, n - 1, n, &mut rng);
        let f: Vec<MultiPoly> = (0..n).map(|_| random_poly(&ring, 3, 2, &mut rng)).collect();
        let ok = derive_adjoint_relation(&h, &f)?.iter().all(MultiPoly::is_zero);
        out.record(ok, || format!("case {case}: n = {n}"));
    }
    Ok(out)
}

/// Both charts of the blow-up divide out exactly for n = 2, 3.
pub fn charts_suite(cases: usize, seed: u64) -> Result<SuiteResult> {
    let ring = fuzz_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteResult { suite: Suite::Charts, cases: 0, failures: 0, first_failure: None };
    for case in 0..cases {
        let n = rng.gen_range(2..=3);
        let h = random_matrix(&ring, n - 1, n, &mut rng);
        let f: Vec<MultiPoly> = (0..n).map(|_| random_poly(&ring, 3, 2, &mut rng)).collect();
        let j = rng.gen_range(0..n);
        let mut ok = true;
        for chart in [Chart::S, Chart::T] {
            let c = blowup_chart(&f, &h, j, chart)?;
            ok &= verify_chart(&c, &f, &h)?.exact;
        }
        out.record(ok, || format!("case {case}: n = {n}, column {j}"));
    }
    Ok(out)
}

/// Expected codimensions of rank loci: 4 for a generic 2×2 determinant,
/// 2 for n×(n−1) rank drop with n = 2, 3.
pub fn detvar_suite(trials: usize, seed: u64) -> Result<SuiteResult> {
    let mut out = SuiteResult { suite: Suite::Detvar, cases: 0, failures: 0, first_failure: None };
    let cases = [(2, RankShape::Square, 4, 4), (2, RankShape::NByNMinus1, 4, 2), (3, RankShape::NByNMinus1, 6, 2)];
    for (i, &(n, shape, ambient, expected)) in cases.iter().enumerate() {
        let est = rank_locus_codim_estimate(n, shape, ambient, 101, trials, SamplingMethod::KernelIncidence, seed + i as u64)?;
        out.record(est.codim() == Some(expected), || format!("{n} {shape:?}: got {:?}, expected {expected}", est.codim()));
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteResult> {
    match suite {
        Suite::Adjugate => adjugate_suite(200, seed),
        Suite::Adjoint => adjoint_suite(200, seed),
        Suite::Charts => charts_suite(100, seed),
        Suite::Detvar => detvar_suite(100_000, seed),
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        assert!(adjugate_suite(20, 3).unwrap().passed());
        assert!(adjoint_suite(20, 3).unwrap().passed());
        assert!(charts_suite(10, 3).unwrap().passed());
        assert!(detvar_suite(500, 3).unwrap().passed());
    }
}
