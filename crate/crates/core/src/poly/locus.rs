//! Jacobian and a sampling audit of singular loci over F_p.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{modp, MultiPoly};
use crate::error::{Error, Result};

/// All formal partial derivatives, in variable order.
pub fn jacobian(f: &MultiPoly) -> Vec<MultiPoly> {
    (0..f.ring().nvars()).map(|i| f.partial_derivative(i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocusCheckConfig {
    pub trials: usize,
    pub prime: u64,
    pub seed: u64,
}

impl Default for LocusCheckConfig {
    fn default() -> Self {
        LocusCheckConfig {
            trials: 10_000,
            prime: 101,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusCheckReport {
    pub trials: usize,
    pub prime: u64,
    /// Samples placed on an expected component.
    pub component_samples: usize,
    /// Samples placed on the hypersurface `f = 0`.
    pub hypersurface_samples: usize,
    /// Samples with a random set of coordinates zeroed.
    pub subspace_samples: usize,
    /// Attempts that failed to land where intended; they still count as
    /// trials and are still compared.
    pub misses: usize,
    /// Points found singular.
    pub singular_points: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Vec<u64>>,
    pub passed: bool,
}

/// Value of `g` as a polynomial `a*x_v + b` at `point`, assuming
/// `deg_v g <= 1`.
fn linear_in(g: &MultiPoly, v: usize, point: &[u64], p: u64) -> Option<(u64, u64)> {
    let mut at_zero = point.to_vec();
    at_zero[v] = 0;
    let b = g.eval_mod_p(&at_zero, p)?;
    let a = g.partial_derivative(v).eval_mod_p(point, p)?;
    Some((a, b))
}

fn solve_for(g: &MultiPoly, v: usize, point: &mut [u64], p: u64) -> bool {
    match linear_in(g, v, point, p) {
        Some((a, b)) if a != 0 => {
            let ia = modp::inv(a, p).expect("nonzero");
            point[v] = modp::mul(p - b % p, ia, p) % p;
            true
        }
        _ => false,
    }
}

/// `Some(i)` if `g` is a nonzero multiple of the single variable `x_i`.
fn single_variable(g: &MultiPoly) -> Option<usize> {
    if g.num_terms() != 1 {
        return None;
    }
    let (e, _) = g.leading_term()?;
    let nz: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
    (nz.len() == 1).then(|| nz[0])
}

fn is_singular(f: &MultiPoly, jac: &[MultiPoly], x: &[u64], p: u64) -> Result<bool> {
    let val = |g: &MultiPoly| {
        g.eval_mod_p(x, p)
            .ok_or_else(|| Error::Parse(format!("coefficient not invertible mod {p}")))
    };
    if val(f)? != 0 {
        return Ok(false);
    }
    for g in jac {
        if val(g)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn on_expected(expected: &[Vec<MultiPoly>], x: &[u64], p: u64) -> Result<bool> {
    for comp in expected {
        let mut all = true;
        for g in comp {
            let v = g
                .eval_mod_p(x, p)
                .ok_or_else(|| Error::Parse(format!("coefficient not invertible mod {p}")))?;
            if v != 0 {
                all = false;
                break;
            }
        }
        if all {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Compares the zero set of `(f, df)` with a union of components, each
/// given by generators, on sampled points of F_p^n. Set-theoretic only.
///
/// Three kinds of samples rotate: points forced onto an expected component,
/// points forced onto `f = 0`, and points with random coordinates zeroed.
pub fn singular_locus_check(
    f: &MultiPoly,
    expected: &[Vec<MultiPoly>],
    config: LocusCheckConfig,
) -> Result<LocusCheckReport> {
    let p = config.prime;
    if !modp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if expected.iter().flatten().any(|g| g.ring() != f.ring()) {
        return Err(Error::DomainMismatch);
    }
    let n = f.ring().nvars();
    let jac = jacobian(f);
    let linear_vars: Vec<usize> = (0..n).filter(|&v| f.degree_in(v) == Some(1)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = LocusCheckReport {
        trials: config.trials,
        prime: p,
        component_samples: 0,
        hypersurface_samples: 0,
        subspace_samples: 0,
        misses: 0,
        singular_points: 0,
        mismatches: 0,
        first_mismatch: None,
        passed: true,
    };
    let mut next_component = 0;
    for trial in 0..config.trials {
        let mut x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let kind = if expected.is_empty() { 1 + trial % 2 } else { trial % 3 };
        match kind {
            0 => {
                report.component_samples += 1;
                let comp = &expected[next_component % expected.len()];
                next_component += 1;
                let mut fixed = vec![false; n];
                let mut rest = Vec::new();
                for g in comp {
                    match single_variable(g) {
                        Some(i) => {
                            x[i] = 0;
                            fixed[i] = true;
                        }
                        None => rest.push(g),
                    }
                }
                for g in rest {
                    let mut cands: Vec<usize> = (0..n)
                        .filter(|&v| !fixed[v] && g.degree_in(v) == Some(1))
                        .collect();
                    cands.shuffle(&mut rng);
                    if let Some(&v) = cands.iter().find(|&&v| solve_for(g, v, &mut x, p)) {
                        fixed[v] = true;
                    }
                }
                if !on_expected(std::slice::from_ref(comp), &x, p)? {
                    report.misses += 1;
                }
            }
            1 => {
                report.hypersurface_samples += 1;
                let ok = linear_vars
                    .choose(&mut rng)
                    .is_some_and(|&v| solve_for(f, v, &mut x, p));
                if !ok {
                    report.misses += 1;
                }
            }
            _ => {
                report.subspace_samples += 1;
                for xi in x.iter_mut() {
                    if rng.gen_bool(0.5) {
                        *xi = 0;
                    }
                }
            }
        }
        let actual = is_singular(f, &jac, &x, p)?;
        let predicted = on_expected(expected, &x, p)?;
        if actual {
            report.singular_points += 1;
        }
        if actual != predicted {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(x);
        }
    }
    report.passed = report.mismatches == 0;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::{CoeffDomain, PolyRing};
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(CoeffDomain::Int, vars).unwrap()
    }

    #[test]
    fn jacobian_of_product_minus_t() {
        let r = ring(&["x1", "x2", "t"]);
        let f = r.parse("x1*x2 - t").unwrap();
        let j = jacobian(&f);
        assert_eq!(j, vec![r.var("x2").unwrap(), r.var("x1").unwrap(), r.constant(-1)]);
        let rep = singular_locus_check(&f, &[], LocusCheckConfig { trials: 600, ..Default::default() })
            .unwrap();
        assert!(rep.passed);
        assert_eq!(rep.singular_points, 0);
    }

    #[test]
    fn cone_over_quadric() {
        let r = ring(&["x1", "x2", "x3", "t"]);
        let f = r.parse("x1*x2 - t*x3").unwrap();
        let origin: Vec<MultiPoly> = r.vars().iter().map(|v| r.var(v).unwrap()).collect();
        let rep = singular_locus_check(&f, &[origin], LocusCheckConfig { trials: 900, ..Default::default() })
            .unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(rep.singular_points > 0);
    }

    #[test]
    fn wrong_locus_is_caught() {
        let r = ring(&["x1", "x2", "x3", "t"]);
        let f = r.parse("x1*x2 - t*x3").unwrap();
        let too_big = vec![r.var("x1").unwrap(), r.var("x2").unwrap()];
        let rep = singular_locus_check(&f, &[too_big], LocusCheckConfig { trials: 300, ..Default::default() })
            .unwrap();
        assert!(!rep.passed);
        assert!(rep.first_mismatch.is_some());
    }
}
