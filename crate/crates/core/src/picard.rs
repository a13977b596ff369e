//! Rational surfaces with an anticanonical cycle of rational curves,
//! modelled by their Picard lattice.
//!
//! A surface obtained from P² by `k` point blow-ups has lattice basis
//! `(H, E_1, ..., E_k)` with form `diag(1, -1, ..., -1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{is_positive_definite, solve, RatMatrix};

/// Integral divisor class in the basis `(H, E_1, ..., E_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn zero(basis_size: usize) -> Self {
        DivisorClass(vec![0; basis_size])
    }

    pub fn line(basis_size: usize) -> Self {
        let mut v = vec![0; basis_size];
        v[0] = 1;
        DivisorClass(v)
    }

    pub fn exceptional(i: usize, basis_size: usize) -> Self {
        let mut v = vec![0; basis_size];
        v[i] = 1;
        DivisorClass(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &DivisorClass) -> i64 {
        assert_eq!(self.len(), other.len(), "classes on different lattices");
        self.0[0] * other.0[0] - self.0[1..].iter().zip(&other.0[1..]).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| a * c).collect())
    }

    fn padded(&self, basis_size: usize) -> DivisorClass {
        let mut v = self.0.clone();
        v.resize(basis_size, 0);
        DivisorClass(v)
    }

    pub fn to_rational(&self) -> QDivisor {
        QDivisor(self.0.iter().map(|&a| BigRational::from_integer(a.into())).collect())
    }
}

/// Rational divisor class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor(pub Vec<BigRational>);

impl QDivisor {
    pub fn dot(&self, other: &QDivisor) -> BigRational {
        let mut acc = &self.0[0] * &other.0[0];
        for (a, b) in self.0[1..].iter().zip(&other.0[1..]) {
            acc -= a * b;
        }
        acc
    }

    pub fn dot_int(&self, other: &DivisorClass) -> BigRational {
        self.dot(&other.to_rational())
    }

    /// Least positive multiple with integer coefficients, and that multiple.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let scale = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let class = self.0.iter().map(|c| c.numer() * (&scale / c.denom())).collect();
        (scale, class)
    }

    /// `a/b` strings, for reports.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

/// A blow-up of P² together with a cyclically ordered anticanonical cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SurfaceRecord", try_from = "SurfaceRecord")]
pub struct CycleSurface {
    blowups: usize,
    cycle: Vec<DivisorClass>,
    canonical: DivisorClass,
}

#[derive(Serialize, Deserialize)]
struct SurfaceRecord {
    basis_size: usize,
    cycle: Vec<DivisorClass>,
    canonical: DivisorClass,
}

impl From<CycleSurface> for SurfaceRecord {
    fn from(s: CycleSurface) -> Self {
        SurfaceRecord {
            basis_size: s.blowups + 1,
            cycle: s.cycle,
            canonical: s.canonical,
        }
    }
}

impl TryFrom<SurfaceRecord> for CycleSurface {
    type Error = Error;

    fn try_from(r: SurfaceRecord) -> Result<Self> {
        if r.basis_size == 0
            || r.canonical.len() != r.basis_size
            || r.cycle.iter().any(|c| c.len() != r.basis_size)
            || r.cycle.len() < 3
        {
            return Err(Error::DimensionMismatch("inconsistent surface record".into()));
        }
        let s = CycleSurface {
            blowups: r.basis_size - 1,
            cycle: r.cycle,
            canonical: r.canonical,
        };
        let bad = s.invariant_violations();
        if bad.is_empty() {
            Ok(s)
        } else {
            Err(Error::Inconsistent(bad.join("; ")))
        }
    }
}

/// One step of a blow-up sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "op", content = "at")]
pub enum BlowupStep {
    /// Blow up `C_j ∩ C_{j+1}`.
    Corner(usize),
    /// Blow up a general point of `C_j`.
    OnCurve(usize),
}

impl CycleSurface {
    /// Three general lines in P².
    pub fn triangle() -> Self {
        CycleSurface {
            blowups: 0,
            cycle: vec![DivisorClass(vec![1]); 3],
            canonical: DivisorClass(vec![-3]),
        }
    }

    pub fn blowups(&self) -> usize {
        self.blowups
    }

    pub fn basis_size(&self) -> usize {
        self.blowups + 1
    }

    pub fn cycle(&self) -> &[DivisorClass] {
        &self.cycle
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    fn check_position(&self, j: usize) -> Result<()> {
        if j < self.cycle.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: j,
                len: self.cycle.len(),
            })
        }
    }

    /// Pads every class by one coordinate and returns the new `E`.
    fn grown(&self) -> (CycleSurface, DivisorClass) {
        let n = self.basis_size() + 1;
        let s = CycleSurface {
            blowups: self.blowups + 1,
            cycle: self.cycle.iter().map(|c| c.padded(n)).collect(),
            canonical: self.canonical.padded(n),
        };
        (s, DivisorClass::exceptional(n - 1, n))
    }

    /// Blows up the corner `C_j ∩ C_{j+1}` (indices cyclic) and inserts
    /// the exceptional curve between them.
    pub fn blowup_corner(&self, j: usize) -> Result<CycleSurface> {
        self.check_position(j)?;
        let m = self.cycle.len();
        let next = (j + 1) % m;
        let (mut s, e) = self.grown();
        s.cycle[j] = s.cycle[j].sub(&e);
        s.cycle[next] = s.cycle[next].sub(&e);
        s.cycle.insert(j + 1, e.clone());
        s.canonical = s.canonical.add(&e);
        Ok(s)
    }

    /// Blows up a general point of `C_j`; the cycle length is unchanged.
    pub fn blowup_on_curve(&self, j: usize) -> Result<CycleSurface> {
        self.check_position(j)?;
        let (mut s, e) = self.grown();
        s.cycle[j] = s.cycle[j].sub(&e);
        s.canonical = s.canonical.add(&e);
        Ok(s)
    }

    pub fn apply(&self, step: BlowupStep) -> Result<CycleSurface> {
        match step {
            BlowupStep::Corner(j) => self.blowup_corner(j),
            BlowupStep::OnCurve(j) => self.blowup_on_curve(j),
        }
    }

    pub fn apply_all(&self, steps: &[BlowupStep]) -> Result<CycleSurface> {
        steps.iter().try_fold(self.clone(), |s, &st| s.apply(st))
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.cycle.iter().map(|c| c.dot(c)).collect()
    }

    pub fn gram(&self) -> Vec<Vec<i64>> {
        self.cycle
            .iter()
            .map(|a| self.cycle.iter().map(|b| a.dot(b)).collect())
            .collect()
    }

    fn gram_excluding(&self, j: usize) -> RatMatrix {
        let idx: Vec<usize> = (0..self.cycle.len()).filter(|&i| i != j).collect();
        RatMatrix::from_fn(idx.len(), idx.len(), |a, b| {
            BigRational::from_integer(self.cycle[idx[a]].dot(&self.cycle[idx[b]]).into())
        })
    }

    /// Whether the curves other than `C_exclude` span a negative definite
    /// lattice.
    pub fn is_negative_definite(&self, exclude: usize) -> bool {
        let neg = self.gram_excluding(exclude).map(|x| -x);
        is_positive_definite(&neg).expect("square by construction")
    }

    /// Sum of the cycle classes.
    pub fn cycle_sum(&self) -> DivisorClass {
        self.cycle
            .iter()
            .fold(DivisorClass::zero(self.basis_size()), |acc, c| acc.add(c))
    }

    /// Human-readable descriptions of every violated invariant.
    pub fn invariant_violations(&self) -> Vec<String> {
        let n = self.basis_size();
        let m = self.cycle.len();
        let mut bad = Vec::new();
        let mut expected_k = vec![1; n];
        expected_k[0] = -3;
        if self.canonical.0 != expected_k {
            bad.push(format!("canonical class {:?} is not -3H + sum E", self.canonical.0));
        }
        if self.cycle_sum() != self.canonical.scale(-1) {
            bad.push("cycle does not sum to -K".into());
        }
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                let want = i64::from(adjacent);
                let got = self.cycle[i].dot(&self.cycle[j]);
                if got != want {
                    bad.push(format!("C_{i}.C_{j} = {got}, expected {want}"));
                }
            }
        }
        for (j, c) in self.cycle.iter().enumerate() {
            let twice_genus_minus_two = c.dot(c) + self.canonical.dot(c);
            if twice_genus_minus_two != -2 {
                bad.push(format!("C_{j} has arithmetic genus {}", twice_genus_minus_two / 2 + 1));
            }
        }
        bad
    }

    pub fn check_invariants(&self) -> Result<()> {
        let bad = self.invariant_violations();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Inconsistent(bad.join("; ")))
        }
    }

    /// Corner with the largest `C_j² + C_{j+1}²`, lowest `j` on ties.
    pub fn highest_corner(&self) -> usize {
        let s = self.self_intersections();
        let m = s.len();
        (0..m)
            .max_by_key(|&j| (s[j] + s[(j + 1) % m], std::cmp::Reverse(j)))
            .expect("nonempty cycle")
    }

    /// Blow-up sequence of the standard schedule for cycle length `m`:
    /// corners up to length `m`, then general points until every
    /// `C_j² <= -2`.
    pub fn standard_steps(m: usize) -> Result<Vec<BlowupStep>> {
        if m < 3 {
            return Err(Error::DimensionMismatch(format!("cycle length {m} < 3")));
        }
        let mut s = CycleSurface::triangle();
        let mut steps = Vec::new();
        while s.cycle_length() < m {
            let j = s.highest_corner();
            steps.push(BlowupStep::Corner(j));
            s = s.blowup_corner(j)?;
        }
        for j in 0..m {
            while s.cycle[j].dot(&s.cycle[j]) > -2 {
                steps.push(BlowupStep::OnCurve(j));
                s = s.blowup_on_curve(j)?;
            }
        }
        Ok(steps)
    }

    pub fn standard(m: usize) -> Result<CycleSurface> {
        CycleSurface::triangle().apply_all(&CycleSurface::standard_steps(m)?)
    }

    /// `k` corner blow-ups of the triangle, each at the highest corner.
    pub fn corners(k: usize) -> CycleSurface {
        (0..k).fold(CycleSurface::triangle(), |s, _| {
            let j = s.highest_corner();
            s.blowup_corner(j).expect("valid corner")
        })
    }

    /// Degree 5 del Pezzo surface with its cycle of five (-1)-curves.
    pub fn del_pezzo_five() -> CycleSurface {
        let steps = [
            BlowupStep::Corner(0),
            BlowupStep::Corner(3),
            BlowupStep::OnCurve(2),
            BlowupStep::OnCurve(3),
        ];
        CycleSurface::triangle().apply_all(&steps).expect("valid steps")
    }

    /// `dH - sum 2^(k-i) E_i` with the least `d` that is positive on the
    /// cycle and has positive square. Supports up to 30 blow-ups.
    pub fn default_seed(&self) -> Result<DivisorClass> {
        let k = self.blowups;
        if k > 30 {
            return Err(Error::NoAmpleSeed);
        }
        let w: Vec<i64> = (1..=k).map(|i| 1i64 << (k - i)).collect();
        // seed.C = d*a - sum w_i b_i for C = aH - sum b_i E_i
        let mut d: i64 = 1;
        let norm2: i64 = w.iter().map(|x| x * x).sum();
        while d * d <= norm2 {
            d += 1;
        }
        for c in &self.cycle {
            let a = c.0[0];
            let wb: i64 = w.iter().zip(&c.0[1..]).map(|(wi, ci)| -wi * ci).sum();
            if a > 0 {
                d = d.max(wb.div_euclid(a) + 1);
            } else if a < 0 || wb >= 0 {
                return Err(Error::NoAmpleSeed);
            }
        }
        let mut v = vec![d];
        v.extend(w.iter().map(|x| -x));
        let seed = DivisorClass(v);
        debug_assert!(seed.dot(&seed) > 0 && self.cycle.iter().all(|c| seed.dot(c) > 0));
        Ok(seed)
    }

    /// Rational class of degree 1 on every `C_j` and positive square,
    /// built as `sum_j H'_j / (H'_j . C_j)` where `H'_j = seed + sum a_i C_i`
    /// is orthogonal to every `C_i`, `i != j`.
    pub fn degree_one_polarization(&self, seed: &DivisorClass) -> Result<QDivisor> {
        if seed.len() != self.basis_size() {
            return Err(Error::DimensionMismatch(format!(
                "seed has {} coordinates, lattice has {}",
                seed.len(),
                self.basis_size()
            )));
        }
        if seed.dot(seed) <= 0 || self.cycle.iter().any(|c| seed.dot(c) <= 0) {
            return Err(Error::NoAmpleSeed);
        }
        let m = self.cycle.len();
        for j in 0..m {
            if !self.is_negative_definite(j) {
                return Err(Error::NegativeDefiniteViolation { excluded: j });
            }
        }
        let seed_q = seed.to_rational();
        let mut total = QDivisor(vec![BigRational::zero(); self.basis_size()]);
        for j in 0..m {
            let idx: Vec<usize> = (0..m).filter(|&i| i != j).collect();
            let rhs: Vec<BigRational> = idx
                .iter()
                .map(|&i| -BigRational::from_integer(seed.dot(&self.cycle[i]).into()))
                .collect();
            let a = solve(&self.gram_excluding(j), &rhs)?;
            let mut hj = seed_q.clone();
            for (coef, &i) in a.iter().zip(&idx) {
                for (x, &c) in hj.0.iter_mut().zip(&self.cycle[i].0) {
                    *x += coef * BigRational::from_integer(c.into());
                }
            }
            let deg = hj.dot_int(&self.cycle[j]);
            if !deg.is_positive() {
                return Err(Error::Inconsistent(format!("H'_{j} has degree {deg} on C_{j}")));
            }
            for (t, x) in total.0.iter_mut().zip(&hj.0) {
                *t += x / &deg;
            }
        }
        for (j, c) in self.cycle.iter().enumerate() {
            let d = total.dot_int(c);
            if !d.is_one() {
                return Err(Error::Inconsistent(format!("polarization has degree {d} on C_{j}")));
            }
        }
        if !total.dot(&total).is_positive() {
            return Err(Error::Inconsistent("polarization has non-positive square".into()));
        }
        Ok(total)
    }

    /// Degrees of a rational class on the cycle curves.
    pub fn degrees(&self, h: &QDivisor) -> Vec<BigRational> {
        self.cycle.iter().map(|c| h.dot_int(c)).collect()
    }
}
