//! Sparse multivariate polynomials over Z, Q or F_p.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is
//! lexicographic in the declared variable order and printing is
//! deterministic. Leading terms are the lex-largest.

mod blowup;
mod detvar;
mod locus;
mod matrix;
pub(crate) mod modp;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use blowup::{
    blowup_chart, derive_adjoint_relation, specialize_coordinate, verify_chart, BlowupChart, Chart,
    ChartCheck,
};
pub use detvar::{
    estimate_codim, rank_locus_codim_estimate, CodimEstimate, LinearFormMatrix, RankShape,
    SamplingMethod,
};
pub use locus::{jacobian, singular_locus_check, LocusCheckConfig, LocusCheckReport};
pub use matrix::PolyMatrix;

/// Exponent vector, one entry per ring variable.
pub type Exponents = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Int,
    Rat,
    PrimeField(u64),
}

impl CoeffDomain {
    pub fn prime_field(p: u64) -> Result<Self> {
        if modp::is_prime(p) {
            Ok(CoeffDomain::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Brings a coefficient into canonical form for this domain. Returns
    /// `None` when the value does not live in the domain (a non-integer in
    /// `Int`, or a denominator divisible by `p`).
    fn normalize(&self, c: BigRational) -> Option<BigRational> {
        match *self {
            CoeffDomain::Rat => Some(c),
            CoeffDomain::Int => c.is_integer().then_some(c),
            CoeffDomain::PrimeField(p) => {
                modp::rational_mod(&c, p).map(|v| BigRational::from_integer(BigInt::from(v)))
            }
        }
    }
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

/// Coefficient domain plus an ordered list of variable names.
#[derive(Clone, Debug)]
pub struct PolyRing {
    domain: CoeffDomain,
    vars: Arc<[String]>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<S: AsRef<str>>(domain: CoeffDomain, vars: &[S]) -> Result<Self> {
        if let CoeffDomain::PrimeField(p) = domain {
            CoeffDomain::prime_field(p)?;
        }
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_var_name(n) {
                return Err(Error::Parse(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable {n:?}")));
            }
        }
        Ok(PolyRing {
            domain,
            vars: names.into(),
        })
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with the same domain and `extra` appended to the variables.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<PolyRing> {
        let mut names: Vec<String> = self.vars.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        PolyRing::new(self.domain, &names)
    }

    /// `base` if unused, otherwise `base0`, `base1`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}{i}"))
            .find(|n| self.var_index(n).is_none())
            .expect("unbounded search")
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> MultiPoly {
        self.constant_rat(BigRational::from_integer(c.into()))
            .expect("integers live in every domain")
    }

    pub fn constant_rat(&self, c: BigRational) -> Result<MultiPoly> {
        self.monomial(vec![0; self.nvars()], c)
    }

    /// `c * x^exps`.
    pub fn monomial(&self, exps: Exponents, c: BigRational) -> Result<MultiPoly> {
        if exps.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vector of length {} in a ring with {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        let c = self
            .domain
            .normalize(c)
            .ok_or_else(|| Error::Parse("coefficient outside the domain".into()))?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Ok(MultiPoly {
            ring: self.clone(),
            terms,
        })
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        Ok(self.var_at(i))
    }

    pub fn var_at(&self, i: usize) -> MultiPoly {
        let mut exps = vec![0; self.nvars()];
        exps[i] = 1;
        self.monomial(exps, BigRational::one())
            .expect("unit coefficient")
    }

    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        parse::parse(self, text)
    }
}

/// Polynomial with nonzero coefficients only.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Exponents, BigRational>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    fn from_terms(ring: &PolyRing, raw: BTreeMap<Exponents, BigRational>) -> MultiPoly {
        let terms = match ring.domain {
            CoeffDomain::PrimeField(_) => raw
                .into_iter()
                .filter_map(|(e, c)| {
                    let c = ring.domain.normalize(c).expect("field elements reduce");
                    (!c.is_zero()).then_some((e, c))
                })
                .collect(),
            _ => raw.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        };
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::DomainMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigRational::zero) += c;
        }
        Ok(MultiPoly::from_terms(&self.ring, terms))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigRational::zero) -= c;
        }
        Ok(MultiPoly::from_terms(&self.ring, terms))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut terms: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        Ok(MultiPoly::from_terms(&self.ring, terms))
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes scalars for every variable.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        self.ring
            .domain
            .normalize(acc)
            .ok_or_else(|| Error::Parse("value outside the coefficient domain".into()))
    }

    /// Value at a point of F_p^n. `None` if a coefficient denominator is
    /// divisible by `p`.
    pub fn eval_mod_p(&self, point: &[u64], p: u64) -> Option<u64> {
        debug_assert_eq!(point.len(), self.ring.nvars());
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = modp::rational_mod(c, p)?;
            for (&x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = modp::mul(t, modp::pow(x, k as u64, p), p);
                }
            }
            acc = modp::add(acc, t, p);
        }
        Some(acc)
    }

    /// Replaces variable `var` by `value` (a polynomial in the same ring).
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(value)?;
        let max = self.degree_in(var).unwrap_or(0);
        let powers: Vec<MultiPoly> = std::iter::successors(Some(self.ring.one()), |p| Some(p * value))
            .take(max as usize + 1)
            .collect();
        let mut acc: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            for (e2, c2) in &powers[e[var] as usize].terms {
                let ee: Exponents = rest.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(ee).or_insert_with(BigRational::zero) += c * c2;
            }
        }
        Ok(MultiPoly::from_terms(&self.ring, acc))
    }

    /// Sets variable `var` to a scalar.
    pub fn specialize(&self, var: usize, value: &BigRational) -> Result<MultiPoly> {
        let c = self.ring.constant_rat(value.clone())?;
        self.substitute(var, &c)
    }

    pub fn partial_derivative(&self, var: usize) -> MultiPoly {
        let mut acc = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ee = e.clone();
            ee[var] -= 1;
            acc.insert(ee, c * BigRational::from_integer(e[var].into()));
        }
        MultiPoly::from_terms(&self.ring, acc)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Fails if a variable that actually occurs is missing from `target`, or
    /// if the domains differ.
    pub fn embed_into(&self, target: &PolyRing) -> Result<MultiPoly> {
        if target.domain != self.ring.domain {
            return Err(Error::DomainMismatch);
        }
        let map: Vec<Option<usize>> = self.ring.vars.iter().map(|v| target.var_index(v)).collect();
        let mut acc = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ee = vec![0; target.nvars()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or(Error::DomainMismatch)?;
                ee[j] = k;
            }
            acc.insert(ee, c.clone());
        }
        Ok(MultiPoly::from_terms(target, acc))
    }

    /// Multivariate division by a single polynomial in lex order.
    /// Returns `(quotient, remainder)` with `self = quotient * divisor +
    /// remainder` and no term of the remainder divisible by the leading
    /// term of the divisor (over Z: divisible including the coefficient).
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        self.check_ring(divisor)?;
        let (lead_e, lead_c) = divisor
            .leading_term()
            .ok_or_else(|| Error::DimensionMismatch("division by the zero polynomial".into()))?;
        let (lead_e, lead_c) = (lead_e.clone(), lead_c.clone());
        let mut p = self.clone();
        let mut q: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        let mut r: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        while let Some((e, c)) = p.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let divides = e.iter().zip(&lead_e).all(|(a, b)| a >= b);
            let coeff = &c / &lead_c;
            let coeff_ok = match self.ring.domain {
                CoeffDomain::Int => coeff.is_integer(),
                _ => true,
            };
            if divides && coeff_ok {
                let qe: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
                let t = self.ring.monomial(qe.clone(), coeff.clone())?;
                p = p.try_sub(&(&t * divisor))?;
                *q.entry(qe).or_insert_with(BigRational::zero) += coeff;
            } else {
                p.terms.remove(&e);
                r.insert(e, c);
            }
        }
        Ok((
            MultiPoly::from_terms(&self.ring, q),
            MultiPoly::from_terms(&self.ring, r),
        ))
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .zip(self.ring.vars.iter())
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_coeff(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics when the rings differ; use the `try_` form to handle that.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomials from different rings")
            }
        }
        impl std::ops::$trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$try(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
