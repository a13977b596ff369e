//! Index-2 Fano threefolds glued from P_r = P(O + O + O(r)) and P³ along a
//! quadric surface S ≅ P¹×P¹.
//!
//! Sections of O_P(a, b) on P_r are modelled by monomials in p, q (bidegree
//! (1,0)), w (bidegree (1,−r)) and u, v (bidegree (0,1)); the surface S_r is
//! w = 0. Sections on P³ are monomials in x0..x3, restricted to the quadric
//! through x0 = ac, x1 = ad, x2 = bc, x3 = bd.

use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{rank, RatMatrix, RowSpan};
use crate::poly::modp;

/// Bidegree (a, b) of O_P(a) ⊗ π*O_{P¹}(b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    /// Fiber degree.
    pub a: i64,
    /// Base degree.
    pub b: i64,
}

impl Bidegree {
    pub const fn new(a: i64, b: i64) -> Self {
        Bidegree { a, b }
    }

    pub fn canonical_pr(r: u32) -> Self {
        Bidegree::new(-3, r as i64 - 2)
    }

    /// Class of the surface S_r = (w = 0).
    pub fn surface_pr(r: u32) -> Self {
        Bidegree::new(1, -(r as i64))
    }

    pub fn is_ample(&self) -> bool {
        self.a > 0 && self.b > 0
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.a, -self.b)
    }
}

/// Splitting of Sym^a(O + O + O(r)) into line bundles on P¹, as
/// `(degree, multiplicity)` pairs in increasing degree.
pub fn sym_split(a: i64, r: u32) -> Result<Vec<(i64, u64)>> {
    if a < 0 {
        return Err(Error::NegativeDegree(a));
    }
    let mut out: Vec<(i64, u64)> = (0..=a).map(|k| (k * r as i64, (a - k + 1) as u64)).collect();
    if r == 0 {
        let total = out.iter().map(|x| x.1).sum();
        out = vec![(0, total)];
    }
    Ok(out)
}

/// h⁰(P_r, O_P(a, b)). Returns 0 for a < 0; only a ≥ −2 occurs in the
/// kernel sequences used here, where both h⁰ and h¹ vanish.
pub fn h0_p(r: u32, a: i64, b: i64) -> u64 {
    sym_split(a, r).map_or(0, |s| {
        s.iter().map(|&(d, mult)| mult * (d + b + 1).max(0) as u64).sum()
    })
}

/// h¹(P_r, O_P(a, b)); 0 for a < 0 as for [`h0_p`].
pub fn h1_p(r: u32, a: i64, b: i64) -> u64 {
    sym_split(a, r).map_or(0, |s| {
        s.iter().map(|&(d, mult)| mult * (-(d + b) - 1).max(0) as u64).sum()
    })
}

/// Key of a monomial section space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "carrier", rename_all = "snake_case")]
pub enum Carrier {
    /// O_P(a, b) on P_r; exponents of p, q, w, u, v.
    Pr { r: u32, degree: Bidegree },
    /// O(m) on P³; exponents of x0..x3.
    P3 { m: u32 },
    /// O(a, b) on P¹×P¹; exponents of p, q, u, v.
    Quadric { degree: Bidegree },
}

/// Monomial basis of a space of sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpace {
    carrier: Carrier,
    basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

fn cache() -> &'static RwLock<HashMap<Carrier, Arc<SectionSpace>>> {
    static CACHE: OnceLock<RwLock<HashMap<Carrier, Arc<SectionSpace>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl SectionSpace {
    /// Shared, memoized basis for `carrier`.
    pub fn of(carrier: Carrier) -> Arc<SectionSpace> {
        if let Some(s) = cache().read().expect("section cache poisoned").get(&carrier) {
            return Arc::clone(s);
        }
        let built = Arc::new(SectionSpace::build(carrier));
        let mut w = cache().write().expect("section cache poisoned");
        Arc::clone(w.entry(carrier).or_insert(built))
    }

    pub fn build(carrier: Carrier) -> SectionSpace {
        let mut basis = Vec::new();
        match carrier {
            Carrier::Pr { r, degree: Bidegree { a, b } } => {
                for k in 0..=a.max(-1) {
                    let base = b + k * r as i64;
                    if base < 0 {
                        continue;
                    }
                    for i in (0..=a - k).rev() {
                        let j = a - k - i;
                        for alpha in (0..=base).rev() {
                            basis.push(vec![i as u32, j as u32, k as u32, alpha as u32, (base - alpha) as u32]);
                        }
                    }
                }
            }
            Carrier::P3 { m } => {
                for e0 in (0..=m).rev() {
                    for e1 in (0..=m - e0).rev() {
                        for e2 in (0..=m - e0 - e1).rev() {
                            basis.push(vec![e0, e1, e2, m - e0 - e1 - e2]);
                        }
                    }
                }
            }
            Carrier::Quadric { degree: Bidegree { a, b } } => {
                if a >= 0 && b >= 0 {
                    for i in (0..=a).rev() {
                        for alpha in (0..=b).rev() {
                            basis.push(vec![i as u32, (a - i) as u32, alpha as u32, (b - alpha) as u32]);
                        }
                    }
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        SectionSpace { carrier, basis, index }
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// The quadric the sections restrict to, or `None` for the quadric itself.
    pub fn restriction_target(&self) -> Option<Carrier> {
        match self.carrier {
            Carrier::Pr { degree, .. } => Some(Carrier::Quadric { degree }),
            Carrier::P3 { m } => Some(Carrier::Quadric {
                degree: Bidegree::new(m as i64, m as i64),
            }),
            Carrier::Quadric { .. } => None,
        }
    }

    /// Image of each basis monomial on the quadric: `None` if it vanishes.
    pub fn restrict_monomial(&self, exps: &[u32]) -> Option<Vec<u32>> {
        match self.carrier {
            Carrier::Pr { .. } => (exps[2] == 0).then(|| vec![exps[0], exps[1], exps[3], exps[4]]),
            Carrier::P3 { .. } => Some(vec![
                exps[0] + exps[1],
                exps[2] + exps[3],
                exps[0] + exps[2],
                exps[1] + exps[3],
            ]),
            Carrier::Quadric { .. } => Some(exps.to_vec()),
        }
    }

    /// Restriction as a column map into the quadric basis.
    pub fn restriction(&self) -> (Arc<SectionSpace>, Vec<Option<usize>>) {
        let target = SectionSpace::of(self.restriction_target().unwrap_or(self.carrier));
        let map = self
            .basis
            .iter()
            .map(|e| {
                self.restrict_monomial(e)
                    .map(|t| target.position(&t).expect("restriction lands in the quadric basis"))
            })
            .collect();
        (target, map)
    }

    /// Restriction matrix (quadric rows, section columns).
    pub fn restriction_matrix(&self) -> RatMatrix {
        let (target, map) = self.restriction();
        let mut m = RatMatrix::zeros(target.dimension(), self.dimension());
        for (c, row) in map.iter().enumerate() {
            if let Some(r) = row {
                m[(*r, c)] = One::one();
            }
        }
        m
    }
}

/// Outcome of restricting O_P(a, b) from P_r to S_r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionCheck {
    pub rank: usize,
    pub target_dimension: usize,
    /// h¹ of the kernel O_P(a − 1, b + r).
    pub kernel_h1: u64,
    pub surjective: bool,
}

pub fn restriction_check(r: u32, a: i64, b: i64) -> RestrictionCheck {
    let space = SectionSpace::of(Carrier::Pr { r, degree: Bidegree::new(a, b) });
    let m = space.restriction_matrix();
    let rk = rank(&m);
    RestrictionCheck {
        rank: rk,
        target_dimension: m.rows(),
        kernel_h1: h1_p(r, a - 1, b + r as i64),
        surjective: rk == m.rows(),
    }
}

pub fn restriction_surjective(r: u32, a: i64, b: i64) -> bool {
    restriction_check(r, a, b).surjective
}

/// Whether products of monomials of two bidegrees span the sum bidegree.
pub fn mult_surjective(r: u32, d1: Bidegree, d2: Bidegree) -> bool {
    let s1 = SectionSpace::of(Carrier::Pr { r, degree: d1 });
    let s2 = SectionSpace::of(Carrier::Pr { r, degree: d2 });
    let t = SectionSpace::of(Carrier::Pr { r, degree: d1 + d2 });
    let mut hit = vec![false; t.dimension()];
    for x in s1.basis() {
        for y in s2.basis() {
            let e: Vec<u32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            hit[t.position(&e).expect("product stays in the target basis")] = true;
        }
    }
    hit.iter().all(|&h| h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FanoKind {
    /// P_r glued to P³.
    Zr { r: u32 },
    /// P_r glued to P_s.
    Zrs { r: u32, s: u32 },
}

/// Two components glued along S ≅ P¹×P¹. The default identification matches
/// (p, q) with the Segre (a, b) factor and (u, v) with (c, d); `swap`
/// exchanges the factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluedFano {
    pub kind: FanoKind,
    pub swap: bool,
}

/// Kernel of the joint restriction map in degree m.
#[derive(Clone, Debug)]
pub struct GluedSections {
    pub left: Arc<SectionSpace>,
    pub right: Arc<SectionSpace>,
    /// Integral basis of the kernel, in left-then-right coordinates.
    pub basis: Vec<Vec<(usize, i64)>>,
    pub quadric_dimension: usize,
    pub joint_rank: usize,
}

impl GluedSections {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self) -> usize {
        self.left.dimension() + self.right.dimension()
    }
}

impl GluedFano {
    pub fn zr(r: u32) -> Self {
        GluedFano { kind: FanoKind::Zr { r }, swap: false }
    }

    pub fn zrs(r: u32, s: u32) -> Self {
        GluedFano { kind: FanoKind::Zrs { r, s }, swap: false }
    }

    pub fn swapped(self, swap: bool) -> Self {
        GluedFano { swap, ..self }
    }

    /// Carriers of L^m on the two components.
    pub fn carriers(&self, m: u32) -> (Carrier, Carrier) {
        let d = Bidegree::new(m as i64, m as i64);
        match self.kind {
            FanoKind::Zr { r } => (Carrier::Pr { r, degree: d }, Carrier::P3 { m }),
            FanoKind::Zrs { r, s } => (Carrier::Pr { r, degree: d }, Carrier::Pr { r: s, degree: d }),
        }
    }

    /// Second Betti numbers of the two components, ordered (Z₁, Z₂) so that
    /// Z₂ = P_r surjects onto H²(S).
    pub fn component_h2(&self) -> (u32, u32) {
        match self.kind {
            FanoKind::Zr { .. } => (1, 2),
            FanoKind::Zrs { .. } => (2, 2),
        }
    }

    fn identify(&self, e: Vec<u32>) -> Vec<u32> {
        if self.swap {
            vec![e[2], e[3], e[0], e[1]]
        } else {
            e
        }
    }

    /// Joint restriction matrix [R_left | −φ R_right].
    pub fn joint_matrix(&self, m: u32) -> RatMatrix {
        let (lc, rc) = self.carriers(m);
        let (left, right) = (SectionSpace::of(lc), SectionSpace::of(rc));
        let (quad, lmap) = left.restriction();
        let mut mat = RatMatrix::zeros(quad.dimension(), left.dimension() + right.dimension());
        for (c, row) in lmap.iter().enumerate() {
            if let Some(r) = row {
                mat[(*r, c)] = One::one();
            }
        }
        for (c, e) in right.basis().iter().enumerate() {
            if let Some(t) = right.restrict_monomial(e) {
                let r = quad.position(&self.identify(t)).expect("identification preserves the quadric basis");
                mat[(r, left.dimension() + c)] = -BigRational::one();
            }
        }
        mat
    }

    pub fn sections(&self, m: u32) -> Result<GluedSections> {
        let (lc, rc) = self.carriers(m);
        let (left, right) = (SectionSpace::of(lc), SectionSpace::of(rc));
        let joint = self.joint_matrix(m);
        let joint_rank = rank(&joint);
        let cols = joint.cols();

        // Every column of the joint matrix has at most one nonzero entry, ±1.
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); joint.rows()];
        let mut basis = Vec::new();
        for c in 0..cols {
            match (0..joint.rows()).find(|&r| !joint[(r, c)].is_zero()) {
                Some(r) => {
                    let sign = if joint[(r, c)].is_one() { 1 } else { -1 };
                    by_row[r].push((c, sign));
                }
                None => basis.push(vec![(c, 1)]),
            }
        }
        for row in &by_row {
            if let Some((&(c0, e0), rest)) = row.split_first() {
                for &(c, e) in rest {
                    basis.push(vec![(c0, -e * e0), (c, 1)]);
                }
            }
        }
        basis.sort();
        if basis.len() != cols - joint_rank {
            return Err(Error::Inconsistent(format!(
                "kernel basis has {} vectors, rank count gives {}",
                basis.len(),
                cols - joint_rank
            )));
        }
        let quadric_dimension = joint.rows();
        let full_rank = |s: &SectionSpace| rank(&s.restriction_matrix()) == quadric_dimension;
        if full_rank(&left) && full_rank(&right) {
            let expected = left.dimension() + right.dimension() - quadric_dimension;
            if basis.len() != expected {
                return Err(Error::Inconsistent(format!(
                    "glued sections {} differ from h0(left) + h0(right) - h0(S) = {expected}",
                    basis.len()
                )));
            }
        }
        Ok(GluedSections {
            left,
            right,
            basis,
            quadric_dimension,
            joint_rank,
        })
    }

    pub fn h0(&self, m: u32) -> Result<usize> {
        self.sections(m).map(|s| s.dimension())
    }

    pub fn embedding_dimension(&self) -> Result<usize> {
        self.h0(1)
    }
}

pub fn glued_h0(z: &GluedFano, m: u32) -> Result<usize> {
    z.h0(m)
}

/// Product of two glued sections, in the coordinates of `target`.
fn multiply(x: &[(usize, i64)], xs: &GluedSections, y: &[(usize, i64)], ys: &GluedSections, target: &GluedSections) -> Vec<(usize, i64)> {
    let split = |s: &GluedSections, c: usize| -> (bool, Vec<u32>) {
        if c < s.left.dimension() {
            (false, s.left.basis()[c].clone())
        } else {
            (true, s.right.basis()[c - s.left.dimension()].clone())
        }
    };
    let mut out: HashMap<usize, i64> = HashMap::new();
    for &(cx, ax) in x {
        let (rx, ex) = split(xs, cx);
        for &(cy, ay) in y {
            let (ry, ey) = split(ys, cy);
            if rx != ry {
                continue;
            }
            let e: Vec<u32> = ex.iter().zip(&ey).map(|(a, b)| a + b).collect();
            let col = if rx {
                target.left.dimension() + target.right.position(&e).expect("product in right basis")
            } else {
                target.left.position(&e).expect("product in left basis")
            };
            *out.entry(col).or_insert(0) += ax * ay;
        }
    }
    let mut v: Vec<(usize, i64)> = out.into_iter().filter(|&(_, a)| a != 0).collect();
    v.sort();
    v
}

const FAST_PRIME: u64 = 2_147_483_647;

/// Rank of a set of sparse integer vectors. A rank over F_p is a lower bound
/// for the rank over ℚ, so the exact computation runs only when the fast
/// one falls short of `target`.
fn span_rank(vectors: &[Vec<(usize, i64)>], dim: usize, target: usize) -> usize {
    let dense_mod = vectors
        .iter()
        .map(|v| {
            let mut row = vec![0u64; dim];
            for &(c, a) in v {
                row[c] = a.rem_euclid(FAST_PRIME as i64) as u64;
            }
            row
        })
        .collect();
    let fast = modp::rank(dense_mod, FAST_PRIME);
    if fast >= target {
        return fast;
    }
    let mut span = RowSpan::new(dim);
    for v in vectors {
        let mut row = vec![BigInt::zero(); dim];
        for &(c, a) in v {
            row[c] = BigInt::from(a);
        }
        span.insert(row);
    }
    span.rank()
}

/// Rank of H⁰(L) ⊗ H⁰(L^m) → H⁰(L^{m+1}) on glued sections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicationRank {
    pub m: u32,
    pub rank: usize,
    pub target: usize,
}

pub fn multiplication_rank(z: &GluedFano, m: u32) -> Result<MultiplicationRank> {
    let one = z.sections(1)?;
    let src = z.sections(m)?;
    let dst = z.sections(m + 1)?;
    let mut products = Vec::with_capacity(one.dimension() * src.dimension());
    for x in &one.basis {
        for y in &src.basis {
            let p = multiply(x, &one, y, &src, &dst);
            if !p.is_empty() {
                products.push(p);
            }
        }
    }
    let target = dst.dimension();
    Ok(MultiplicationRank {
        m,
        rank: span_rank(&products, dst.coordinates(), target),
        target,
    })
}

/// Whether H⁰(L) generates H⁰(L^m) for every m ≤ m_max.
pub fn degree_one_generation(z: &GluedFano, m_max: u32) -> Result<bool> {
    if m_max < 2 {
        return Err(Error::InvalidArgument(format!("m_max must be at least 2, got {m_max}")));
    }
    for m in 1..m_max {
        let r = multiplication_rank(z, m)?;
        if r.rank != r.target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quadrics through the embedded surface: kernel of S²H⁰(L) → H⁰(L²).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricRelations {
    pub sym2_dimension: usize,
    pub h0_l2: usize,
    pub image_rank: usize,
    pub relations: usize,
}

pub fn quadric_relations(z: &GluedFano) -> Result<QuadricRelations> {
    let one = z.sections(1)?;
    let two = z.sections(2)?;
    let n = one.dimension();
    let mut products = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            products.push(multiply(&one.basis[i], &one, &one.basis[j], &one, &two));
        }
    }
    let dim = two.coordinates();
    let mut m = RatMatrix::zeros(products.len(), dim);
    for (r, v) in products.iter().enumerate() {
        for &(c, a) in v {
            m[(r, c)] = BigRational::from_integer(BigInt::from(a));
        }
    }
    let image_rank = rank(&m);
    Ok(QuadricRelations {
        sym2_dimension: products.len(),
        h0_l2: two.dimension(),
        image_rank,
        relations: products.len() - image_rank,
    })
}

/// Power of L in the normal bundle ω_Z ⊗ L^{−m}, where ω_Z ≅ L^{r_omega}.
pub fn normal_bundle_degree(r_omega: i64, m: i64) -> Result<i64> {
    if m <= r_omega {
        return Err(Error::NormalBundleNotNegative { r_omega, m });
    }
    Ok(r_omega - m)
}

/// Degree of the cyclic cover that makes the normal bundle L^{−1}; also the
/// node multiplicity of the resulting local equations.
pub fn cover_degree(r_omega: i64, m: i64) -> Result<u32> {
    let d = -normal_bundle_degree(r_omega, m)?;
    u32::try_from(d).map_err(|_| Error::InvalidArgument(format!("cover degree {d} out of range")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SingularityType {
    Lc,
    Canonical,
    Terminal,
}

/// Type of the contracted singularity when −K_Z ≅ L^{r_eff}: always log
/// canonical, canonical if r_eff > 0 and Y is canonical, terminal if moreover
/// r_eff > 1 and Y \ Z is terminal.
pub fn classify_singularity(r_eff: i64, y_canonical: bool, y_minus_z_terminal: bool) -> SingularityType {
    if r_eff > 1 && y_canonical && y_minus_z_terminal {
        SingularityType::Terminal
    } else if r_eff > 0 && y_canonical {
        SingularityType::Canonical
    } else {
        SingularityType::Lc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting() {
        assert_eq!(sym_split(0, 4).unwrap(), vec![(0, 1)]);
        assert_eq!(sym_split(1, 3).unwrap(), vec![(0, 2), (3, 1)]);
        assert_eq!(sym_split(2, 1).unwrap(), vec![(0, 3), (1, 2), (2, 1)]);
        assert_eq!(sym_split(-1, 1), Err(Error::NegativeDegree(-1)));
    }

    #[test]
    fn cohomology_values() {
        for r in 0..10 {
            assert_eq!(h0_p(r, 1, 1), r as u64 + 6);
        }
        assert_eq!(h0_p(0, 2, 2), 18);
        assert_eq!(h1_p(3, 0, -2), 1);
        assert_eq!(h0_p(2, -1, 5), 0);
        assert_eq!(h1_p(2, -2, 5), 0);
    }

    #[test]
    fn basis_matches_count() {
        for r in 0..=8 {
            for a in 0..=4 {
                for b in -6..=6 {
                    let s = SectionSpace::build(Carrier::Pr { r, degree: Bidegree::new(a, b) });
                    assert_eq!(s.dimension() as u64, h0_p(r, a, b), "r={r} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn bidegree_bookkeeping() {
        for r in 0..6 {
            let k = Bidegree::canonical_pr(r) + Bidegree::surface_pr(r);
            assert_eq!(-k, Bidegree::new(2, 2));
        }
        assert!(Bidegree::new(1, 1).is_ample());
        assert!(!Bidegree::new(1, 0).is_ample());
    }

    #[test]
    fn restriction() {
        let c = restriction_check(4, 1, 1);
        assert_eq!((c.rank, c.target_dimension), (4, 4));
        let c = restriction_check(5, 3, 2);
        assert!(c.surjective);
        assert_eq!(c.kernel_h1, 0);
        assert_eq!(restriction_check(2, 0, 3).rank, 4);
    }

    #[test]
    fn multiplication() {
        for r in 0..=6 {
            assert!(mult_surjective(r, Bidegree::new(1, 1), Bidegree::new(1, 1)));
            assert!(mult_surjective(r, Bidegree::new(2, 1), Bidegree::new(0, 0)));
        }
    }

    #[test]
    fn glued_dimensions() {
        for r in 0..5 {
            assert_eq!(glued_h0(&GluedFano::zr(r), 1).unwrap(), r as usize + 6);
            assert_eq!(glued_h0(&GluedFano::zrs(r, 2), 1).unwrap(), r as usize + 10);
        }
        assert_eq!(glued_h0(&GluedFano::zr(0), 2).unwrap(), 19);
    }

    #[test]
    fn swap_does_not_change_dimensions() {
        for z in [GluedFano::zr(2), GluedFano::zrs(1, 3)] {
            for m in 1..=3 {
                assert_eq!(z.h0(m).unwrap(), z.swapped(true).h0(m).unwrap());
            }
        }
    }

    #[test]
    fn two_quadrics() {
        let q = quadric_relations(&GluedFano::zr(0)).unwrap();
        assert_eq!((q.sym2_dimension, q.h0_l2, q.relations), (21, 19, 2));
    }

    #[test]
    fn generation_small() {
        assert!(degree_one_generation(&GluedFano::zr(1), 3).unwrap());
        assert!(degree_one_generation(&GluedFano::zrs(1, 2), 3).unwrap());
        assert!(degree_one_generation(&GluedFano::zr(1), 1).is_err());
    }

    #[test]
    fn covers_and_types() {
        assert_eq!(cover_degree(-2, 1).unwrap(), 3);
        assert_eq!(normal_bundle_degree(0, 4).unwrap(), -4);
        assert_eq!(cover_degree(0, 4).unwrap(), 4);
        assert!(matches!(cover_degree(3, 3), Err(Error::NormalBundleNotNegative { .. })));
        assert_eq!(classify_singularity(0, true, true), SingularityType::Lc);
        assert_eq!(classify_singularity(1, true, true), SingularityType::Canonical);
        assert_eq!(classify_singularity(2, true, true), SingularityType::Terminal);
        assert_eq!(classify_singularity(2, true, false), SingularityType::Canonical);
    }
}
