//! Resolution of a 4-fold along the double surface S = Z₁ ∩ Z₂ of a
//! two-component divisor, with local equations x₁x₂ = s^m or x₁x₂ = s^m x₃,
//! and the Betti bookkeeping of the resulting chain E₀ = Z₁, …, E_m = Z₂.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{rank_int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// x₁x₂ = s^m
    Plain,
    /// x₁x₂ = s^m x₃
    Twisted,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "twisted" => Ok(Variant::Twisted),
            _ => Err(Error::InvalidArgument(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalModel {
    pub multiplicity: u32,
    pub variant: Variant,
}

impl LocalModel {
    pub fn new(multiplicity: u32, variant: Variant) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::InvalidArgument("multiplicity must be at least 1".into()));
        }
        Ok(LocalModel { multiplicity, variant })
    }
}

/// Multiplicities m, m − 2, … down to 1 or 2.
pub fn local_model_trace(m: u32, variant: Variant) -> Result<Vec<LocalModel>> {
    let mut out = vec![LocalModel::new(m, variant)?];
    let mut k = m;
    while k >= 3 {
        k -= 2;
        out.push(LocalModel { multiplicity: k, variant });
    }
    Ok(out)
}

/// Component blown up when the multiplicity reaches 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Neighbour {
    /// No earlier blow-ups: the neighbour of Z₁ is Z₂.
    Z2,
    /// The exceptional divisor of the previous step adjacent to Z₁.
    Exceptional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum BlowupStep {
    /// Blow up S at multiplicity ≥ 3: two P¹-bundles over S, m → m − 2.
    DoubleSurface { from: u32, to: u32 },
    /// Blow up S at multiplicity 2: one conic bundle, result smooth.
    ConicBundle,
    /// Multiplicity 1: blow up the component meeting Z₁; it becomes itself
    /// blown up along C.
    Component { neighbour: Neighbour },
    Smooth,
}

impl BlowupStep {
    pub fn exceptional_divisors(&self) -> u32 {
        match self {
            BlowupStep::DoubleSurface { .. } => 2,
            BlowupStep::ConicBundle => 1,
            BlowupStep::Component { .. } | BlowupStep::Smooth => 0,
        }
    }
}

pub fn resolve_local(model: LocalModel) -> Vec<BlowupStep> {
    let mut steps = Vec::new();
    let mut m = model.multiplicity;
    while m >= 3 {
        steps.push(BlowupStep::DoubleSurface { from: m, to: m - 2 });
        m -= 2;
    }
    steps.push(match m {
        2 => BlowupStep::ConicBundle,
        _ => BlowupStep::Component {
            neighbour: if steps.is_empty() { Neighbour::Z2 } else { Neighbour::Exceptional },
        },
    });
    steps.push(BlowupStep::Smooth);
    steps
}

pub fn exceptional_count(steps: &[BlowupStep]) -> u32 {
    steps.iter().map(BlowupStep::exceptional_divisors).sum()
}

/// Betti inputs of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiInputs {
    pub z1: u32,
    pub s: u32,
    pub c: u32,
    pub z2: u32,
}

/// The hypotheses H¹(S, ℤ) = 0 and H²(Z₂, ℤ) ↠ H²(S, ℤ), supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    pub h1_s_zero: bool,
    pub z2_surjective: bool,
}

impl Assumptions {
    pub fn both() -> Self {
        Assumptions {
            h1_s_zero: true,
            z2_surjective: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MemberKind {
    Z1,
    Z2,
    P1BundleOverS,
    P1BundleBlownAlongC,
    Z2BlownAlongC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMember {
    pub kind: MemberKind,
    pub h2: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub m: u32,
    pub members: Vec<ChainMember>,
    /// Pairs (i, i + 1) with E_i ∩ E_{i+1} ≅ S.
    pub intersections: Vec<(usize, usize)>,
    pub h2_closed_form: i64,
    pub h2_mayer_vietoris: i64,
    pub h2_total: i64,
    pub class_rank_bound: ClassRankBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRankBound {
    pub value: u64,
    /// Set when h² was smaller than the number of components.
    pub floored: bool,
}

pub fn class_rank_bound(h2_total: i64, component_count: usize) -> ClassRankBound {
    let d = h2_total - component_count as i64;
    ClassRankBound {
        value: d.max(0) as u64,
        floored: d < 0,
    }
}

/// Chain members E₀..E_m for multiplicity m.
pub fn chain_members(m: u32, b: BettiInputs) -> Vec<ChainMember> {
    let mut members = vec![ChainMember { kind: MemberKind::Z1, h2: b.z1 }];
    if m == 1 {
        members.push(ChainMember {
            kind: MemberKind::Z2BlownAlongC,
            h2: b.z2 + b.c,
        });
        return members;
    }
    members.push(ChainMember {
        kind: MemberKind::P1BundleBlownAlongC,
        h2: b.s + 1 + b.c,
    });
    for _ in 2..m {
        members.push(ChainMember {
            kind: MemberKind::P1BundleOverS,
            h2: b.s + 1,
        });
    }
    members.push(ChainMember { kind: MemberKind::Z2, h2: b.z2 });
    members
}

/// Restriction H²(E₀..E_m) → ⊕ H²(S_i), x ↦ (x_i|S_i − x_{i+1}|S_i).
///
/// Bundle members pull back H²(S) identically to both sections and their
/// extra class restricts to 0; exceptional classes over C restrict to the
/// first basis vector of H²(S) on the side facing Z₁; Z₁ maps its first
/// min(h²Z₁, h²S) basis vectors to unit vectors; Z₂ maps by [I | 0].
pub fn restriction_matrix(members: &[ChainMember], b: BettiInputs) -> IntMatrix {
    let s = b.s as usize;
    let m = members.len() - 1;
    let cols: usize = members.iter().map(|e| e.h2 as usize).sum();
    let mut mat = IntMatrix::zeros(m * s, cols);
    let mut col = 0;
    for (i, e) in members.iter().enumerate() {
        // (intersection index, sign) pairs this member restricts to
        let sides: Vec<(usize, i64)> = [(i.wrapping_sub(1), -1), (i, 1)]
            .into_iter()
            .filter(|&(k, _)| k < m)
            .collect();
        let mut put = |c: usize, basis: usize, only_first: bool| {
            for (n, &(k, sign)) in sides.iter().enumerate() {
                if only_first && n > 0 {
                    break;
                }
                mat[(k * s + basis, c)] = BigInt::from(sign);
            }
        };
        match e.kind {
            MemberKind::Z1 => {
                for j in 0..(b.z1 as usize).min(s) {
                    put(col + j, j, false);
                }
            }
            MemberKind::Z2 => {
                for j in 0..(b.z2 as usize).min(s) {
                    put(col + j, j, false);
                }
            }
            MemberKind::Z2BlownAlongC => {
                for j in 0..(b.z2 as usize).min(s) {
                    put(col + j, j, false);
                }
                for j in 0..b.c as usize {
                    if s > 0 {
                        put(col + b.z2 as usize + j, 0, true);
                    }
                }
            }
            MemberKind::P1BundleOverS | MemberKind::P1BundleBlownAlongC => {
                for j in 0..s {
                    put(col + j, j, false);
                }
                if e.kind == MemberKind::P1BundleBlownAlongC && s > 0 {
                    for j in 0..b.c as usize {
                        put(col + s + 1 + j, 0, true);
                    }
                }
            }
        }
        col += e.h2 as usize;
    }
    mat
}

pub fn h2_closed_form(m: u32, b: BettiInputs) -> i64 {
    b.z1 as i64 + b.z2 as i64 - b.s as i64 + b.c as i64 + (m as i64 - 1)
}

/// Rank of H²(∪E_i) as the kernel of the restriction map, valid when
/// H¹(S) = 0.
pub fn h2_mayer_vietoris(m: u32, b: BettiInputs) -> i64 {
    let members = chain_members(m, b);
    let mat = restriction_matrix(&members, b);
    (mat.cols() - rank_int(&mat)) as i64
}

pub fn build_chain(m: u32, b: BettiInputs, assumptions: Assumptions) -> Result<ChainReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("chain length m must be at least 1".into()));
    }
    if !assumptions.h1_s_zero {
        return Err(Error::AssumptionViolated("H^1(S) = 0 not asserted".into()));
    }
    if !assumptions.z2_surjective {
        return Err(Error::AssumptionViolated("H^2(Z2) -> H^2(S) surjectivity not asserted".into()));
    }
    if b.z2 < b.s {
        return Err(Error::AssumptionViolated(format!(
            "H^2(Z2) of rank {} cannot surject onto H^2(S) of rank {}",
            b.z2, b.s
        )));
    }
    let members = chain_members(m, b);
    let closed = h2_closed_form(m, b);
    let mv = h2_mayer_vietoris(m, b);
    if closed != mv {
        return Err(Error::Inconsistent(format!(
            "closed form h2 = {closed}, Mayer-Vietoris rank = {mv}"
        )));
    }
    let intersections = (0..m as usize).map(|i| (i, i + 1)).collect();
    let bound = class_rank_bound(closed, members.len());
    Ok(ChainReport {
        m,
        members,
        intersections,
        h2_closed_form: closed,
        h2_mayer_vietoris: mv,
        h2_total: closed,
        class_rank_bound: bound,
    })
}

/// Betti inputs for the two glued Fano series: S = P¹×P¹, C connected,
/// Z₂ = P_r.
pub fn series_inputs(z1_h2: u32, z2_h2: u32) -> BettiInputs {
    BettiInputs {
        z1: z1_h2,
        s: 2,
        c: 1,
        z2: z2_h2,
    }
}
