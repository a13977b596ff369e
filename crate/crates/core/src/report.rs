//! Reproducible command reports: echoed inputs, outputs tagged with the
//! operation that produced them, and pass/fail assertions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::fano::{
    classify_singularity, cover_degree, degree_one_generation, quadric_relations, FanoKind, GluedFano,
};
use crate::picard::CycleSurface;
use crate::resolution::{
    build_chain, exceptional_count, local_model_trace, resolve_local, series_inputs, Assumptions,
    BettiInputs, LocalModel, Variant,
};
use crate::snc::{SncSurface, Triangulation};
use crate::suites::{run_suite, Suite};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Output {
    pub op: String,
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: Vec<Output>,
    pub assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: Vec::new(),
            assertions: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(name.to_string(), json(value));
        self
    }

    pub fn output(&mut self, op: &str, name: &str, value: impl Serialize) -> &mut Self {
        self.outputs.push(Output {
            op: op.to_string(),
            name: name.to_string(),
            value: json(value),
        });
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.assertions.push(Assertion {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.outputs.iter().find(|o| o.name == name).map(|o| &o.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "snc {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "  input  {k} = {v}");
        }
        for o in &self.outputs {
            let _ = writeln!(s, "  [{}] {} = {}", o.op, o.name, o.value);
        }
        for a in &self.assertions {
            let tag = if a.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "  {tag} {}: {}", a.name, a.detail);
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "  time {ms} ms");
        }
        let _ = write!(s, "{}", if self.passed() { "ok" } else { "FAILED" });
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceSpec {
    /// k corner blow-ups of the triangle, always at the highest corner.
    Corners(usize),
    /// The standard schedule for cycle length m.
    Standard(usize),
}

pub fn cmd_surface(spec: SurfaceSpec) -> Result<Report> {
    let mut r = Report::new("surface");
    let surface = match spec {
        SurfaceSpec::Corners(k) => {
            r.input("corners", k);
            CycleSurface::corners(k)
        }
        SurfaceSpec::Standard(m) => {
            r.input("schedule", "standard").input("length", m);
            r.output("picard.standard_steps", "steps", CycleSurface::standard_steps(m)?);
            CycleSurface::standard(m)?
        }
    };
    let squares = surface.self_intersections();
    r.output("picard.basis", "basis_size", surface.basis_size())
        .output("picard.cycle", "cycle_length", surface.cycle_length())
        .output("picard.cycle", "self_intersections", &squares)
        .output("picard.cycle", "canonical", surface.canonical())
        .output("picard.gram", "gram", surface.gram());
    let violations = surface.invariant_violations();
    r.check(
        "invariants",
        violations.is_empty(),
        if violations.is_empty() { "cycle sum equals -K, adjacency and genus checks hold".to_string() } else { violations.join("; ") },
    );
    let negative = squares.iter().all(|&c| c <= -2);
    r.output("picard.cycle", "all_at_most_minus_two", negative);
    if matches!(spec, SurfaceSpec::Standard(_)) {
        r.check("self_intersections_at_most_minus_two", negative, format!("{squares:?}"));
    }
    let polarization = surface.default_seed().and_then(|seed| surface.degree_one_polarization(&seed));
    match polarization {
        Ok(h) => {
            let degrees = surface.degrees(&h);
            let square = h.dot(&h);
            r.output("picard.polarization", "polarization", h.to_strings())
                .output("picard.polarization", "degrees", degrees.iter().map(ToString::to_string).collect::<Vec<_>>())
                .output("picard.polarization", "square", square.to_string());
            r.check(
                "polarization_degree_one",
                degrees.iter().all(One::is_one) && square > Zero::zero(),
                "H.C_j = 1 for every j and H^2 > 0",
            );
        }
        Err(e) => {
            r.output("picard.polarization", "polarization_unavailable", e.to_string());
            if matches!(spec, SurfaceSpec::Standard(_)) {
                r.check("polarization_degree_one", false, e.to_string());
            }
        }
    }
    Ok(r)
}

pub fn cmd_glue(t: &Triangulation, source: &str) -> Result<Report> {
    let mut r = Report::new("glue");
    r.input("triangulation", source)
        .input("vertices", t.vertices)
        .input("triangles", t.triangles.len());
    let surface = SncSurface::from_triangulation(t)?;
    let summary = surface.summary();
    r.output("snc.assemble", "components", summary.components)
        .output("snc.assemble", "double_curves", summary.double_curves)
        .output("snc.assemble", "triple_points", summary.triple_points)
        .output("snc.structure_cohomology", "cohomology", summary.cohomology)
        .output("snc.fundamental_group", "abelianization", &summary.abelianization)
        .output("snc.canonical_order", "canonical_order", summary.canonical_order)
        .output("snc.euler_characteristic", "euler_characteristic", summary.euler_characteristic)
        .output("snc.loop_kernel_classes", "loop_classes", summary.loop_classes);
    let betti = t.betti_numbers();
    let (free, torsion) = t.first_homology();
    r.output("simplicial.betti", "surface_betti", betti);
    r.check(
        "cohomology_matches_surface",
        summary.cohomology == betti,
        format!("h^i(Z) = {:?}, h^i(F) = {betti:?}", summary.cohomology),
    );
    let ab = &summary.abelianization;
    r.check(
        "abelianization_matches_h1",
        ab.free_rank == free && ab.torsion == torsion,
        format!(
            "rank {} torsion {:?} vs H1(F) rank {free} torsion {:?}",
            ab.free_rank,
            ab.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            torsion.iter().map(ToString::to_string).collect::<Vec<_>>()
        ),
    );
    r.check(
        "euler_characteristic",
        summary.euler_characteristic == t.euler_characteristic(),
        format!("{} vs {}", summary.euler_characteristic, t.euler_characteristic()),
    );
    Ok(r)
}

pub fn cmd_fano(z: GluedFano, m_max: u32) -> Result<Report> {
    let mut r = Report::new("fano");
    let (expected, z1_h2, z2_h2, expected_rank) = match z.kind {
        FanoKind::Zr { r: rr } => {
            r.input("kind", "zr").input("r", rr);
            (rr as usize + 6, 1, 2, 0)
        }
        FanoKind::Zrs { r: rr, s } => {
            r.input("kind", "zrs").input("r", rr).input("s", s);
            (rr as usize + s as usize + 8, 2, 2, 1)
        }
    };
    r.input("mmax", m_max).input("swap", z.swap);
    let table = (1..=m_max).map(|m| z.h0(m)).collect::<Result<Vec<_>>>()?;
    r.output("fano.glued_h0", "h0_table", &table);
    let embedding = table[0];
    r.output("fano.embedding_dimension", "embedding_dimension", embedding);
    r.check("embedding_dimension_series", embedding == expected, format!("{embedding} (series value {expected})"));
    if z.kind == (FanoKind::Zr { r: 0 }) {
        let q = quadric_relations(&z)?;
        r.output("fano.quadric_relations", "quadric_relations", &q);
        r.check("two_quadrics", q.relations == 2, format!("{} - {} = {}", q.sym2_dimension, q.image_rank, q.relations));
    }
    let generated = degree_one_generation(&z, m_max)?;
    r.output("fano.degree_one_generation", "generated_in_degree_one", generated);
    r.check("degree_one_generation", generated, format!("up to degree {m_max}"));
    let m = cover_degree(-2, 1)?;
    r.output("fano.cover_degree", "node_multiplicity", m);
    let chain = build_chain(m, series_inputs(z1_h2, z2_h2), Assumptions::both())?;
    r.output("resolution.build_chain", "h2_total", chain.h2_total)
        .output("resolution.class_rank_bound", "class_rank_bound", chain.class_rank_bound);
    r.check(
        "class_rank_bound",
        chain.class_rank_bound.value == expected_rank && !chain.class_rank_bound.floored,
        format!("{} (series value {expected_rank})", chain.class_rank_bound.value),
    );
    r.output("fano.classify_singularity", "singularity", classify_singularity(2, true, true));
    Ok(r)
}

pub fn cmd_resolve(m: u32, variant: Variant, betti: BettiInputs, assumptions: Assumptions) -> Result<Report> {
    let mut r = Report::new("resolve");
    r.input("m", m)
        .input("variant", variant)
        .input("h2", [betti.z1, betti.s, betti.c, betti.z2])
        .input("assumptions", assumptions);
    let trace = local_model_trace(m, variant)?;
    r.output("resolution.local_model_trace", "multiplicities", trace.iter().map(|l| l.multiplicity).collect::<Vec<_>>());
    let steps = resolve_local(LocalModel::new(m, variant)?);
    let count = exceptional_count(&steps);
    r.output("resolution.resolve_local", "steps", &steps)
        .output("resolution.resolve_local", "exceptional_divisors", count);
    r.check("exceptional_count", count + 1 == m, format!("{count} = m - 1"));
    let chain = build_chain(m, betti, assumptions)?;
    r.output("resolution.build_chain", "members", &chain.members)
        .output("resolution.build_chain", "intersections", &chain.intersections)
        .output("resolution.h2_closed_form", "h2_closed_form", chain.h2_closed_form)
        .output("resolution.h2_mayer_vietoris", "h2_mayer_vietoris", chain.h2_mayer_vietoris)
        .output("resolution.class_rank_bound", "class_rank_bound", chain.class_rank_bound);
    r.check(
        "h2_paths_agree",
        chain.h2_closed_form == chain.h2_mayer_vietoris,
        format!("{} = {}", chain.h2_closed_form, chain.h2_mayer_vietoris),
    );
    let path = chain.intersections.iter().enumerate().all(|(i, &(a, b))| a == i && b == i + 1);
    r.check("chain_is_path", path, format!("{} members", chain.members.len()));
    Ok(r)
}

pub fn cmd_verify(suites: &[Suite], seed: u64) -> Result<Report> {
    let mut r = Report::new("verify");
    r.input("suites", suites).input("seed", seed);
    for &suite in suites {
        let res = run_suite(suite, seed)?;
        let op = format!("suites.{}", suite.name());
        r.output(&op, &format!("{}_cases", suite.name()), res.cases)
            .output(&op, &format!("{}_failures", suite.name()), res.failures);
        r.check(
            suite.name(),
            res.passed(),
            res.first_failure.clone().unwrap_or_else(|| format!("{} cases", res.cases)),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_reports() {
        let tri = cmd_surface(SurfaceSpec::Corners(0)).unwrap();
        assert_eq!(tri.get("cycle_length"), Some(&json(3)));
        assert!(tri.passed());
        let std = cmd_surface(SurfaceSpec::Standard(6)).unwrap();
        assert!(std.passed(), "{}", std.to_text());
    }

    #[test]
    fn glue_reports() {
        let rp2 = cmd_glue(&Triangulation::projective_plane(), "rp2").unwrap();
        assert!(rp2.passed(), "{}", rp2.to_text());
        assert_eq!(rp2.get("cohomology"), Some(&json([1, 0, 0])));
        assert_eq!(rp2.get("canonical_order"), Some(&json(2)));
    }

    #[test]
    fn fano_reports() {
        let zr = cmd_fano(GluedFano::zr(0), 3).unwrap();
        assert!(zr.passed(), "{}", zr.to_text());
        assert_eq!(zr.get("embedding_dimension"), Some(&json(6)));
        let zrs = cmd_fano(GluedFano::zrs(1, 2), 2).unwrap();
        assert_eq!(zrs.get("embedding_dimension"), Some(&json(11)));
        assert_eq!(zrs.get("singularity"), Some(&json("TERMINAL")));
    }

    #[test]
    fn resolve_and_verify_reports() {
        let b = BettiInputs { z1: 1, s: 2, c: 1, z2: 2 };
        assert!(cmd_resolve(5, Variant::Plain, b, Assumptions::both()).unwrap().passed());
        assert!(cmd_resolve(5, Variant::Plain, b, Assumptions::default()).is_err());
        let v = cmd_verify(&[Suite::Adjoint], 0).unwrap();
        assert_eq!(v.to_json(), cmd_verify(&[Suite::Adjoint], 0).unwrap().to_json());
    }
}
