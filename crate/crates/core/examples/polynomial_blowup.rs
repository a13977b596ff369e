//! Adjugates, the adjoint relation and the two blow-up charts of a
//! system H f = 0, plus a sampled singular-locus check.
use snc_core::poly::{
    blowup_chart, derive_adjoint_relation, singular_locus_check, verify_chart, Chart, CoeffDomain,
    LocusCheckConfig, PolyMatrix, PolyRing,
};

fn main() -> snc_core::Result<()> {
    let ring = PolyRing::new(CoeffDomain::Int, &["x", "y", "z", "f1", "f2", "f3"])?;
    let h = PolyMatrix::parse(&ring, &[&["x", "y", "z"], &["y", "z^2", "x - 1"]])?;
    let f: Vec<_> = ["f1", "f2", "f3"].iter().map(|v| ring.var(v)).collect::<Result<_, _>>()?;

    let square = h.remove_col(2);
    println!("det H_3 = {}", square.determinant()?);
    let adj = square.adjugate()?;
    for i in 0..adj.rows() {
        let row: Vec<String> = (0..adj.cols()).map(|j| adj.get(i, j).to_string()).collect();
        println!("adj H_3 row {i}: [{}]", row.join(", "));
    }

    let residual = derive_adjoint_relation(&h, &f)?;
    println!("adjoint relation residual vanishes: {}", residual.iter().all(|p| p.is_zero()));

    for chart in [Chart::S, Chart::T] {
        let c = blowup_chart(&f, &h, 0, chart)?;
        println!("{chart:?}-chart in {}:", c.coordinate);
        for e in &c.equations {
            println!("  {e}");
        }
        println!("  exceptional: {}", c.exceptional_equation);
        println!("  verified by division: {:?}", verify_chart(&c, &f, &h)?);
    }

    // x1 x2 = t (x3 x4 - x5 x6) is singular along x1 = x2 = t = 0 = x3x4 - x5x6
    // and along the t-axis
    let r = PolyRing::new(CoeffDomain::Int, &["x1", "x2", "x3", "x4", "x5", "x6", "t"])?;
    let g = r.parse("x1*x2 - t*x3*x4 + t*x5*x6")?;
    let surface = vec![r.var("x1")?, r.var("x2")?, r.var("t")?, r.parse("x3*x4 - x5*x6")?];
    let axis: Vec<_> = (1..=6).map(|i| r.var(&format!("x{i}"))).collect::<Result<_, _>>()?;
    let rep = singular_locus_check(&g, &[surface, axis], LocusCheckConfig { trials: 3000, ..Default::default() })?;
    println!("locus check over F_{}: passed = {}, singular samples = {}", rep.prime, rep.passed, rep.singular_points);
    Ok(())
}
