//! Rational surfaces with an anticanonical cycle of rational curves, and a
//! divisor of degree one on every cycle curve.
use snc_core::picard::{BlowupStep, CycleSurface};

fn main() -> snc_core::Result<()> {
    let s = CycleSurface::triangle()
        .apply_all(&[BlowupStep::Corner(0), BlowupStep::Corner(2), BlowupStep::OnCurve(1)])?;
    println!("cycle squares {:?}, invariants ok: {}", s.self_intersections(), s.check_invariants().is_ok());

    for m in [3, 5, 8, 12] {
        let s = CycleSurface::standard(m)?;
        let h = s.degree_one_polarization(&s.default_seed()?)?;
        let degrees: Vec<String> = s.degrees(&h).iter().map(ToString::to_string).collect();
        println!(
            "m = {m:2}: {} blow-ups, squares {:?}, H^2 > 0: {}, H.C = [{}]",
            s.blowups(),
            s.self_intersections(),
            h.dot(&h) > num_rational::BigRational::from_integer(0.into()),
            degrees.join(", ")
        );
    }

    let dp5 = CycleSurface::del_pezzo_five();
    println!("degree 5 del Pezzo cycle: {:?}", dp5.self_intersections());
    Ok(())
}
