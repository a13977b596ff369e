//! Resolve x1 x2 = s^m (or s^m x3) along S and count second Betti numbers
//! of the resulting chain.
use snc_core::resolution::{build_chain, resolve_local, series_inputs, Assumptions, LocalModel, Variant};

fn main() -> snc_core::Result<()> {
    for m in [1, 2, 5] {
        println!("m = {m}: {:?}", resolve_local(LocalModel::new(m, Variant::Plain)?));
    }
    for (name, z1, z2) in [("P3 + P_r", 1, 2), ("P_s + P_r", 2, 2)] {
        let c = build_chain(3, series_inputs(z1, z2), Assumptions::both())?;
        let kinds: Vec<_> = c.members.iter().map(|e| (e.kind, e.h2)).collect();
        println!(
            "{name}: members {kinds:?}, h2 = {} (Mayer-Vietoris {}), class rank <= {}",
            c.h2_closed_form, c.h2_mayer_vietoris, c.class_rank_bound.value
        );
    }
    Ok(())
}
