//! Glue rational surfaces along the dual complex of a triangulated surface
//! and compare the result with the surface itself.
use snc_core::snc::{Component, DualComplex, SncSurface, SurfaceKind, Triangulation};

fn main() -> snc_core::Result<()> {
    for kind in SurfaceKind::ALL {
        let t = kind.triangulation();
        let z = SncSurface::from_triangulation(&t)?;
        let s = z.summary();
        let (free, torsion) = t.first_homology();
        println!(
            "{kind:?}: h^i(O) = {:?} (F: {:?}), H1 = Z^{} + {:?} (F: Z^{free} + {:?}), K order {}, loop classes {}",
            s.cohomology,
            t.betti_numbers(),
            s.abelianization.free_rank,
            s.abelianization.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            s.canonical_order,
            s.loop_classes,
        );
    }

    // twelve degree-5 del Pezzo surfaces on the dodecahedron
    let dual = DualComplex::from_triangulation(&Triangulation::icosahedron())?;
    let mut z = SncSurface::assemble(&dual, &mut |_| Ok(Component::del_pezzo_five()))?;
    println!("dodecahedral gluing: {:?}", z.summary().cohomology);
    z.set_node_markings(&vec![false; z.double_curves.len()])?;
    println!("loop classes without node markings: {}", z.loop_kernel_classes());
    Ok(())
}
