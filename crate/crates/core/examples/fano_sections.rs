//! Section spaces of the glued index-2 Fano threefolds Z_r and Z_rs.
use snc_core::fano::{
    cover_degree, degree_one_generation, h0_p, h1_p, quadric_relations, restriction_check, sym_split, Bidegree,
    GluedFano,
};

fn main() -> snc_core::Result<()> {
    println!("Sym^2 of O + O + O(1) splits as {:?}", sym_split(2, 1)?);
    println!("h0(P_3, O(1,1)) = {}, h1(P_3, O(0,-2)) = {}", h0_p(3, 1, 1), h1_p(3, 0, -2));
    println!("restriction O(3,2) on P_5 to S: {:?}", restriction_check(5, 3, 2));
    println!("-(K + S) on P_4 = {:?}", -(Bidegree::canonical_pr(4) + Bidegree::surface_pr(4)));

    for r in 0..4 {
        let z = GluedFano::zr(r);
        let table: Vec<usize> = (1..=3).map(|m| z.h0(m)).collect::<Result<_, _>>()?;
        println!("Z_{r}: h0(L^m) = {table:?}, generated in degree 1: {}", degree_one_generation(&z, 3)?);
    }
    let z = GluedFano::zrs(1, 2);
    println!("Z_12: h0(L) = {}", z.h0(1)?);
    println!("Z_0 quadrics: {:?}", quadric_relations(&GluedFano::zr(0))?);
    println!("cyclic cover degree for index 2, twist 1: {}", cover_degree(-2, 1)?);
    Ok(())
}
