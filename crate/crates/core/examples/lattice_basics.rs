//! Exact rank, kernels, determinants and Smith normal form.
use snc_core::lattice::{determinant, kernel_basis, rank, smith_normal_form, IntMatrix, RatMatrix};

fn main() -> snc_core::Result<()> {
    let m = RatMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])?;
    println!("rank = {}", rank(&m));
    println!("det  = {}", determinant(&m)?);
    for v in kernel_basis(&m) {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector [{}]", shown.join(", "));
    }

    // boundary of a triangle with a doubled edge: cokernel has Z/2 torsion
    let d = IntMatrix::from_i64(&[&[2, 0], &[0, 1], &[0, 0]])?;
    let snf = smith_normal_form(&d);
    let diag: Vec<String> = snf.diagonal.iter().map(ToString::to_string).collect();
    println!("smith diagonal = [{}]", diag.join(", "));
    println!("free rank of cokernel = {}", snf.free_rank_of_cokernel(3));
    println!("torsion = {:?}", snf.torsion().iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
