//! Codimension of rank-drop loci of matrices of linear forms, estimated by
//! point counts over a prime field.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snc_core::poly::{estimate_codim, rank_locus_codim_estimate, LinearFormMatrix, RankShape, SamplingMethod};

fn main() -> snc_core::Result<()> {
    let generic = LinearFormMatrix::generic(2, 2, 101);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for method in [SamplingMethod::Uniform, SamplingMethod::KernelIncidence] {
        let e = estimate_codim(&generic, 0, 20_000, method, &mut rng);
        println!("generic 2x2, rank 0 locus, {method:?}: {e:?}");
    }
    for (n, shape, ambient) in [(2, RankShape::Square, 4), (2, RankShape::NByNMinus1, 4), (3, RankShape::NByNMinus1, 6)] {
        let e = rank_locus_codim_estimate(n, shape, ambient, 101, 100_000, SamplingMethod::KernelIncidence, 7)?;
        println!("n = {n}, {shape:?} in A^{ambient}: codim {:?}", e.codim());
    }
    Ok(())
}
