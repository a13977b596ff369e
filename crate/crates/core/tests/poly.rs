use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snc_core::lattice::{determinant, RatMatrix};
use snc_core::poly::{
    blowup_chart, estimate_codim, verify_chart, Chart, CoeffDomain, LinearFormMatrix, MultiPoly, PolyMatrix,
    PolyRing, SamplingMethod,
};
use snc_core::suites::{random_matrix, random_poly};

fn ring() -> PolyRing {
    PolyRing::new(CoeffDomain::Int, &["x", "y", "z"]).unwrap()
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn eval_matrix(m: &PolyMatrix, point: &[BigRational]) -> RatMatrix {
    RatMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).evaluate(point).unwrap())
}

/// Adjugate of a numeric matrix from its cofactors.
fn numeric_adjugate(m: &RatMatrix) -> RatMatrix {
    let n = m.rows();
    if n == 1 {
        return RatMatrix::from_fn(1, 1, |_, _| rat(1));
    }
    RatMatrix::from_fn(n, n, |i, j| {
        let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
        let minor = determinant(&m.select(&rows, &cols)).unwrap();
        if (i + j) % 2 == 0 { minor } else { -minor }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(seed in any::<u64>()) {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poly(&r, 5, 3, &mut rng);
        prop_assert_eq!(r.parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn adjugate_agrees_with_pointwise_cofactors(seed in any::<u64>(), n in 1usize..=4, pt in prop::collection::vec(-3i64..=3, 3)) {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&r, n, n, &mut rng);
        let point: Vec<BigRational> = pt.iter().map(|&x| rat(x)).collect();
        let adj = eval_matrix(&m.adjugate().unwrap(), &point);
        prop_assert_eq!(adj, numeric_adjugate(&eval_matrix(&m, &point)));
        let det = m.determinant().unwrap().evaluate(&point).unwrap();
        prop_assert_eq!(det, determinant(&eval_matrix(&m, &point)).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor(seed in any::<u64>(), n in 1usize..=4) {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&r, n, n, &mut rng);
        prop_assert_eq!(m.determinant_bareiss().unwrap(), m.determinant_cofactor().unwrap());
    }

    #[test]
    fn charts_divide_exactly(seed in any::<u64>(), n in 2usize..=3) {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_matrix(&r, n - 1, n, &mut rng);
        let f: Vec<MultiPoly> = (0..n).map(|_| random_poly(&r, 3, 2, &mut rng)).collect();
        for j in 0..n {
            for chart in [Chart::S, Chart::T] {
                let c = blowup_chart(&f, &h, j, chart).unwrap();
                prop_assert!(verify_chart(&c, &f, &h).unwrap().exact);
            }
        }
    }
}

#[test]
fn five_by_five_determinant_uses_elimination() {
    let r = ring();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = random_matrix(&r, 5, 5, &mut rng);
    let point = vec![rat(2), rat(-1), rat(3)];
    let d = m.determinant().unwrap().evaluate(&point).unwrap();
    assert_eq!(d, determinant(&eval_matrix(&m, &point)).unwrap());
}

/// Exhaustive point count over F_5 against the kernel-incidence estimate.
#[test]
fn rank_locus_count_matches_exhaustive_oracle() {
    let p = 5u64;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (rows, cols, max_rank) in [(2, 2, 0), (2, 1, 0), (3, 2, 1)] {
        let ambient = 4;
        let m = LinearFormMatrix::random(rows, cols, ambient, p, &mut rng);
        let mut count = 0u64;
        let mut x = vec![0u64; ambient];
        loop {
            if m.rank_at(&x) <= max_rank {
                count += 1;
            }
            let mut k = 0;
            while k < ambient {
                x[k] += 1;
                if x[k] < p {
                    break;
                }
                x[k] = 0;
                k += 1;
            }
            if k == ambient {
                break;
            }
        }
        let oracle_codim = (ambient as f64 - (count as f64).ln() / (p as f64).ln()).round() as usize;
        let est = estimate_codim(&m, max_rank, 4000, SamplingMethod::KernelIncidence, &mut rng);
        assert_eq!(est.codim(), Some(oracle_codim), "{rows}x{cols} rank <= {max_rank}, count {count}");
    }
}
