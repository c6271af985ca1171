//! Property tests for the structural invariants that hold on arbitrary
//! inputs, not just the path-graph fixtures.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use walkmat::matrix::IntegerMatrix;
use walkmat::smith::{determinant_divisor, invariant_factors};

fn matrix(rows: usize, cols: usize, entries: Vec<i64>) -> IntegerMatrix {
    IntegerMatrix::new(rows, cols, entries.into_iter().map(BigInt::from).collect()).unwrap()
}

fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c).prop_map(move |entries| matrix(r, c, entries))
    })
}

fn small_square() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-20i64..=20, n * n).prop_map(move |entries| matrix(n, n, entries))
    })
}

proptest! {
    #[test]
    fn factors_chain_and_count_rank(m in small_matrix()) {
        let snf = invariant_factors(&m);
        prop_assert!(snf.divisibility_chain_holds());
        prop_assert_eq!(snf.rank, snf.invariant_factors.len());
        prop_assert_eq!(snf.rank, m.rank());
    }

    #[test]
    fn factor_products_are_determinant_divisors(m in small_matrix()) {
        let snf = invariant_factors(&m);
        let mut product = BigInt::one();
        for (k, d) in snf.invariant_factors.iter().enumerate() {
            product *= d;
            prop_assert_eq!(
                &product,
                &determinant_divisor(&m, k + 1).unwrap(),
                "partial product vs divisor at order {}", k + 1
            );
        }
        for k in 1..=snf.rank {
            let lower = determinant_divisor(&m, k - 1).unwrap();
            let upper = determinant_divisor(&m, k).unwrap();
            prop_assert!((upper % lower).is_zero());
        }
        if snf.rank < m.rows().min(m.cols()) {
            prop_assert!(determinant_divisor(&m, snf.rank + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_magnitude_is_top_divisor(m in small_square()) {
        let det = m.determinant().unwrap();
        if !det.is_zero() {
            prop_assert_eq!(det.abs(), determinant_divisor(&m, m.rows()).unwrap());
        }
    }

    #[test]
    fn factors_ignore_row_and_column_order(
        (m, row_order, col_order) in small_matrix().prop_flat_map(|m| {
            let rows: Vec<usize> = (0..m.rows()).collect();
            let cols: Vec<usize> = (0..m.cols()).collect();
            (Just(m), Just(rows).prop_shuffle(), Just(cols).prop_shuffle())
        })
    ) {
        let shuffled = m.submatrix(&row_order, &col_order);
        prop_assert_eq!(invariant_factors(&shuffled), invariant_factors(&m));
    }

    #[test]
    fn zero_padding_keeps_factors(m in small_square(), k in 0usize..=3) {
        let padded = invariant_factors(&m.direct_sum_zero(k));
        let plain = invariant_factors(&m);
        prop_assert_eq!(padded.invariant_factors, plain.invariant_factors);
        prop_assert_eq!(padded.rank, plain.rank);
    }

    #[test]
    fn matrix_json_round_trip(
        (r, c) in (1usize..=3, 1usize..=3),
        raw in prop::collection::vec(any::<i128>(), 9)
    ) {
        let entries: Vec<BigInt> = raw.into_iter().take(r * c).map(BigInt::from).collect();
        let m = IntegerMatrix::new(r, c, entries).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        let back: IntegerMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn cos_vandermonde_agrees_with_pair_products(
        gaps in prop::collection::vec(0.05f64..0.35, 1..=10)
    ) {
        let mut theta = 0.1f64;
        let thetas: Vec<f64> = gaps.iter().map(|g| { theta += g; theta }).collect();
        let det = walkmat::spectral::cos_vandermonde_det(&thetas);
        let mut product = 1.0f64;
        for i in 0..thetas.len() {
            for j in 0..i {
                product *= 2.0 * thetas[i].cos() - 2.0 * thetas[j].cos();
            }
        }
        prop_assert!(
            (det - product).abs() <= 1e-9 * product.abs().max(1.0),
            "det {} vs product {}", det, product
        );
    }
}
