//! Invariant factors and determinant divisors of integer matrices.
//!
//! `invariant_factors` reduces by elementary integer row and column
//! operations, always pivoting on a nonzero entry of minimal absolute value;
//! Euclidean remainder steps shrink the pivot until it divides its whole row
//! and column, and a final sweep enforces divisibility into the trailing
//! block. `determinant_divisor` goes the other way and takes gcds of all
//! k x k minors; the two routes are kept separate so they can check each
//! other on small matrices.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Invariant factors d1 | d2 | ... | dt of an integer matrix, with the rank
/// t and the source dimensions. The zero matrix has an empty factor list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    /// Materializes diag(d1, ..., dt, 0, ..., 0) in the source dimensions.
    pub fn to_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows, self.cols);
        for (i, d) in self.invariant_factors.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// All factors positive and each dividing the next.
    pub fn divisibility_chain_holds(&self) -> bool {
        self.invariant_factors.iter().all(|d| d.is_positive())
            && self
                .invariant_factors
                .windows(2)
                .all(|w| (&w[1] % &w[0]).is_zero())
    }
}

/// Smith normal form data by elementary reduction. Factors are reported
/// positive; the number of factors equals the rank.
pub fn invariant_factors(m: &IntegerMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_nested();
    let dim = rows.min(cols);
    let mut k = 0;
    while k < dim {
        let Some((pi, pj)) = min_abs_nonzero(&a, k) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(&mut a, k, pj);
        loop {
            if clear_column(&mut a, k) {
                continue;
            }
            if clear_row(&mut a, k) {
                continue;
            }
            // The pivot must divide everything it will later be compared
            // against; pulling a stray row up re-opens Euclidean reduction
            // with a strictly smaller eventual pivot.
            if let Some(i) = find_row_not_divisible(&a, k) {
                add_row(&mut a, k, i);
                continue;
            }
            break;
        }
        k += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..k).map(|i| a[i][i].abs()).collect();
    debug_assert!(invariant_factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    SmithForm {
        rank: invariant_factors.len(),
        invariant_factors,
        rows,
        cols,
    }
}

/// Gcd of all k x k minors, non-negative; zero exactly when every minor
/// vanishes. k = 0 yields 1 by convention, k beyond min(rows, cols) is an
/// error. Enumerates every row and column subset, so intended for small k
/// and small matrices.
pub fn determinant_divisor(m: &IntegerMatrix, k: usize) -> Result<BigInt> {
    let limit = m.rows().min(m.cols());
    if k == 0 {
        return Ok(BigInt::one());
    }
    if k > limit {
        return Err(Error::MinorOrder {
            k,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut g = BigInt::zero();
    for row_set in (0..m.rows()).combinations(k) {
        for col_set in (0..m.cols()).combinations(k) {
            let minor = m
                .submatrix(&row_set, &col_set)
                .determinant()
                .expect("minor is square");
            g = g.gcd(&minor);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Smallest-|entry| nonzero position in the trailing block a[k.., k..].
fn min_abs_nonzero(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// One pass of Euclidean row steps on column k. Returns true if a remainder
/// became the new, strictly smaller pivot and the pass must be rerun.
fn clear_column(a: &mut [Vec<BigInt>], k: usize) -> bool {
    for i in k + 1..a.len() {
        if a[i][k].is_zero() {
            continue;
        }
        let q = rounded_div(&a[i][k], &a[k][k]);
        if !q.is_zero() {
            sub_scaled_row(a, i, k, &q);
        }
        if !a[i][k].is_zero() {
            a.swap(i, k);
            return true;
        }
    }
    false
}

/// Euclidean column steps on row k; column operations leave the already
/// cleared part of column k untouched unless a swap pulls in a fresh column,
/// in which case the caller restarts.
fn clear_row(a: &mut [Vec<BigInt>], k: usize) -> bool {
    let cols = a[0].len();
    for j in k + 1..cols {
        if a[k][j].is_zero() {
            continue;
        }
        let q = rounded_div(&a[k][j], &a[k][k]);
        if !q.is_zero() {
            for row in a.iter_mut() {
                let t = &q * &row[k];
                row[j] -= t;
            }
        }
        if !a[k][j].is_zero() {
            swap_cols(a, j, k);
            return true;
        }
    }
    false
}

fn find_row_not_divisible(a: &[Vec<BigInt>], k: usize) -> Option<usize> {
    let pivot = &a[k][k];
    (k + 1..a.len()).find(|&i| a[i][k + 1..].iter().any(|x| !(x % pivot).is_zero()))
}

/// a[target] -= q * a[source]
fn sub_scaled_row(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (dst, src) = two_rows_mut(a, target, source);
    for (x, p) in dst.iter_mut().zip(src.iter()) {
        *x -= q * p;
    }
}

/// a[target] += a[source]
fn add_row(a: &mut [Vec<BigInt>], target: usize, source: usize) {
    let (dst, src) = two_rows_mut(a, target, source);
    for (x, p) in dst.iter_mut().zip(src.iter()) {
        *x += p;
    }
}

fn two_rows_mut(a: &mut [Vec<BigInt>], target: usize, source: usize) -> (&mut [BigInt], &[BigInt]) {
    assert_ne!(target, source);
    if target > source {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[source])
    } else {
        let (lo, hi) = a.split_at_mut(source);
        (&mut lo[target], &hi[0])
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 == j2 {
        return;
    }
    for row in a.iter_mut() {
        row.swap(j1, j2);
    }
}

/// Quotient rounded to nearest, so the remainder has at most half the
/// pivot's magnitude.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn factors(rows: &[&[i64]]) -> Vec<BigInt> {
        invariant_factors(&IntegerMatrix::from_i64_rows(rows)).invariant_factors
    }

    #[test]
    fn divisor_gcd_over_entries() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(determinant_divisor(&m, 1).unwrap(), big(1));
        assert_eq!(determinant_divisor(&m, 2).unwrap(), big(6));
        assert_eq!(determinant_divisor(&m, 0).unwrap(), big(1));
    }

    #[test]
    fn divisor_of_rank_deficient_order() {
        let w = IntegerMatrix::from_i64_rows(&[&[1, 1, 2], &[1, 2, 2], &[1, 1, 2]]);
        assert_eq!(determinant_divisor(&w, 3).unwrap(), big(0));
    }

    #[test]
    fn divisor_rejects_excessive_order() {
        let m = IntegerMatrix::from_i64_rows(&[&[1, 2]]);
        assert!(matches!(
            determinant_divisor(&m, 2),
            Err(Error::MinorOrder { k: 2, .. })
        ));
    }

    #[test]
    fn factors_of_diagonal_matrix() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![big(1), big(6)]);
    }

    #[test]
    fn factors_of_small_walk_matrix() {
        let snf = invariant_factors(&IntegerMatrix::from_i64_rows(&[
            &[1, 1, 2],
            &[1, 2, 2],
            &[1, 1, 2],
        ]));
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.invariant_factors, vec![big(1), big(1)]);
    }

    #[test]
    fn factors_of_zero_matrix_empty() {
        let snf = invariant_factors(&IntegerMatrix::zeros(2, 2));
        assert_eq!(snf.rank, 0);
        assert!(snf.invariant_factors.is_empty());
        assert_eq!(snf.to_matrix(), IntegerMatrix::zeros(2, 2));
    }

    #[test]
    fn factors_need_divisibility_fixup() {
        // diag(2, 3) forces the sweep: no single entry divides the rest.
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![big(1), big(6)]);
        assert_eq!(factors(&[&[4, 0], &[0, 6]]), vec![big(2), big(12)]);
    }

    #[test]
    fn factors_of_rectangular_matrix() {
        let snf = invariant_factors(&IntegerMatrix::from_i64_rows(&[&[0, 3, 0], &[0, 0, 5]]));
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.invariant_factors, vec![big(1), big(15)]);
        assert_eq!(snf.rows, 2);
        assert_eq!(snf.cols, 3);
    }

    #[test]
    fn factors_ignore_sign() {
        assert_eq!(factors(&[&[-3]]), vec![big(3)]);
        assert_eq!(factors(&[&[-2, 0], &[0, -5]]), vec![big(1), big(10)]);
    }

    #[test]
    fn reduction_matches_minor_route_on_fixture() {
        let m = IntegerMatrix::from_i64_rows(&[&[6, 4, 2], &[4, 8, 6], &[2, 6, 8]]);
        let snf = invariant_factors(&m);
        let mut divisors = vec![BigInt::one()];
        for k in 1..=3 {
            let d = determinant_divisor(&m, k).unwrap();
            if d.is_zero() {
                break;
            }
            divisors.push(d);
        }
        let from_minors: Vec<BigInt> = divisors.windows(2).map(|w| &w[1] / &w[0]).collect();
        assert_eq!(snf.invariant_factors, from_minors);
        assert!(snf.divisibility_chain_holds());
    }

    #[test]
    fn rounded_division_halves_remainders() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, 2, 5] {
                let q = rounded_div(&big(a), &big(b));
                let r = big(a) - &q * big(b);
                assert!(r.abs() * 2 <= big(b).abs());
            }
        }
    }
}
