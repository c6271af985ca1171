//! Floating-point verification of the spectral side: closed-form eigenpairs
//! of the transposed quotient matrices, the all-ones projection products,
//! the cosine Vandermonde determinant, and the eigenvector formula for the
//! determinant and rank of a walk matrix.
//!
//! Everything here is f64 with pinned tolerances; the exact integer modules
//! never depend on it, so each side can audit the other.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{divisor_matrix_b1, divisor_matrix_b2};
use crate::matrix::IntegerMatrix;
use crate::walk::walk_matrix;

/// Residual bound for the closed-form eigenpairs, orders up to 50.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;
/// Slack allowed between a projection product and ±1, orders up to 30.
pub const PRODUCT_TOLERANCE: f64 = 1e-6;
/// Relative slack between the eigenvector determinant formula and the exact
/// integer determinant, orders up to 30.
pub const DET_FORMULA_RELATIVE_TOLERANCE: f64 = 1e-6;
/// A projection counts as nonzero when it exceeds this times the vector's
/// sup norm.
pub const PROJECTION_THRESHOLD: f64 = 1e-8;
/// Minimal eigenvalue separation required before the rank count is trusted.
pub const EIGENVALUE_GAP_MINIMUM: f64 = 1e-6;

/// Pivot floor, relative to the matrix scale, below which the eigenvector
/// matrix is declared numerically singular.
const SINGULAR_PIVOT_THRESHOLD: f64 = 1e-12;

/// Real eigenvalue with one eigenvector.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub eigenvalue: f64,
    pub eigenvector: Vec<f64>,
}

/// The two tridiagonal quotient families of the folded path: `B1` from even
/// paths (unit corner), `B2` from odd paths (doubled subdiagonal corner).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientFamily {
    B1,
    B2,
}

impl QuotientFamily {
    pub fn matrix(self, r: usize) -> Result<IntegerMatrix> {
        match self {
            QuotientFamily::B1 => divisor_matrix_b1(r),
            QuotientFamily::B2 => divisor_matrix_b2(r),
        }
    }

    pub fn eigenpair(self, r: usize, k: usize) -> Result<EigenPair> {
        match self {
            QuotientFamily::B1 => eigenpair_b1(r, k),
            QuotientFamily::B2 => eigenpair_b2(r, k),
        }
    }

    pub fn eigenpairs(self, r: usize) -> Result<Vec<EigenPair>> {
        (1..=r).map(|k| self.eigenpair(r, k)).collect()
    }
}

/// k-th eigenpair of the transpose of the even-path quotient: eigenvalue
/// -2 cos(2kπ/(2r+1)); the eigenvector entry s is an alternating-sign
/// cosine sum 1 + Σ 2 cos(i·α) over i up to r - s, so the last entry is 1.
pub fn eigenpair_b1(r: usize, k: usize) -> Result<EigenPair> {
    if k < 1 || k > r {
        return Err(Error::EigenIndex { k, r });
    }
    let alpha = 2.0 * k as f64 * PI / (2 * r + 1) as f64;
    let eigenvector = (1..=r)
        .map(|s| {
            let terms = r - s;
            let sum = 1.0 + (1..=terms).map(|i| 2.0 * (i as f64 * alpha).cos()).sum::<f64>();
            if terms % 2 == 0 {
                sum
            } else {
                -sum
            }
        })
        .collect();
    Ok(EigenPair {
        eigenvalue: -2.0 * alpha.cos(),
        eigenvector,
    })
}

/// k-th eigenpair of the transpose of the odd-path quotient: eigenvalue
/// 2 cos((2k-1)π/(2r)); the eigenvector reads 2 cos of decreasing multiples
/// of β down to a final entry of 1.
pub fn eigenpair_b2(r: usize, k: usize) -> Result<EigenPair> {
    if k < 1 || k > r {
        return Err(Error::EigenIndex { k, r });
    }
    let beta = (2 * k - 1) as f64 * PI / (2 * r) as f64;
    let eigenvector = (1..=r)
        .map(|s| {
            if s == r {
                1.0
            } else {
                2.0 * ((r - s) as f64 * beta).cos()
            }
        })
        .collect();
    Ok(EigenPair {
        eigenvalue: 2.0 * beta.cos(),
        eigenvector,
    })
}

/// Sup-norm residual of the transposed eigen equation, ‖Bᵀv - λv‖∞.
pub fn eigen_residual(b: &IntegerMatrix, pair: &EigenPair) -> f64 {
    assert!(b.is_square(), "quotient matrix must be square");
    let r = b.rows();
    assert_eq!(pair.eigenvector.len(), r, "eigenvector length must match");
    (0..r)
        .map(|s| {
            let image: f64 = (0..r)
                .map(|t| entry_f64(b, t, s) * pair.eigenvector[t])
                .sum();
            (image - pair.eigenvalue * pair.eigenvector[s]).abs()
        })
        .fold(0.0, f64::max)
}

/// Product over k of the entry sums of the family's eigenvectors; the
/// closed forms make this (-1)^floor(r/2) for both families.
pub fn allones_projection_product(r: usize, family: QuotientFamily) -> f64 {
    assert!(r >= 1, "order must be positive");
    family
        .eigenpairs(r)
        .expect("indices 1..=r are in range")
        .iter()
        .map(|p| p.eigenvector.iter().sum::<f64>())
        .product()
}

/// Sign the projection products must attain at order r.
pub fn expected_projection_sign(r: usize) -> i32 {
    if (r / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant of the q x q matrix whose first row is all ones and whose
/// row s holds 2 cos((s-1)·θ_t); equals the product of pairwise differences
/// of the 2 cos θ values.
pub fn cos_vandermonde_det(thetas: &[f64]) -> f64 {
    assert!(!thetas.is_empty(), "need at least one angle");
    let q = thetas.len();
    let m: Vec<Vec<f64>> = (0..q)
        .map(|s| {
            thetas
                .iter()
                .map(|&t| if s == 0 { 1.0 } else { 2.0 * (s as f64 * t).cos() })
                .collect()
        })
        .collect();
    lu_determinant(m).0
}

/// Determinant and essentially-nonzero projection count for a walk matrix,
/// from an eigenbasis of the transpose: det W(M) is the product of pairwise
/// eigenvalue differences times the product of entry sums, divided by the
/// eigenvector determinant; the projection count equals rank W(M) when the
/// eigenvalues are simple.
pub fn walk_det_formula(m: &IntegerMatrix, pairs: &[EigenPair]) -> Result<(f64, usize)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let q = m.rows();
    if pairs.len() != q || pairs.iter().any(|p| p.eigenvector.len() != q) {
        return Err(Error::EigenbasisSize {
            order: q,
            pairs: pairs.len(),
        });
    }
    let mut gaps = 1.0;
    for j in 1..q {
        for k in 0..j {
            gaps *= pairs[j].eigenvalue - pairs[k].eigenvalue;
        }
    }
    let projections: Vec<f64> = pairs
        .iter()
        .map(|p| p.eigenvector.iter().sum::<f64>())
        .collect();
    let basis: Vec<Vec<f64>> = (0..q)
        .map(|s| (0..q).map(|j| pairs[j].eigenvector[s]).collect())
        .collect();
    let (basis_det, min_rel_pivot) = lu_determinant(basis);
    if min_rel_pivot < SINGULAR_PIVOT_THRESHOLD {
        return Err(Error::SingularEigenbasis);
    }
    let det = gaps * projections.iter().product::<f64>() / basis_det;
    let essential = pairs
        .iter()
        .zip(&projections)
        .filter(|(p, proj)| {
            let sup = p.eigenvector.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            proj.abs() > PROJECTION_THRESHOLD * sup
        })
        .count();
    Ok((det, essential))
}

/// Smallest pairwise eigenvalue separation; infinite for fewer than two.
pub fn min_eigenvalue_gap(pairs: &[EigenPair]) -> f64 {
    let mut gap = f64::INFINITY;
    for j in 1..pairs.len() {
        for k in 0..j {
            gap = gap.min((pairs[j].eigenvalue - pairs[k].eigenvalue).abs());
        }
    }
    gap
}

/// One line of the spectral verification report.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralRecord {
    pub r: usize,
    pub family: QuotientFamily,
    pub max_residual: f64,
    pub product: f64,
    pub expected_sign: i32,
    pub det_formula: f64,
    pub det_exact: String,
}

impl SpectralRecord {
    /// All three pinned tolerances at once: residuals, product sign, and
    /// formula-versus-exact determinant.
    pub fn within_tolerances(&self) -> bool {
        let exact: f64 = self
            .det_exact
            .parse::<BigInt>()
            .ok()
            .and_then(|d| d.to_f64())
            .unwrap_or(f64::NAN);
        self.max_residual < RESIDUAL_TOLERANCE
            && (self.product - self.expected_sign as f64).abs() < PRODUCT_TOLERANCE
            && (self.det_formula - exact).abs()
                <= DET_FORMULA_RELATIVE_TOLERANCE * exact.abs().max(1.0)
    }
}

/// Assembles the verification record for one family at order r.
pub fn spectral_record(r: usize, family: QuotientFamily) -> Result<SpectralRecord> {
    let b = family.matrix(r)?;
    let pairs = family.eigenpairs(r)?;
    let max_residual = pairs
        .iter()
        .map(|p| eigen_residual(&b, p))
        .fold(0.0, f64::max);
    let product = pairs
        .iter()
        .map(|p| p.eigenvector.iter().sum::<f64>())
        .product();
    let (det_formula, _) = walk_det_formula(&b, &pairs)?;
    let det_exact = walk_matrix(&b)?.determinant()?.to_string();
    Ok(SpectralRecord {
        r,
        family,
        max_residual,
        product,
        expected_sign: expected_projection_sign(r),
        det_formula,
        det_exact,
    })
}

/// Partial-pivoting LU determinant. Also reports the smallest pivot
/// magnitude relative to the matrix scale, so callers can tell an exact
/// zero from numerical collapse.
fn lu_determinant(mut a: Vec<Vec<f64>>) -> (f64, f64) {
    let q = a.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    let mut det = 1.0;
    let mut min_rel = f64::INFINITY;
    for k in 0..q {
        let (pivot_row, pivot_abs) = (k..q)
            .map(|i| (i, a[i][k].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("rows remain");
        min_rel = min_rel.min(pivot_abs / scale);
        if pivot_abs == 0.0 {
            return (0.0, 0.0);
        }
        if pivot_row != k {
            a.swap(k, pivot_row);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..q {
            let factor = a[i][k] / a[k][k];
            if factor != 0.0 {
                for j in k + 1..q {
                    let t = factor * a[k][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    (det, min_rel)
}

fn entry_f64(m: &IntegerMatrix, i: usize, j: usize) -> f64 {
    m.get(i, j).to_f64().expect("quotient entries are tiny")
}
