//! Walk matrices and two independent walk-counting engines.
//!
//! Column j of W(M) is M^(j-1) applied to the all-ones vector, built by
//! repeated matrix-vector products; for an adjacency matrix, entry (i, j)
//! counts the walks of length j - 1 leaving vertex i. On a path those walks
//! are exactly the ±1 step sequences whose running position stays inside
//! [1, n], which gives a brute-force enumerator and a linear-time count
//! recurrence that share nothing with the matrix route.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::path_graph;
use crate::matrix::IntegerMatrix;

/// Default bound on j - 1 for the brute-force enumerator; 2^(j-1) sequences
/// are visited, so anything much larger belongs to the count recurrence.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Number of walks of length `column - 1` from `start` in the path on `n`
/// vertices; the (start, column) entry of the walk matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkCount {
    pub n: usize,
    pub start: usize,
    pub column: usize,
    pub value: BigInt,
}

/// Walk matrix of a square matrix: columns ones, M·ones, M²·ones, ...
pub fn walk_matrix(m: &IntegerMatrix) -> Result<IntegerMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut w = IntegerMatrix::zeros(n, n);
    let mut col = vec![BigInt::one(); n];
    for j in 0..n {
        for (i, x) in col.iter().enumerate() {
            w.set(i, j, x.clone());
        }
        if j + 1 < n {
            col = m.mul_vec(&col).expect("column length matches order");
        }
    }
    Ok(w)
}

/// Leading principal ceil(n/2) x ceil(n/2) block of the walk matrix of the
/// path on n vertices.
pub fn truncated_walk_matrix(n: usize) -> Result<IntegerMatrix> {
    if n == 0 {
        return Err(Error::ZeroOrder { what: "walk matrix" });
    }
    let w = walk_matrix(&path_graph(n)?.adjacency_matrix())?;
    Ok(w.leading_principal(n.div_ceil(2)))
}

/// In-order row differences: each row, from the bottom up, gets its
/// predecessor subtracted. Applied to a truncated path walk matrix this
/// exposes a unit upper-triangular shape.
pub fn row_difference_reduction(m: &IntegerMatrix) -> IntegerMatrix {
    // Bottom-up order means each subtrahend row is still untouched, so the
    // original entries can be read throughout.
    let mut out = m.clone();
    for i in (1..m.rows()).rev() {
        for j in 0..m.cols() {
            let d = m.get(i, j) - m.get(i - 1, j);
            out.set(i, j, d);
        }
    }
    out
}

/// Brute force over all ±1 step sequences of length j - 1, counting those
/// whose running position stays in [1, n]. Uses the default cap.
pub fn walk_count_enumerate(n: usize, i: usize, j: usize) -> Result<BigInt> {
    walk_count_enumerate_capped(n, i, j, DEFAULT_ENUMERATION_CAP)
}

/// Brute-force enumeration with an explicit cap on j - 1. Caps above 62 are
/// treated as 62 to keep the sequence index in a u64; anything past the cap
/// is refused rather than attempted.
pub fn walk_count_enumerate_capped(n: usize, i: usize, j: usize, cap: usize) -> Result<BigInt> {
    check_start_and_column(n, i, j)?;
    let steps = j - 1;
    let cap = cap.min(62);
    if steps > cap {
        return Err(Error::EnumerationCap { steps, cap });
    }
    let mut count: u64 = 0;
    for mask in 0..(1u64 << steps) {
        let mut pos = i as i64;
        let mut inside = true;
        for b in 0..steps {
            pos += if (mask >> b) & 1 == 1 { 1 } else { -1 };
            if pos < 1 || pos > n as i64 {
                inside = false;
                break;
            }
        }
        if inside {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Same count through the position-distribution recurrence: start with a
/// unit mass at vertex i, push it j - 1 times to both neighbors, sum what
/// remains. Never touches a matrix.
pub fn walk_count_dp(n: usize, i: usize, j: usize) -> Result<BigInt> {
    check_start_and_column(n, i, j)?;
    let mut mass = vec![BigInt::zero(); n];
    mass[i - 1] = BigInt::one();
    for _ in 0..j - 1 {
        mass = spread(&mass);
    }
    Ok(mass.into_iter().sum())
}

/// All counts for start vertices 1..=n and columns 1..=j_max, by running the
/// recurrence once per start vertex.
pub fn walk_count_table(n: usize, j_max: usize) -> Result<Vec<WalkCount>> {
    if n == 0 {
        return Err(Error::ZeroOrder { what: "walk count table" });
    }
    if j_max == 0 {
        return Err(Error::WalkColumn { j: 0 });
    }
    let mut table = Vec::with_capacity(n * j_max);
    for i in 1..=n {
        let mut mass = vec![BigInt::zero(); n];
        mass[i - 1] = BigInt::one();
        for j in 1..=j_max {
            table.push(WalkCount {
                n,
                start: i,
                column: j,
                value: mass.iter().sum(),
            });
            if j < j_max {
                mass = spread(&mass);
            }
        }
    }
    Ok(table)
}

fn spread(mass: &[BigInt]) -> Vec<BigInt> {
    let n = mass.len();
    (0..n)
        .map(|v| {
            let mut next = BigInt::zero();
            if v > 0 {
                next += &mass[v - 1];
            }
            if v + 1 < n {
                next += &mass[v + 1];
            }
            next
        })
        .collect()
}

fn check_start_and_column(n: usize, i: usize, j: usize) -> Result<()> {
    if i < 1 || i > n {
        return Err(Error::StartVertex { i, n });
    }
    if j < 1 {
        return Err(Error::WalkColumn { j });
    }
    Ok(())
}
