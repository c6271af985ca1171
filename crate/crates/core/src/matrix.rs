//! Dense matrices over the integers.
//!
//! One carrier type serves adjacency matrices, walk matrices, quotient
//! matrices, and their truncations. Entries are `BigInt` because walk-matrix
//! columns grow like 2^(j-1) and overflow every fixed width long before the
//! sizes this crate is asked to handle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Wire format. Entries travel as decimal strings so arbitrary precision
/// survives JSON readers that parse numbers into doubles.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<Vec<String>>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        let expected = rows.checked_mul(cols).unwrap_or(0);
        if rows == 0 || cols == 0 || entries.len() != expected {
            return Err(Error::Shape {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 || rows.iter().any(|r| r.len() != width) {
            let entries = rows.iter().map(Vec::len).sum();
            return Err(Error::Shape {
                rows: height,
                cols: width,
                entries,
            });
        }
        Ok(Self {
            rows: height,
            cols: width,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for literals in tests and small fixtures.
    /// Panics on an empty or ragged layout.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(rows).expect("literal rows must be rectangular and non-empty")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based (i, j).
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        assert!(i < self.rows, "row index out of range");
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.get(k, j);
                    out.entries[i * rhs.cols + j] += t;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect())
    }

    /// Exact determinant by fraction-free elimination. Every intermediate is
    /// a minor of the input, so nothing leaves the integers; the sign of the
    /// determinant is preserved.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_nested();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = exact_div(t, &prev);
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Rank over the rationals, by the same fraction-free elimination as the
    /// determinant but with column skipping.
    pub fn rank(&self) -> usize {
        let mut a = self.to_nested();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = exact_div(t, &prev);
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Block diagonal of `self` with a k x k zero block. Requires a square
    /// receiver; k = 0 returns the matrix unchanged.
    pub fn direct_sum_zero(&self, k: usize) -> Self {
        assert!(self.is_square(), "direct sum with a zero block needs a square matrix");
        if k == 0 {
            return self.clone();
        }
        let n = self.rows + k;
        let mut out = Self::zeros(n, n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Submatrix picked by 0-based row and column index lists, in order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let entries = row_idx
            .iter()
            .flat_map(|&i| col_idx.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Self::new(row_idx.len(), col_idx.len(), entries)
            .expect("index lists must be non-empty and in range")
    }

    /// Leading k x k principal block.
    pub fn leading_principal(&self, k: usize) -> Self {
        let idx: Vec<usize> = (0..k).collect();
        self.submatrix(&idx, &idx)
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_one() {
                return false;
            }
            for j in 0..i {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn to_nested(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Division known to be exact by the Sylvester identity behind fraction-free
/// elimination.
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    debug_assert!(!den.is_zero() && (&num % den).is_zero(), "inexact division");
    num / den
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let texts: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(BigInt::to_string).collect())
            .collect();
        let mut widths = vec![0usize; self.cols];
        for row in &texts {
            for (j, t) in row.iter().enumerate() {
                widths[j] = widths[j].max(t.len());
            }
        }
        for (i, row) in texts.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(t, w)| format!("{t:>w$}"))
                .collect();
            write!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<MatrixJson> for IntegerMatrix {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        let expected = json.rows.checked_mul(json.cols).unwrap_or(0);
        if json.rows == 0
            || json.cols == 0
            || json.data.len() != json.rows
            || json.data.iter().any(|r| r.len() != json.cols)
        {
            return Err(Error::Shape {
                rows: json.rows,
                cols: json.cols,
                entries: json.data.iter().map(Vec::len).sum(),
            });
        }
        let mut entries = Vec::with_capacity(expected);
        for (i, row) in json.data.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                let value = parse_decimal(text).ok_or_else(|| Error::ParseEntry {
                    row: i + 1,
                    col: j + 1,
                    text: text.clone(),
                })?;
                entries.push(value);
            }
        }
        Self::new(json.rows, json.cols, entries)
    }
}

/// Strict decimal integer: optional sign followed by digits only.
fn parse_decimal(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl From<IntegerMatrix> for MatrixJson {
    fn from(m: IntegerMatrix) -> Self {
        let data = (0..m.rows)
            .map(|i| m.row(i).iter().map(BigInt::to_string).collect())
            .collect();
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            data,
        }
    }
}
