//! Vertex partitions, equitability, and quotient matrices.
//!
//! A partition is equitable when every vertex of cell i has the same number
//! of neighbors in cell j, for all i, j; the quotient matrix collects those
//! counts, and the characteristic matrix C intertwines it with the adjacency
//! matrix: A C = C B.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;
use crate::walk::walk_matrix;

/// Ordered partition of the vertex set 1..=n into non-empty disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

/// Wire format: the cells as lists of 1-based vertices.
#[derive(Serialize, Deserialize)]
struct PartitionJson {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that the cells are non-empty, disjoint, and cover exactly
    /// 1..=n where n is the total number of listed vertices.
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPartition {
                reason: "no cells",
            });
        }
        if cells.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPartition {
                reason: "empty cell",
            });
        }
        let n: usize = cells.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in cells.iter().flatten() {
            if v == 0 || v > n {
                return Err(Error::InvalidPartition {
                    reason: "cells must cover 1..=n exactly",
                });
            }
            if seen[v] {
                return Err(Error::InvalidPartition {
                    reason: "vertex listed twice",
                });
            }
            seen[v] = true;
        }
        Ok(Self { cells, n })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// cell_index[v] for 1-based v; slot 0 is unused.
    fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0usize; self.n + 1];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = c;
            }
        }
        idx
    }
}

impl TryFrom<PartitionJson> for Partition {
    type Error = Error;

    fn try_from(json: PartitionJson) -> Result<Self> {
        Partition::new(json.cells)
    }
}

impl From<Partition> for PartitionJson {
    fn from(p: Partition) -> Self {
        PartitionJson { cells: p.cells }
    }
}

/// The fold partition pairing vertex k with n + 1 - k; odd n leaves the
/// middle vertex in a singleton cell. symmetric_partition(1) is {{1}}.
pub fn symmetric_partition(n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::ZeroOrder { what: "partition" });
    }
    let mut cells: Vec<Vec<usize>> = (1..=n / 2).map(|k| vec![k, n + 1 - k]).collect();
    if n % 2 == 1 {
        cells.push(vec![n.div_ceil(2)]);
    }
    Ok(Partition { cells, n })
}

/// True when every vertex of a cell has the same neighbor count into each
/// cell. Errors when the partition does not cover the graph's vertex set.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    if g.vertex_count() != p.vertex_count() {
        return Err(Error::PartitionMismatch {
            graph_n: g.vertex_count(),
            partition_n: p.vertex_count(),
        });
    }
    let idx = p.cell_index();
    for cell in p.cells() {
        let reference = neighbor_profile(g, &idx, p.cell_count(), cell[0]);
        for &v in &cell[1..] {
            if neighbor_profile(g, &idx, p.cell_count(), v) != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn neighbor_profile(g: &Graph, idx: &[usize], cells: usize, v: usize) -> Vec<usize> {
    let mut counts = vec![0usize; cells];
    for u in g.neighbors(v) {
        counts[idx[u]] += 1;
    }
    counts
}

/// n x r 0/1 matrix whose column j is the indicator of cell j.
pub fn characteristic_matrix(p: &Partition) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(p.vertex_count(), p.cell_count());
    for (j, cell) in p.cells().iter().enumerate() {
        for &v in cell {
            m.set(v - 1, j, BigInt::one());
        }
    }
    m
}

/// r x r quotient matrix: entry (i, j) counts neighbors in cell j of any
/// vertex of cell i. Defined only for equitable partitions.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<IntegerMatrix> {
    if !is_equitable(g, p)? {
        return Err(Error::NotEquitable);
    }
    let idx = p.cell_index();
    let r = p.cell_count();
    let mut m = IntegerMatrix::zeros(r, r);
    for (i, cell) in p.cells().iter().enumerate() {
        let profile = neighbor_profile(g, &idx, r, cell[0]);
        for (j, count) in profile.into_iter().enumerate() {
            m.set(i, j, BigInt::from(count));
        }
    }
    Ok(m)
}

/// Walk-matrix rank is bounded by the number of cells of any equitable
/// partition; reports whether that bound holds for this pair.
pub fn rank_bound_holds(g: &Graph, p: &Partition) -> Result<bool> {
    if !is_equitable(g, p)? {
        return Err(Error::NotEquitable);
    }
    let w = walk_matrix(&g.adjacency_matrix()).expect("adjacency matrix is square");
    Ok(w.rank() <= p.cell_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{divisor_matrix_b1, divisor_matrix_b2, path_graph};

    #[test]
    fn symmetric_partition_pairs_ends_inward() {
        let p = symmetric_partition(10).unwrap();
        assert_eq!(
            p.cells(),
            &[
                vec![1, 10],
                vec![2, 9],
                vec![3, 8],
                vec![4, 7],
                vec![5, 6]
            ]
        );
        assert_eq!(p.cell_count(), 5);
    }

    #[test]
    fn symmetric_partition_odd_has_singleton_middle() {
        let p = symmetric_partition(3).unwrap();
        assert_eq!(p.cells(), &[vec![1, 3], vec![2]]);
        let p1 = symmetric_partition(1).unwrap();
        assert_eq!(p1.cells(), &[vec![1]]);
    }

    #[test]
    fn symmetric_partition_rejects_zero() {
        assert!(matches!(
            symmetric_partition(0),
            Err(Error::ZeroOrder { .. })
        ));
    }

    #[test]
    fn partition_validation_rejects_overlap_and_gaps() {
        assert!(Partition::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Partition::new(vec![vec![1], vec![3]]).is_err());
        assert!(Partition::new(vec![vec![1], vec![]]).is_err());
        assert!(Partition::new(vec![]).is_err());
    }

    #[test]
    fn fold_partition_is_equitable_on_paths() {
        for n in 1..=12 {
            let g = path_graph(n).unwrap();
            let p = symmetric_partition(n).unwrap();
            assert!(is_equitable(&g, &p).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn unbalanced_split_is_not_equitable() {
        let g = path_graph(4).unwrap();
        let p = Partition::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(!is_equitable(&g, &p).unwrap());
    }

    #[test]
    fn equitable_check_rejects_foreign_partition() {
        let g = path_graph(4).unwrap();
        let p = symmetric_partition(3).unwrap();
        assert!(matches!(
            is_equitable(&g, &p),
            Err(Error::PartitionMismatch { .. })
        ));
    }

    #[test]
    fn characteristic_matrix_marks_cells() {
        let p = symmetric_partition(3).unwrap();
        let expected = IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 0]]);
        assert_eq!(characteristic_matrix(&p), expected);

        let p4 = symmetric_partition(4).unwrap();
        let expected4 = IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(characteristic_matrix(&p4), expected4);

        let p2 = symmetric_partition(2).unwrap();
        let expected2 = IntegerMatrix::from_i64_rows(&[&[1], &[1]]);
        assert_eq!(characteristic_matrix(&p2), expected2);
    }

    #[test]
    fn quotient_of_folded_path_matches_tridiagonal_families() {
        for n in 1..=12 {
            let g = path_graph(n).unwrap();
            let p = symmetric_partition(n).unwrap();
            let b = quotient_matrix(&g, &p).unwrap();
            let r = n.div_ceil(2);
            let expected = if n % 2 == 0 {
                divisor_matrix_b1(r).unwrap()
            } else {
                divisor_matrix_b2(r).unwrap()
            };
            assert_eq!(b, expected, "n = {n}");
        }
    }

    #[test]
    fn quotient_of_single_vertex() {
        let g = path_graph(1).unwrap();
        let p = symmetric_partition(1).unwrap();
        assert_eq!(
            quotient_matrix(&g, &p).unwrap(),
            IntegerMatrix::from_i64_rows(&[&[0]])
        );
    }

    #[test]
    fn quotient_rejects_inequitable_partition() {
        let g = path_graph(4).unwrap();
        let p = Partition::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(matches!(quotient_matrix(&g, &p), Err(Error::NotEquitable)));
    }

    #[test]
    fn intertwining_identity_for_folded_paths() {
        for n in 1..=12 {
            let g = path_graph(n).unwrap();
            let p = symmetric_partition(n).unwrap();
            let a = g.adjacency_matrix();
            let c = characteristic_matrix(&p);
            let b = quotient_matrix(&g, &p).unwrap();
            assert_eq!(a.matmul(&c).unwrap(), c.matmul(&b).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn rank_bound_for_fold_and_discrete_partitions() {
        let g = path_graph(7).unwrap();
        let fold = symmetric_partition(7).unwrap();
        assert!(rank_bound_holds(&g, &fold).unwrap());
        let discrete = Partition::new((1..=7).map(|v| vec![v]).collect()).unwrap();
        assert!(rank_bound_holds(&g, &discrete).unwrap());
    }

    #[test]
    fn partition_json_round_trip() {
        let p = symmetric_partition(5).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"cells":[[1,5],[2,4],[3]]}"#);
        let back: Partition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
