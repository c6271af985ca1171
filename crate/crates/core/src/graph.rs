//! Simple undirected graphs and the tridiagonal quotients of folded paths.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Simple undirected graph on vertices 1..=n. No loops, no multi-edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Wire format: vertex count plus 1-based edge pairs.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to (min, max) and collapsing
    /// duplicates. Loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder { what: "graph" });
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j || i < 1 || j < 1 || i > n || j > n {
                return Err(Error::BadEdge { n, i, j });
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Neighbors of a 1-based vertex, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// 0/1 adjacency matrix; entry (i, j) is 1 exactly when i ~ j.
    pub fn adjacency_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            m.set(i - 1, j - 1, BigInt::one());
            m.set(j - 1, i - 1, BigInt::one());
        }
        m
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        Graph::new(json.n, json.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.into_iter().collect(),
        }
    }
}

/// Path on n vertices, edges between consecutive labels. n = 0 is refused.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroOrder { what: "graph" });
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// r x r quotient of the even path P_{2r} under the fold pairing vertex k
/// with vertex 2r + 1 - k: zero diagonal tridiagonal with unit off-diagonals,
/// except that the last diagonal entry is 1 (the two middle path vertices
/// are adjacent to each other). r = 1 gives [[1]].
pub fn divisor_matrix_b1(r: usize) -> Result<IntegerMatrix> {
    let mut m = tridiagonal_units(r, "quotient matrix")?;
    m.set(r - 1, r - 1, BigInt::one());
    Ok(m)
}

/// r x r quotient of the odd path P_{2r-1} under the same fold, with the
/// middle vertex alone in its cell: zero diagonal tridiagonal with unit
/// off-diagonals, except that the entry below the last diagonal is 2 (the
/// middle vertex sees both members of the preceding cell). r = 1 gives
/// [[0]].
pub fn divisor_matrix_b2(r: usize) -> Result<IntegerMatrix> {
    let mut m = tridiagonal_units(r, "quotient matrix")?;
    if r >= 2 {
        m.set(r - 1, r - 2, BigInt::from(2));
    }
    Ok(m)
}

fn tridiagonal_units(r: usize, what: &'static str) -> Result<IntegerMatrix> {
    if r == 0 {
        return Err(Error::ZeroOrder { what });
    }
    let mut m = IntegerMatrix::zeros(r, r);
    for i in 0..r - 1 {
        m.set(i, i + 1, BigInt::one());
        m.set(i + 1, i, BigInt::one());
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_has_consecutive_edges() {
        let g = path_graph(4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn path_graph_single_vertex_has_no_edges() {
        let g = path_graph(1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn path_graph_rejects_zero() {
        assert!(matches!(path_graph(0), Err(Error::ZeroOrder { .. })));
    }

    #[test]
    fn graph_rejects_loops_and_range_violations() {
        assert!(matches!(
            Graph::new(3, [(1, 1)]),
            Err(Error::BadEdge { i: 1, j: 1, .. })
        ));
        assert!(matches!(Graph::new(3, [(0, 2)]), Err(Error::BadEdge { .. })));
        assert!(matches!(Graph::new(3, [(2, 4)]), Err(Error::BadEdge { .. })));
    }

    #[test]
    fn graph_normalizes_duplicate_edges() {
        let g = Graph::new(3, [(2, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));
    }

    #[test]
    fn adjacency_of_small_path() {
        let a = path_graph(3).unwrap().adjacency_matrix();
        let expected = IntegerMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(a, expected);
    }

    #[test]
    fn adjacency_row_sums_are_degrees() {
        let g = path_graph(6).unwrap();
        let a = g.adjacency_matrix();
        for v in 1..=6 {
            let sum: BigInt = a.row(v - 1).iter().sum();
            assert_eq!(sum, BigInt::from(g.degree(v)));
        }
    }

    #[test]
    fn even_quotient_shapes() {
        assert_eq!(
            divisor_matrix_b1(2).unwrap(),
            IntegerMatrix::from_i64_rows(&[&[0, 1], &[1, 1]])
        );
        assert_eq!(
            divisor_matrix_b1(1).unwrap(),
            IntegerMatrix::from_i64_rows(&[&[1]])
        );
        let b = divisor_matrix_b1(5).unwrap();
        assert_eq!(b.row(4), IntegerMatrix::from_i64_rows(&[&[0, 0, 0, 1, 1]]).row(0));
    }

    #[test]
    fn odd_quotient_shapes() {
        assert_eq!(
            divisor_matrix_b2(2).unwrap(),
            IntegerMatrix::from_i64_rows(&[&[0, 1], &[2, 0]])
        );
        assert_eq!(
            divisor_matrix_b2(1).unwrap(),
            IntegerMatrix::from_i64_rows(&[&[0]])
        );
        let b = divisor_matrix_b2(4).unwrap();
        assert_eq!(b.row(3), IntegerMatrix::from_i64_rows(&[&[0, 0, 2, 0]]).row(0));
    }

    #[test]
    fn quotients_reject_zero_order() {
        assert!(matches!(divisor_matrix_b1(0), Err(Error::ZeroOrder { .. })));
        assert!(matches!(divisor_matrix_b2(0), Err(Error::ZeroOrder { .. })));
    }

    #[test]
    fn graph_json_round_trip() {
        let g = path_graph(4).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":4,"edges":[[1,2],[2,3],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn graph_json_rejects_bad_edge() {
        let text = r#"{"n":2,"edges":[[1,3]]}"#;
        assert!(serde_json::from_str::<Graph>(text).is_err());
    }
}
