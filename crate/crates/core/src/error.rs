use std::fmt;

/// Errors shared by the matrix, graph, partition, walk, and spectral modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Construction with zero rows or columns, or an entry count that does
    /// not match the declared shape.
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    /// An entry string failed to parse as a decimal integer.
    ParseEntry { row: usize, col: usize, text: String },
    /// Operand dimensions are incompatible for the requested operation.
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Minor order outside 0..=min(rows, cols).
    MinorOrder { k: usize, rows: usize, cols: usize },
    /// An object that needs at least one vertex, cell, or row was requested
    /// with size zero.
    ZeroOrder { what: &'static str },
    /// Edge endpoint outside 1..=n, or a loop.
    BadEdge { n: usize, i: usize, j: usize },
    /// Cells are empty, overlap, or do not cover 1..=n exactly.
    InvalidPartition { reason: &'static str },
    /// The partition covers a different vertex set than the graph.
    PartitionMismatch { graph_n: usize, partition_n: usize },
    /// A quotient was requested for a partition that is not equitable.
    NotEquitable,
    /// Walk start vertex outside 1..=n.
    StartVertex { i: usize, n: usize },
    /// Walk-matrix column index must be at least 1.
    WalkColumn { j: usize },
    /// Brute-force enumeration refused: j - 1 exceeds the cap.
    EnumerationCap { steps: usize, cap: usize },
    /// Eigenpair index outside 1..=r.
    EigenIndex { k: usize, r: usize },
    /// Number of eigenpairs, or an eigenvector length, does not match the
    /// matrix order.
    EigenbasisSize { order: usize, pairs: usize },
    /// The eigenvector matrix is numerically singular.
    SingularEigenbasis,
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape {
                rows,
                cols,
                entries,
            } => write!(
                f,
                "invalid matrix shape: {rows}x{cols} with {entries} entries"
            ),
            Error::ParseEntry { row, col, text } => write!(
                f,
                "entry at row {row}, column {col} is not a decimal integer: {text:?}"
            ),
            Error::DimensionMismatch { op, left, right } => write!(
                f,
                "{op}: dimension mismatch {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            Error::MinorOrder { k, rows, cols } => write!(
                f,
                "minor order {k} out of range for a {rows}x{cols} matrix"
            ),
            Error::ZeroOrder { what } => write!(f, "{what} must have positive size"),
            Error::BadEdge { n, i, j } => {
                write!(f, "edge ({i}, {j}) invalid for vertices 1..={n}")
            }
            Error::InvalidPartition { reason } => write!(f, "invalid partition: {reason}"),
            Error::PartitionMismatch {
                graph_n,
                partition_n,
            } => write!(
                f,
                "partition covers 1..={partition_n} but the graph has {graph_n} vertices"
            ),
            Error::NotEquitable => write!(f, "partition is not equitable"),
            Error::StartVertex { i, n } => {
                write!(f, "start vertex {i} out of range 1..={n}")
            }
            Error::WalkColumn { j } => write!(f, "walk column index {j} must be at least 1"),
            Error::EnumerationCap { steps, cap } => write!(
                f,
                "enumeration over {steps} steps refused, cap is {cap}"
            ),
            Error::EigenIndex { k, r } => write!(f, "eigenpair index {k} out of range 1..={r}"),
            Error::EigenbasisSize { order, pairs } => write!(
                f,
                "eigenbasis size {pairs} does not match matrix order {order}"
            ),
            Error::SingularEigenbasis => write!(f, "eigenvector matrix is numerically singular"),
        }
    }
}

impl std::error::Error for Error {}
