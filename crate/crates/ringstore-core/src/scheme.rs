//! The ring storage scheme: a full-rank generator matrix partitioned
//! contiguously across n nodes, plus the validator and bandwidth bounds.
//!
//! Node indices are 1-based and cyclic. Node i owns columns
//! [(i-1)*alpha, i*alpha) of the generator matrix; data flows from node i+1
//! to node i, with node 1 sending to node n to close the ring.

use thiserror::Error;

use crate::algebra::{FieldSpec, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("generator matrix does not have full row rank (rank {rank}, expected {rows})")]
    NotFullRank { rank: usize, rows: usize },
    #[error("generator has {cols} columns, expected n*alpha = {expected}")]
    PartitionMismatch { cols: usize, expected: usize },
    #[error("{n} nodes cannot hold {m} symbols at {alpha} per node")]
    TooFewNodes { n: usize, alpha: usize, m: usize },
    #[error("dimension mismatch: got {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("parameters must be positive")]
    BadParameters,
}

/// A distributed storage scheme over a unidirectional ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    n: usize,
    alpha: usize,
    m: usize,
    field: FieldSpec,
    g: Matrix,
}

impl Scheme {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Per-node capacity in symbols.
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Original data size in symbols.
    pub fn data_len(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    /// ceil(m / alpha): the minimum number of nodes that must transmit for
    /// any user to reconstruct.
    pub fn k(&self) -> usize {
        self.m.div_ceil(self.alpha)
    }

    /// m - (k-1)*alpha, in (0, alpha]: the residual symbol count the k-th
    /// node contributes.
    pub fn gamma(&self) -> usize {
        self.m - (self.k() - 1) * self.alpha
    }

    /// Global column indices owned by `node` (1-based).
    pub fn node_columns(&self, node: usize) -> Vec<usize> {
        debug_assert!((1..=self.n).contains(&node));
        ((node - 1) * self.alpha..node * self.alpha).collect()
    }

    /// The node generator matrix of `node` (1-based).
    pub fn node_matrix(&self, node: usize) -> Matrix {
        self.g.select_columns(&self.node_columns(node))
    }

    /// The node reached from `node` after `offset` steps against the
    /// transmission direction (i.e. upstream).
    pub fn node_at_offset(&self, node: usize, offset: usize) -> usize {
        (node - 1 + offset) % self.n + 1
    }

    /// Column indices of `count` adjacent nodes starting at `start`,
    /// following the ring cyclically.
    pub fn window_columns(&self, start: usize, count: usize) -> Vec<usize> {
        let mut cols = Vec::with_capacity(count * self.alpha);
        for offset in 0..count {
            cols.extend(self.node_columns(self.node_at_offset(start, offset)));
        }
        cols
    }
}

/// The symbols physically held by each node after encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredState {
    symbols: Vec<Vec<u64>>,
}

impl StoredState {
    /// Symbols of `node` (1-based).
    pub fn node(&self, node: usize) -> &[u64] {
        &self.symbols[node - 1]
    }

    pub fn nodes(&self) -> &[Vec<u64>] {
        &self.symbols
    }

    /// Installs the symbols of a substituted node.
    pub(crate) fn install_node(&mut self, node: usize, symbols: Vec<u64>) {
        debug_assert_eq!(symbols.len(), self.symbols[node - 1].len());
        self.symbols[node - 1] = symbols;
    }
}

/// Outcome of the two-condition scheme validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_ordss: bool,
    /// Start nodes whose k-1 adjacent nodes have dependent columns.
    pub failed_window_condition_i: Vec<usize>,
    /// Start nodes whose k adjacent nodes span fewer than m dimensions.
    pub failed_window_condition_ii: Vec<usize>,
}

/// Minimum symbol count a ring link must carry for the user attached at
/// node 1, counting links outward from the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutConstraint {
    pub from_node: usize,
    /// Receiving node; `None` is the user edge.
    pub to_node: Option<usize>,
    pub min_symbols: u64,
}

/// Builds a scheme from a generator matrix with the contiguous column
/// partition: node i owns columns [(i-1)*alpha, i*alpha).
pub fn make_scheme(g: Matrix, n: usize, alpha: usize) -> Result<Scheme, SchemeError> {
    if n == 0 || alpha == 0 {
        return Err(SchemeError::BadParameters);
    }
    if g.cols() != n * alpha {
        return Err(SchemeError::PartitionMismatch {
            cols: g.cols(),
            expected: n * alpha,
        });
    }
    let m = g.rows();
    if m > n * alpha {
        return Err(SchemeError::TooFewNodes { n, alpha, m });
    }
    let rank = g.rank();
    if rank != m {
        return Err(SchemeError::NotFullRank { rank, rows: m });
    }
    let field = g.field();
    Ok(Scheme {
        n,
        alpha,
        m,
        field,
        g,
    })
}

/// Encodes a data row vector: node i stores the coordinates of x * G^(i).
pub fn encode(s: &Scheme, x: &[u64]) -> Result<StoredState, SchemeError> {
    if x.len() != s.m {
        return Err(SchemeError::DimensionMismatch {
            got: x.len(),
            expected: s.m,
        });
    }
    let coded = s
        .g
        .row_vec_mul(x)
        .expect("x length was checked against generator rows");
    let symbols = coded.chunks(s.alpha).map(<[u64]>::to_vec).collect();
    Ok(StoredState { symbols })
}

/// Checks the two window conditions at every cyclic starting node:
/// (i) the columns of any k-1 adjacent nodes are linearly independent;
/// (ii) any k adjacent nodes contain m linearly independent columns.
/// Condition (i) is vacuous when k = 1.
pub fn validate_ordss(s: &Scheme) -> ValidationReport {
    let k = s.k();
    let mut failed_i = Vec::new();
    let mut failed_ii = Vec::new();
    for start in 1..=s.n {
        if k >= 2 {
            let cols = s.window_columns(start, k - 1);
            if s.g.select_columns(&cols).rank() != (k - 1) * s.alpha {
                failed_i.push(start);
            }
        }
        let cols = s.window_columns(start, k);
        if s.g.select_columns(&cols).rank() != s.m {
            failed_ii.push(start);
        }
    }
    ValidationReport {
        is_ordss: failed_i.is_empty() && failed_ii.is_empty(),
        failed_window_condition_i: failed_i,
        failed_window_condition_ii: failed_ii,
    }
}

/// The minimum reconstructing bandwidth k*m - (k-1)*k*alpha/2 for any user,
/// with k = ceil(m/alpha).
pub fn reconstruct_lower_bound(n: usize, alpha: usize, m: usize) -> Result<u64, SchemeError> {
    if n == 0 || alpha == 0 || m == 0 {
        return Err(SchemeError::BadParameters);
    }
    if m > n * alpha {
        return Err(SchemeError::TooFewNodes { n, alpha, m });
    }
    let k = m.div_ceil(alpha) as u64;
    let triangle = (k - 1) * k * alpha as u64;
    debug_assert_eq!(triangle % 2, 0, "(k-1)k is always even");
    Ok(k * m as u64 - triangle / 2)
}

/// The minimum repair bandwidth for any failed node: the data size m.
pub fn repair_lower_bound(s: &Scheme) -> u64 {
    s.m as u64
}

/// The k binding link constraints for the user attached at node 1: link i
/// (counting outward from the user) must carry at least m - (i-1)*alpha
/// symbols. Links past the k-th are unconstrained and omitted.
pub fn cut_constraints(n: usize, alpha: usize, m: usize) -> Result<Vec<CutConstraint>, SchemeError> {
    reconstruct_lower_bound(n, alpha, m)?;
    let k = m.div_ceil(alpha);
    Ok((1..=k)
        .map(|i| CutConstraint {
            from_node: i,
            to_node: (i > 1).then(|| i - 1),
            min_symbols: (m - (i - 1) * alpha) as u64,
        })
        .collect())
}
