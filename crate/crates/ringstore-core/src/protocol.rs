//! Planning and execution of optimal reconstruction and exact repair.
//!
//! Plans are value objects: each hop carries coefficient vectors over the
//! original data coordinates, so a plan can be serialized, inspected, and
//! replayed. Execution simulates the ring honestly: a node can only emit a
//! symbol it can derive from its own stored symbols and what it has
//! received, and the executor fails if a plan ever asks for more.

use std::fmt;

use thiserror::Error;

use crate::algebra::{row_vec_solve, AlgebraError, FieldSpec, Matrix};
use crate::scheme::{reconstruct_lower_bound, validate_ordss, CutConstraint, Scheme, StoredState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtocolError {
    #[error("scheme is not an ORDSS; run validation for the failing windows")]
    NotOrdss,
    #[error("node index {node} out of range 1..={n}")]
    BadNodeIndex { node: usize, n: usize },
    #[error("ring of {n} nodes is too short to repair with k = {k} (needs at least k+1)")]
    RingTooShort { n: usize, k: usize },
    #[error("plan does not match scheme: {0}")]
    PlanSchemeMismatch(&'static str),
    #[error("plan payload is not derivable from the sender's knowledge")]
    SingularBasis,
    #[error("final repair system is singular")]
    SingularFinalSystem,
    #[error("cut constraints do not match the plan context: {0}")]
    ContextMismatch(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A party on the ring: a storage node, a user attached to a node, or the
/// substituted node replacing a failed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    Node(usize),
    User(usize),
    Substituted(usize),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Node(i) => write!(f, "N{i}"),
            Endpoint::User(i) => write!(f, "U{i}"),
            Endpoint::Substituted(i) => write!(f, "N{i}'"),
        }
    }
}

/// One directed transfer: every payload entry is a coefficient vector of
/// length m over the original data coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkTransfer {
    pub from: Endpoint,
    pub to: Endpoint,
    pub payload: Vec<Vec<u64>>,
}

impl LinkTransfer {
    pub fn size(&self) -> u64 {
        self.payload.len() as u64
    }
}

/// Shared plan context used to reject replays against the wrong scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PlanContext {
    n: usize,
    alpha: usize,
    m: usize,
    p: u64,
}

impl PlanContext {
    fn of(s: &Scheme) -> Self {
        PlanContext {
            n: s.node_count(),
            alpha: s.alpha(),
            m: s.data_len(),
            p: s.field().prime(),
        }
    }

    fn check(&self, s: &Scheme) -> Result<(), ProtocolError> {
        if *self != PlanContext::of(s) {
            return Err(ProtocolError::PlanSchemeMismatch(
                "plan parameters differ from scheme parameters",
            ));
        }
        Ok(())
    }
}

/// The transfer schedule that lets one user recover the original data at
/// the minimum bandwidth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionPlan {
    user_node: usize,
    context: PlanContext,
    hops: Vec<LinkTransfer>,
    basis_columns: Vec<usize>,
    bandwidth: u64,
}

impl ReconstructionPlan {
    pub fn user_node(&self) -> usize {
        self.user_node
    }

    pub fn hops(&self) -> &[LinkTransfer] {
        &self.hops
    }

    /// Global generator columns chosen as the decoding basis.
    pub fn basis_columns(&self) -> &[usize] {
        &self.basis_columns
    }

    pub fn bandwidth(&self) -> u64 {
        self.bandwidth
    }
}

/// The transfer schedule that rebuilds a failed node's symbols exactly at
/// bandwidth m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairPlan {
    failed_node: usize,
    context: PlanContext,
    hops: Vec<LinkTransfer>,
    basis_columns: Vec<usize>,
    extra_columns: Vec<usize>,
    /// Rows express each extra column over the basis columns.
    expression_coeffs: Matrix,
    /// Square system mapping the values the last hop delivers to the values
    /// of the basis columns they combine.
    final_system: Matrix,
    /// Rows express each of the failed node's columns over the columns the
    /// final system resolves.
    failed_column_coeffs: Matrix,
    bandwidth: u64,
}

impl RepairPlan {
    pub fn failed_node(&self) -> usize {
        self.failed_node
    }

    pub fn hops(&self) -> &[LinkTransfer] {
        &self.hops
    }

    pub fn basis_columns(&self) -> &[usize] {
        &self.basis_columns
    }

    /// Global generator columns whose expressions drive the elimination,
    /// in payload row order.
    pub fn extra_columns(&self) -> &[usize] {
        &self.extra_columns
    }

    pub fn expression_coeffs(&self) -> &Matrix {
        &self.expression_coeffs
    }

    pub fn final_system(&self) -> &Matrix {
        &self.final_system
    }

    pub fn bandwidth(&self) -> u64 {
        self.bandwidth
    }
}

/// What a node can currently derive: its own symbols plus everything it has
/// received, kept as a reduced row space with the value of each row carried
/// along.
struct Knowledge {
    field: FieldSpec,
    width: usize,
    rows: Vec<KnowledgeRow>,
}

struct KnowledgeRow {
    pivot: usize,
    vector: Vec<u64>,
    value: u64,
}

impl Knowledge {
    fn new(field: FieldSpec, width: usize) -> Self {
        Knowledge {
            field,
            width,
            rows: Vec::new(),
        }
    }

    /// Adds a (coefficient vector, value) pair. Returns false when the
    /// vector was already in the span (in which case it is dropped).
    fn absorb(&mut self, mut vector: Vec<u64>, mut value: u64) -> bool {
        debug_assert_eq!(vector.len(), self.width);
        let f = self.field;
        for row in &self.rows {
            let factor = vector[row.pivot];
            if factor != 0 {
                for (v, r) in vector.iter_mut().zip(&row.vector) {
                    *v = f.sub(*v, f.mul(factor, *r));
                }
                value = f.sub(value, f.mul(factor, row.value));
            }
        }
        let Some(pivot) = vector.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = f.inv(vector[pivot]).expect("pivot is nonzero");
        for v in vector.iter_mut() {
            *v = f.mul(*v, inv);
        }
        value = f.mul(value, inv);
        for row in &mut self.rows {
            let factor = row.vector[pivot];
            if factor != 0 {
                for (r, v) in row.vector.iter_mut().zip(&vector) {
                    *r = f.sub(*r, f.mul(factor, *v));
                }
                row.value = f.sub(row.value, f.mul(factor, value));
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(
            at,
            KnowledgeRow {
                pivot,
                vector,
                value,
            },
        );
        true
    }

    /// The value of the symbol with coefficient vector `w`, if `w` lies in
    /// the span of what this node knows.
    fn express(&self, w: &[u64]) -> Option<u64> {
        debug_assert_eq!(w.len(), self.width);
        let f = self.field;
        let mut residual = w.to_vec();
        let mut acc = 0u64;
        for row in &self.rows {
            let factor = residual[row.pivot];
            if factor != 0 {
                for (v, r) in residual.iter_mut().zip(&row.vector) {
                    *v = f.sub(*v, f.mul(factor, *r));
                }
                acc = f.add(acc, f.mul(factor, row.value));
            }
        }
        residual.iter().all(|&v| v == 0).then_some(acc)
    }
}

/// Greedily extends the span of `base` columns with columns from
/// `candidates` (ascending), accepting each candidate iff it increases the
/// rank, until `count` are accepted.
fn greedy_extend(
    s: &Scheme,
    base: &[usize],
    candidates: &[usize],
    count: usize,
) -> Result<Vec<usize>, ProtocolError> {
    let mut space = Knowledge::new(s.field(), s.data_len());
    for &c in base {
        space.absorb(s.generator().column(c), 0);
    }
    let mut chosen = Vec::with_capacity(count);
    for &c in candidates {
        if chosen.len() == count {
            break;
        }
        if space.absorb(s.generator().column(c), 0) {
            chosen.push(c);
        }
    }
    if chosen.len() != count {
        // cannot happen once the scheme validated; treat as corruption
        return Err(ProtocolError::SingularBasis);
    }
    Ok(chosen)
}

fn unit_vector(len: usize, at: usize) -> Vec<u64> {
    let mut v = vec![0u64; len];
    v[at] = 1;
    v
}

fn check_node_index(s: &Scheme, node: usize) -> Result<(), ProtocolError> {
    if !(1..=s.node_count()).contains(&node) {
        return Err(ProtocolError::BadNodeIndex {
            node,
            n: s.node_count(),
        });
    }
    Ok(())
}

/// Plans the minimum-bandwidth reconstruction for the user attached at
/// `user_node`.
///
/// Relative to that node, the decoding basis is every column of the first
/// k-1 nodes plus gamma greedily chosen columns of the k-th; each hop
/// forwards the carried vectors plus the sender's own columns, and the last
/// hop delivers the m decoded coordinates as unit vectors.
pub fn plan_reconstruction(
    s: &Scheme,
    user_node: usize,
) -> Result<ReconstructionPlan, ProtocolError> {
    check_node_index(s, user_node)?;
    if !validate_ordss(s).is_ordss {
        return Err(ProtocolError::NotOrdss);
    }
    let (m, k, gamma) = (s.data_len(), s.k(), s.gamma());
    let mut basis_columns = s.window_columns(user_node, k - 1);
    let far_node = s.node_at_offset(user_node, k - 1);
    let chosen = greedy_extend(s, &basis_columns, &s.node_columns(far_node), gamma)?;
    basis_columns.extend(&chosen);

    let mut hops = Vec::with_capacity(k);
    if k >= 2 {
        let mut carried: Vec<Vec<u64>> =
            chosen.iter().map(|&c| s.generator().column(c)).collect();
        hops.push(LinkTransfer {
            from: Endpoint::Node(far_node),
            to: Endpoint::Node(s.node_at_offset(user_node, k - 2)),
            payload: carried.clone(),
        });
        for offset in (1..=k - 2).rev() {
            let sender = s.node_at_offset(user_node, offset);
            let mut payload = carried;
            payload.extend(
                s.node_columns(sender)
                    .iter()
                    .map(|&c| s.generator().column(c)),
            );
            hops.push(LinkTransfer {
                from: Endpoint::Node(sender),
                to: Endpoint::Node(s.node_at_offset(user_node, offset - 1)),
                payload: payload.clone(),
            });
            carried = payload;
        }
    }
    hops.push(LinkTransfer {
        from: Endpoint::Node(user_node),
        to: Endpoint::User(user_node),
        payload: (0..m).map(|i| unit_vector(m, i)).collect(),
    });

    let bandwidth: u64 = hops.iter().map(LinkTransfer::size).sum();
    debug_assert_eq!(
        bandwidth,
        reconstruct_lower_bound(s.node_count(), s.alpha(), m).expect("scheme invariants hold"),
    );
    Ok(ReconstructionPlan {
        user_node,
        context: PlanContext::of(s),
        hops,
        basis_columns,
        bandwidth,
    })
}

/// Replays a reconstruction plan against stored symbols. Every transmitted
/// value is derived from the sender's own symbols and what it received;
/// the recovered data is decoded from the vectors delivered to the user.
pub fn execute_reconstruction(
    s: &Scheme,
    st: &StoredState,
    plan: &ReconstructionPlan,
) -> Result<(Vec<u64>, u64), ProtocolError> {
    plan.context.check(s)?;
    check_stored_shape(s, st)?;
    let mut knowledge = initial_knowledge(s, st, None);
    let mut delivered: Vec<(Vec<u64>, u64)> = Vec::new();
    let mut bandwidth = 0u64;
    for hop in &plan.hops {
        let outgoing = send_hop(s, &mut knowledge, hop)?;
        bandwidth += hop.size();
        match hop.to {
            Endpoint::Node(r) if (1..=s.node_count()).contains(&r) => {
                for (w, v) in outgoing {
                    knowledge[r - 1].absorb(w, v);
                }
            }
            Endpoint::User(_) => delivered.extend(outgoing),
            _ => {
                return Err(ProtocolError::PlanSchemeMismatch(
                    "reconstruction plan delivers to an invalid endpoint",
                ))
            }
        }
    }
    if delivered.len() != s.data_len() {
        return Err(ProtocolError::PlanSchemeMismatch(
            "user did not receive exactly m vectors",
        ));
    }
    let vectors: Vec<Vec<u64>> = delivered.iter().map(|(w, _)| w.clone()).collect();
    let values: Vec<u64> = delivered.iter().map(|&(_, v)| v).collect();
    let basis = Matrix::from_columns(s.field(), &vectors)?;
    let x = row_vec_solve(&basis, &values).map_err(|e| match e {
        AlgebraError::Singular => ProtocolError::SingularBasis,
        other => ProtocolError::Algebra(other),
    })?;
    Ok((x, bandwidth))
}

/// Plans the exact repair of `failed_node` at bandwidth m.
///
/// The k upstream neighbours act as helpers. The farthest helper sends the
/// gamma columns completing its window's basis; each closer helper
/// eliminates its own columns' contributions from what passes through, so
/// the vectors reaching the substituted node involve only the failed
/// node's columns.
pub fn plan_repair(s: &Scheme, failed_node: usize) -> Result<RepairPlan, ProtocolError> {
    check_node_index(s, failed_node)?;
    if !validate_ordss(s).is_ordss {
        return Err(ProtocolError::NotOrdss);
    }
    let (alpha, m, k, gamma) = (s.alpha(), s.data_len(), s.k(), s.gamma());
    if s.node_count() < k + 1 {
        return Err(ProtocolError::RingTooShort {
            n: s.node_count(),
            k,
        });
    }

    // Basis of the window starting at the failed node: all columns of the
    // first k-1 nodes plus gamma chosen columns of the k-th window node.
    // For k = 1 the basis is m chosen columns of the failed node itself.
    let near_node = s.node_at_offset(failed_node, k - 1);
    let (mut basis_columns, chosen_near) = if k >= 2 {
        let base = s.window_columns(failed_node, k - 1);
        let chosen = greedy_extend(s, &base, &s.node_columns(near_node), gamma)?;
        (base, chosen)
    } else {
        let chosen = greedy_extend(s, &[], &s.node_columns(failed_node), m)?;
        (Vec::new(), chosen)
    };
    basis_columns.extend(&chosen_near);

    // Extra vectors: the near node's non-chosen columns, then the columns
    // completing the next window's basis from the far helper.
    let far_node = s.node_at_offset(failed_node, k);
    let extra_own: Vec<usize> = s
        .node_columns(near_node)
        .into_iter()
        .filter(|c| !chosen_near.contains(c))
        .collect();
    let window2_base = s.window_columns(s.node_at_offset(failed_node, 1), k - 1);
    let extra_far = greedy_extend(s, &window2_base, &s.node_columns(far_node), gamma)?;
    let mut extra_columns = extra_own;
    extra_columns.extend(&extra_far);

    // Expression of every extra column over the basis (rows = extras).
    let basis_matrix = s.generator().select_columns(&basis_columns);
    let basis_inv = basis_matrix
        .inverse()
        .map_err(|_| ProtocolError::SingularBasis)?;
    let extras_matrix = s.generator().select_columns(&extra_columns);
    let expression_coeffs = basis_inv.mul(&extras_matrix)?.transpose();

    let mut hops = Vec::with_capacity(k);
    let deliver_to = Endpoint::Substituted(failed_node);
    if k == 1 {
        hops.push(LinkTransfer {
            from: Endpoint::Node(far_node),
            to: deliver_to,
            payload: extra_far.iter().map(|&c| s.generator().column(c)).collect(),
        });
    } else {
        hops.push(LinkTransfer {
            from: Endpoint::Node(far_node),
            to: Endpoint::Node(near_node),
            payload: extra_far.iter().map(|&c| s.generator().column(c)).collect(),
        });
        // Residuals start from the raw extra columns; each sender strips
        // the contribution of its own basis positions.
        let mut residuals: Vec<Vec<u64>> = extra_columns
            .iter()
            .map(|&c| s.generator().column(c))
            .collect();
        let near_positions: Vec<usize> = ((k - 1) * alpha..m).collect();
        strip_positions(s, &expression_coeffs, &basis_columns, &near_positions, &mut residuals);
        hops.push(LinkTransfer {
            from: Endpoint::Node(near_node),
            to: if k == 2 {
                deliver_to
            } else {
                Endpoint::Node(s.node_at_offset(failed_node, k - 2))
            },
            payload: residuals.clone(),
        });
        for offset in (1..=k - 2).rev() {
            let sender = s.node_at_offset(failed_node, offset);
            let positions: Vec<usize> = (offset * alpha..(offset + 1) * alpha).collect();
            strip_positions(s, &expression_coeffs, &basis_columns, &positions, &mut residuals);
            hops.push(LinkTransfer {
                from: Endpoint::Node(sender),
                to: if offset == 1 {
                    deliver_to
                } else {
                    Endpoint::Node(s.node_at_offset(failed_node, offset - 1))
                },
                payload: residuals.clone(),
            });
        }
    }

    // Final system: what the delivered values say about the columns they
    // combine, and how the failed node's columns read off from those.
    let (final_system, failed_column_coeffs) = if k >= 2 {
        let positions: Vec<usize> = (0..alpha).collect();
        let f = expression_coeffs.select_columns(&positions);
        (f, Matrix::identity(s.field(), alpha))
    } else {
        let d_rows: Vec<Vec<u64>> = (alpha - gamma..alpha)
            .map(|t| expression_coeffs.row(t).to_vec())
            .collect();
        let f = Matrix::from_rows(s.field(), &d_rows)?;
        let mut q_rows = Vec::with_capacity(alpha);
        let mut own_extra_row = 0usize;
        for c in s.node_columns(failed_node) {
            if let Some(b) = basis_columns.iter().position(|&bc| bc == c) {
                q_rows.push(unit_vector(m, b));
            } else {
                q_rows.push(expression_coeffs.row(own_extra_row).to_vec());
                own_extra_row += 1;
            }
        }
        (f, Matrix::from_rows(s.field(), &q_rows)?)
    };

    let bandwidth: u64 = hops.iter().map(LinkTransfer::size).sum();
    debug_assert_eq!(bandwidth, m as u64);
    Ok(RepairPlan {
        failed_node,
        context: PlanContext::of(s),
        hops,
        basis_columns,
        extra_columns,
        expression_coeffs,
        final_system,
        failed_column_coeffs,
        bandwidth,
    })
}

/// Subtracts from every residual the contribution of the given basis
/// positions, as each helper does with its own columns.
fn strip_positions(
    s: &Scheme,
    expression_coeffs: &Matrix,
    basis_columns: &[usize],
    positions: &[usize],
    residuals: &mut [Vec<u64>],
) {
    let f = s.field();
    for (t, residual) in residuals.iter_mut().enumerate() {
        for &pos in positions {
            let coeff = expression_coeffs.at(t, pos);
            if coeff == 0 {
                continue;
            }
            let col = s.generator().column(basis_columns[pos]);
            for (r, c) in residual.iter_mut().zip(&col) {
                *r = f.sub(*r, f.mul(coeff, *c));
            }
        }
    }
}

/// Replays a repair plan. The failed node's symbols are never read; the
/// substituted node solves the delivered system and returns the rebuilt
/// symbols.
pub fn execute_repair(
    s: &Scheme,
    st: &StoredState,
    plan: &RepairPlan,
) -> Result<(Vec<u64>, u64), ProtocolError> {
    plan.context.check(s)?;
    check_stored_shape(s, st)?;
    check_node_index(s, plan.failed_node).map_err(|_| {
        ProtocolError::PlanSchemeMismatch("failed node index out of range for scheme")
    })?;
    let mut knowledge = initial_knowledge(s, st, Some(plan.failed_node));
    let mut delivered: Vec<u64> = Vec::new();
    let mut bandwidth = 0u64;
    for hop in &plan.hops {
        if hop.from == Endpoint::Node(plan.failed_node) {
            return Err(ProtocolError::PlanSchemeMismatch(
                "repair plan sends from the failed node",
            ));
        }
        let outgoing = send_hop(s, &mut knowledge, hop)?;
        bandwidth += hop.size();
        match hop.to {
            Endpoint::Node(r) if (1..=s.node_count()).contains(&r) => {
                for (w, v) in outgoing {
                    knowledge[r - 1].absorb(w, v);
                }
            }
            Endpoint::Substituted(f) if f == plan.failed_node => {
                delivered.extend(outgoing.into_iter().map(|(_, v)| v));
            }
            _ => {
                return Err(ProtocolError::PlanSchemeMismatch(
                    "repair plan delivers outside the substituted node",
                ))
            }
        }
    }
    if delivered.len() != plan.final_system.rows() {
        return Err(ProtocolError::PlanSchemeMismatch(
            "substituted node did not receive the planned vector count",
        ));
    }
    let inv = plan.final_system.inverse().map_err(|e| match e {
        AlgebraError::Singular => ProtocolError::SingularFinalSystem,
        other => ProtocolError::Algebra(other),
    })?;
    let resolved = inv.col_vec_mul(&delivered)?;
    let repaired = plan.failed_column_coeffs.col_vec_mul(&resolved)?;
    Ok((repaired, bandwidth))
}

/// True iff every constrained link of the plan carries at least its
/// minimum and no unconstrained link carries anything. The constraint
/// table must come from the plan's own (n, alpha, m) context.
pub fn verify_plan_against_cuts(
    plan: &ReconstructionPlan,
    constraints: &[CutConstraint],
) -> Result<bool, ProtocolError> {
    let (alpha, m) = (plan.context.alpha, plan.context.m);
    let k = m.div_ceil(alpha);
    if constraints.len() != k {
        return Err(ProtocolError::ContextMismatch(
            "constraint count differs from the plan's k",
        ));
    }
    for (i, cut) in constraints.iter().enumerate() {
        if cut.min_symbols != (m - i * alpha) as u64 {
            return Err(ProtocolError::ContextMismatch(
                "constraint minima do not match the plan's (alpha, m)",
            ));
        }
    }
    // a well-formed plan schedules exactly one hop per constrained link
    // and nothing on the unconstrained ones
    if plan.hops.len() != k {
        return Ok(false);
    }
    // hops run from the farthest node inward; constraints count outward
    // from the user
    Ok(plan
        .hops
        .iter()
        .enumerate()
        .all(|(j, hop)| hop.size() >= constraints[k - 1 - j].min_symbols))
}

fn check_stored_shape(s: &Scheme, st: &StoredState) -> Result<(), ProtocolError> {
    if st.nodes().len() != s.node_count() || st.nodes().iter().any(|v| v.len() != s.alpha()) {
        return Err(ProtocolError::PlanSchemeMismatch(
            "stored state shape differs from scheme",
        ));
    }
    Ok(())
}

/// One knowledge accumulator per node, seeded with the node's own columns
/// and symbols. `skip` marks a failed node that contributes nothing.
fn initial_knowledge(s: &Scheme, st: &StoredState, skip: Option<usize>) -> Vec<Knowledge> {
    (1..=s.node_count())
        .map(|node| {
            let mut k = Knowledge::new(s.field(), s.data_len());
            if skip != Some(node) {
                for (j, c) in s.node_columns(node).into_iter().enumerate() {
                    k.absorb(s.generator().column(c), st.node(node)[j]);
                }
            }
            k
        })
        .collect()
}

/// Derives the value of every payload vector from the sender's knowledge.
fn send_hop(
    s: &Scheme,
    knowledge: &mut [Knowledge],
    hop: &LinkTransfer,
) -> Result<Vec<(Vec<u64>, u64)>, ProtocolError> {
    let Endpoint::Node(sender) = hop.from else {
        return Err(ProtocolError::PlanSchemeMismatch(
            "only storage nodes can send",
        ));
    };
    if sender == 0 || sender > s.node_count() {
        return Err(ProtocolError::PlanSchemeMismatch("sender out of range"));
    }
    let mut outgoing = Vec::with_capacity(hop.payload.len());
    for w in &hop.payload {
        if w.len() != s.data_len() {
            return Err(ProtocolError::PlanSchemeMismatch(
                "payload vector has wrong length",
            ));
        }
        let value = knowledge[sender - 1]
            .express(w)
            .ok_or(ProtocolError::SingularBasis)?;
        outgoing.push((w.clone(), value));
    }
    Ok(outgoing)
}
