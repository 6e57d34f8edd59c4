//! Storage schemes for unidirectional ring networks: generator-matrix
//! constructions (binary ED matrices and MDS matrices), scheme validation,
//! bandwidth lower bounds, and planners that reconstruct data or repair a
//! failed node at exactly those bounds. A deterministic ring simulator
//! executes the plans and accounts bandwidth per link.
//!
//! Everything is exact arithmetic over prime fields; there is no floating
//! point and no hidden randomness (all seeds are explicit).
//!
//! ```
//! use ringstore_core::{
//!     build_ed_matrix, encode, execute_reconstruction, make_scheme,
//!     plan_reconstruction, validate_ordss,
//! };
//!
//! let scheme = make_scheme(build_ed_matrix(5, 8)?, 4, 2)?;
//! assert!(validate_ordss(&scheme).is_ordss);
//!
//! let stored = encode(&scheme, &[1, 1, 0, 1, 0])?;
//! let plan = plan_reconstruction(&scheme, 1)?;
//! let (recovered, bandwidth) = execute_reconstruction(&scheme, &stored, &plan)?;
//! assert_eq!(recovered, vec![1, 1, 0, 1, 0]);
//! assert_eq!(bandwidth, 9);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algebra;
pub mod construct;
pub mod protocol;
pub mod rng;
pub mod scheme;
pub mod simnet;

#[cfg(test)]
pub(crate) mod testdata;

pub use algebra::{row_vec_solve, AlgebraError, FieldElement, FieldSpec, Matrix};
pub use construct::{
    build_cauchy_mds, build_ed_matrix, check_full_mds, check_weak_column_mds, check_weak_row_mds,
    euclid_chain, greedy_mds_columns, ConstructError, EuclidChain,
};
pub use protocol::{
    execute_reconstruction, execute_repair, plan_reconstruction, plan_repair,
    verify_plan_against_cuts, Endpoint, LinkTransfer, ProtocolError, ReconstructionPlan,
    RepairPlan,
};
pub use rng::Lcg;
pub use scheme::{
    cut_constraints, encode, make_scheme, reconstruct_lower_bound, repair_lower_bound,
    validate_ordss, CutConstraint, Scheme, SchemeError, StoredState, ValidationReport,
};
pub use simnet::{sim_new, Event, EventKind, RingSim, SimError, SimStats};
