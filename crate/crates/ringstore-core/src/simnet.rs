//! Deterministic simulator of one ring deployment: encodes seeded data,
//! replays reconstruction and repair plans as message sequences, accounts
//! every symbol per link, and injects single-node failures.
//!
//! A simulator instance is single-threaded; operations mutate it in place.
//! Two instances with the same scheme, seed, and operation sequence produce
//! identical event logs and counters.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::protocol::{
    execute_reconstruction, execute_repair, plan_reconstruction, plan_repair, Endpoint,
    ProtocolError,
};
use crate::rng::Lcg;
use crate::scheme::{encode, reconstruct_lower_bound, validate_ordss, Scheme, StoredState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("scheme is not an ORDSS")]
    NotOrdss,
    #[error("user index {user} out of range 1..={n}")]
    BadUserIndex { user: usize, n: usize },
    #[error("node {node} on the reconstruction path is failed")]
    PathBlockedByFailure { node: usize },
    #[error("node {node} is already failed and not yet repaired")]
    AnotherNodeFailed { node: usize },
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EventKind {
    Encode,
    UserRead,
    Fail,
    Repair,
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EventKind::Encode => "encode",
            EventKind::UserRead => "read",
            EventKind::Fail => "fail",
            EventKind::Repair => "repair",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub kind: EventKind,
    /// Acting node or user index; 0 marks the source for the encode event.
    pub node_or_user: usize,
    pub bandwidth: u64,
    pub success: bool,
}

/// Aggregated counters: per-link totals, per-kind totals, event count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimStats {
    pub per_link: Vec<(Endpoint, Endpoint, u64)>,
    /// (kind, event count, total bandwidth)
    pub per_kind: Vec<(EventKind, usize, u64)>,
    pub event_count: usize,
}

/// One ring deployment under simulation.
#[derive(Debug, Clone)]
pub struct RingSim {
    scheme: Scheme,
    state: StoredState,
    original_x: Vec<u64>,
    link_counters: BTreeMap<(Endpoint, Endpoint), u64>,
    failed: Option<usize>,
    seed: u64,
    event_log: Vec<Event>,
}

/// Creates a simulator: draws the data vector from the seeded stream,
/// encodes it, and logs the encode event.
pub fn sim_new(scheme: Scheme, seed: u64) -> Result<RingSim, SimError> {
    if !validate_ordss(&scheme).is_ordss {
        return Err(SimError::NotOrdss);
    }
    let mut rng = Lcg::new(seed);
    let original_x = rng.vector_mod(scheme.field().prime(), scheme.data_len());
    let state = encode(&scheme, &original_x).expect("data length matches scheme");
    let mut sim = RingSim {
        scheme,
        state,
        original_x,
        link_counters: BTreeMap::new(),
        failed: None,
        seed,
        event_log: Vec::new(),
    };
    sim.log(Event {
        kind: EventKind::Encode,
        node_or_user: 0,
        bandwidth: 0,
        success: true,
    });
    Ok(sim)
}

impl RingSim {
    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn state(&self) -> &StoredState {
        &self.state
    }

    pub fn original_data(&self) -> &[u64] {
        &self.original_x
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn failed_node(&self) -> Option<usize> {
        self.failed
    }

    pub fn events(&self) -> &[Event] {
        &self.event_log
    }

    /// Plans and executes a reconstruction for `user`, checks the recovered
    /// data, and accounts the transfers.
    pub fn user_read(&mut self, user: usize) -> Result<Event, SimError> {
        let n = self.scheme.node_count();
        if !(1..=n).contains(&user) {
            return Err(SimError::BadUserIndex { user, n });
        }
        if let Some(failed) = self.failed {
            let path_len = self.scheme.k();
            for offset in 0..path_len {
                if self.scheme.node_at_offset(user, offset) == failed {
                    return Err(SimError::PathBlockedByFailure { node: failed });
                }
            }
        }
        let plan = plan_reconstruction(&self.scheme, user)?;
        let (recovered, bandwidth) = execute_reconstruction(&self.scheme, &self.state, &plan)?;
        assert_eq!(
            recovered, self.original_x,
            "reconstruction returned wrong data"
        );
        debug_assert_eq!(
            bandwidth,
            reconstruct_lower_bound(n, self.scheme.alpha(), self.scheme.data_len())
                .expect("scheme invariants hold")
        );
        self.count_hops(plan.hops().iter().map(|h| (h.from, h.to, h.size())));
        let event = Event {
            kind: EventKind::UserRead,
            node_or_user: user,
            bandwidth,
            success: true,
        };
        self.log(event.clone());
        Ok(event)
    }

    /// Marks `node` failed, then plans and executes its repair from the
    /// remaining nodes. When planning fails (short ring) the node stays
    /// failed and the repair event is logged unsuccessful.
    pub fn fail_and_repair(&mut self, node: usize) -> Result<Event, SimError> {
        let n = self.scheme.node_count();
        if !(1..=n).contains(&node) {
            return Err(SimError::BadUserIndex { user: node, n });
        }
        if let Some(failed) = self.failed {
            return Err(SimError::AnotherNodeFailed { node: failed });
        }
        self.failed = Some(node);
        self.log(Event {
            kind: EventKind::Fail,
            node_or_user: node,
            bandwidth: 0,
            success: true,
        });
        let plan = match plan_repair(&self.scheme, node) {
            Ok(plan) => plan,
            Err(e) => {
                self.log(Event {
                    kind: EventKind::Repair,
                    node_or_user: node,
                    bandwidth: 0,
                    success: false,
                });
                return Err(e.into());
            }
        };
        let (repaired, bandwidth) = execute_repair(&self.scheme, &self.state, &plan)?;
        assert_eq!(
            repaired,
            self.state.node(node).to_vec(),
            "repair produced different symbols"
        );
        self.state.install_node(node, repaired);
        self.failed = None;
        self.count_hops(plan.hops().iter().map(|h| (h.from, h.to, h.size())));
        let event = Event {
            kind: EventKind::Repair,
            node_or_user: node,
            bandwidth,
            success: true,
        };
        self.log(event.clone());
        Ok(event)
    }

    /// Pure aggregation of the counters and the event log.
    pub fn stats(&self) -> SimStats {
        let per_link = self
            .link_counters
            .iter()
            .map(|(&(from, to), &total)| (from, to, total))
            .collect();
        let mut kinds: BTreeMap<EventKind, (usize, u64)> = BTreeMap::new();
        for e in &self.event_log {
            let entry = kinds.entry(e.kind).or_default();
            entry.0 += 1;
            entry.1 += e.bandwidth;
        }
        SimStats {
            per_link,
            per_kind: kinds
                .into_iter()
                .map(|(kind, (count, bw))| (kind, count, bw))
                .collect(),
            event_count: self.event_log.len(),
        }
    }

    fn count_hops(&mut self, hops: impl Iterator<Item = (Endpoint, Endpoint, u64)>) {
        for (from, to, size) in hops {
            *self.link_counters.entry((from, to)).or_default() += size;
        }
    }

    fn log(&mut self, event: Event) {
        self.event_log.push(event);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_ed_matrix;
    use crate::scheme::make_scheme;
    use crate::testdata;

    #[test]
    fn fresh_sim_is_encoded_and_idle() {
        let sim = sim_new(testdata::ed_scheme(), 42).unwrap();
        let re_encoded = encode(sim.scheme(), sim.original_data()).unwrap();
        assert_eq!(sim.state(), &re_encoded);
        let stats = sim.stats();
        assert!(stats.per_link.is_empty());
        assert_eq!(stats.event_count, 1);
    }

    #[test]
    fn same_seed_reproduces_everything() {
        let run = |seed| {
            let mut sim = sim_new(testdata::mds_scheme(), seed).unwrap();
            sim.user_read(1).unwrap();
            sim.fail_and_repair(2).unwrap();
            sim.user_read(3).unwrap();
            (sim.events().to_vec(), sim.stats())
        };
        assert_eq!(run(7), run(7));
        assert_ne!(run(7).0.len(), 0);
    }

    #[test]
    fn rejects_non_ordss_schemes() {
        assert!(matches!(
            sim_new(testdata::deficient_scheme(), 0),
            Err(SimError::NotOrdss)
        ));
    }

    #[test]
    fn single_read_hits_bound_and_counts_links() {
        let mut sim = sim_new(testdata::ed_scheme(), 42).unwrap();
        let event = sim.user_read(1).unwrap();
        assert_eq!(event.kind, EventKind::UserRead);
        assert_eq!(event.bandwidth, 9);
        assert!(event.success);
        let stats = sim.stats();
        let expected = vec![
            (Endpoint::Node(1), Endpoint::User(1), 5),
            (Endpoint::Node(2), Endpoint::Node(1), 3),
            (Endpoint::Node(3), Endpoint::Node(2), 1),
        ];
        assert_eq!(stats.per_link, expected);
    }

    #[test]
    fn all_users_read_at_the_same_bound() {
        let mut sim = sim_new(testdata::ed_scheme(), 1).unwrap();
        let mut total = 0;
        for user in 1..=4 {
            total += sim.user_read(user).unwrap().bandwidth;
        }
        assert_eq!(total, 36);
    }

    #[test]
    fn repair_events_hit_bandwidth_m() {
        let mut sim = sim_new(testdata::ed_scheme(), 5).unwrap();
        let event = sim.fail_and_repair(2).unwrap();
        assert_eq!(event.kind, EventKind::Repair);
        assert_eq!(event.bandwidth, 5);
        assert_eq!(sim.failed_node(), None);

        let mut sim = sim_new(testdata::mds_scheme(), 0).unwrap();
        for node in 1..=4 {
            assert_eq!(sim.fail_and_repair(node).unwrap().bandwidth, 5);
        }
    }

    #[test]
    fn conservation_of_symbols() {
        let mut sim = sim_new(testdata::mds_scheme(), 9).unwrap();
        sim.user_read(2).unwrap();
        sim.fail_and_repair(4).unwrap();
        sim.user_read(1).unwrap();
        let stats = sim.stats();
        let link_total: u64 = stats.per_link.iter().map(|&(_, _, t)| t).sum();
        let event_total: u64 = sim.events().iter().map(|e| e.bandwidth).sum();
        assert_eq!(link_total, event_total);
    }

    #[test]
    fn short_ring_leaves_node_failed() {
        // n = k = 3: repair planning must fail and block later operations
        let s = make_scheme(build_ed_matrix(5, 6).unwrap(), 3, 2).unwrap();
        let mut sim = sim_new(s, 13).unwrap();
        assert!(matches!(
            sim.fail_and_repair(1),
            Err(SimError::Protocol(ProtocolError::RingTooShort { .. }))
        ));
        assert_eq!(sim.failed_node(), Some(1));
        assert!(matches!(
            sim.user_read(2),
            Err(SimError::PathBlockedByFailure { node: 1 })
        ));
        assert!(matches!(
            sim.fail_and_repair(2),
            Err(SimError::AnotherNodeFailed { node: 1 })
        ));
        // the failed repair is in the log
        let last = sim.events().last().unwrap();
        assert_eq!(last.kind, EventKind::Repair);
        assert!(!last.success);
    }

    #[test]
    fn off_path_failure_does_not_block_reads() {
        // k = 2 on a 4-node ring: user 1 reads nodes 1 and 2 only
        let s = make_scheme(build_ed_matrix(3, 8).unwrap(), 4, 2).unwrap();
        assert_eq!(s.k(), 2);
        let mut sim = sim_new(s, 2).unwrap();
        sim.failed = Some(4);
        assert!(sim.user_read(1).is_ok());
        assert!(matches!(
            sim.user_read(3),
            Err(SimError::PathBlockedByFailure { node: 4 })
        ));
    }

    #[test]
    fn bad_indices_are_rejected() {
        let mut sim = sim_new(testdata::ed_scheme(), 3).unwrap();
        assert!(matches!(
            sim.user_read(0),
            Err(SimError::BadUserIndex { .. })
        ));
        assert!(matches!(
            sim.user_read(9),
            Err(SimError::BadUserIndex { .. })
        ));
        assert!(matches!(
            sim.fail_and_repair(0),
            Err(SimError::BadUserIndex { .. })
        ));
    }
}
