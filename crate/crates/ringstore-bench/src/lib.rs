//! Benchmark-only crate; see `benches/ring.rs`.
