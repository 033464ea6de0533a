//! Criterion benchmarks for `expcon`; see `benches/`.
