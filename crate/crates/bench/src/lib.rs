//! Criterion benchmarks for `minbin-core`; see `benches/algorithms.rs`.
