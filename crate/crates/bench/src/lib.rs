//! Criterion benchmarks for `ehv-core`; see `benches/`.
