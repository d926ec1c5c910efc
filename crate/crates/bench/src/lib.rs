//! Criterion benchmarks for `dcl-core`; see `benches/`.
