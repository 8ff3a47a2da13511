//! Criterion benchmarks for `loopvir-core`; see `benches/`.
