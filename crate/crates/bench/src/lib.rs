//! Criterion benchmarks for the algebra core live in `benches/`.
