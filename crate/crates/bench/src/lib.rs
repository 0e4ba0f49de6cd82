//! Criterion benchmarks for qtest-core live in `benches/`.
