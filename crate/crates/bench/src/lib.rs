//! Criterion benchmarks for axgroup live in `benches/`.
