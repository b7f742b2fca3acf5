//! Criterion benchmarks for handmotion-core; see `benches/`.
