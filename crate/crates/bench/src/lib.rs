//! Benchmarks for `pathchain` live in `benches/`.
