//! Benchmarks live in `benches/`; run `cargo bench -p rootdata-bench`.
