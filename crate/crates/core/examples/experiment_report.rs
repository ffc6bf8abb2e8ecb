//! Runs a small hitting-time experiment and prints its canonical report and
//! content hash.
//!
//! `cargo run --example experiment_report`
//!
//! Set `RIGIDITYLAB_THREADS` to bound the worker threads; the report content
//! does not depend on it.

use rigiditylab::experiments::hitting_time_experiment;
use rigiditylab::report::ExperimentReport;
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = hitting_time_experiment(100, 2, 8, RngSeed::new(2024));
    let json = report.to_json();
    println!("{json}");
    let back = ExperimentReport::from_json(&json)?;
    println!("content hash {}", back.content_hash());
    println!("wall clock {:.3}s", back.wall_clock_seconds);
    Ok(())
}
