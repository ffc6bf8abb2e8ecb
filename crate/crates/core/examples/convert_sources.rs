//! Converts a partition into connected dominating sets into a rigid
//! partition and verifies the result.
//!
//! `cargo run --example convert_sources`

use rigiditylab::graph::Graph;
use rigiditylab::partition::{convert_to_rigid_partition, verify_rigid_partition, CdsFamily, PartitionSource};
use rigiditylab::rigidity::randomized_rigidity_test;
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // K_6 splits into three connected dominating pairs
    let g = Graph::complete(6);
    let source: PartitionSource = CdsFamily {
        d: 2,
        sets: vec![vec![0, 1], vec![2, 3], vec![4, 5]],
    }
    .into();
    let rp = convert_to_rigid_partition(&g, &source)?;
    let report = verify_rigid_partition(&g, &rp, 8)?;
    println!("converted partition accepted: {}", report.is_accepted());
    println!("{}", rp.to_json());
    let cert = randomized_rigidity_test(&g, 2, 3, RngSeed::new(0))?;
    println!("rank test agrees: {:?}", cert.kind);
    Ok(())
}
