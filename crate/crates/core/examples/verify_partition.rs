//! Verifies hand-made rigid partitions: an accepted one with its cut
//! hierarchy and a rejected one with the reason.
//!
//! `cargo run --example verify_partition`

use std::collections::BTreeMap;

use rigiditylab::graph::Graph;
use rigiditylab::partition::{verify_rigid_partition, RigidPartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the triangle as a 2-rigid partition: three singleton parts, one edge
    // per colour class
    let triangle = Graph::complete(3);
    let mut colours = BTreeMap::new();
    colours.insert((0, 1), vec![(0, 1)]);
    colours.insert((0, 2), vec![(0, 2)]);
    colours.insert((1, 2), vec![(1, 2)]);
    let rp = RigidPartition::new(2, vec![vec![0], vec![1], vec![2]], colours)?;
    let report = verify_rigid_partition(&triangle, &rp, 8)?;
    println!("triangle: {:?}", report.verdict);
    println!("partition JSON: {}", rp.to_json());

    // K_4 split 2 + 2 without colours: G_12 has no edges
    let k4 = Graph::complete(4);
    let rp = RigidPartition::new(1, vec![vec![0, 1], vec![2, 3]], BTreeMap::new())?;
    println!("uncoloured K_4: {:?}", verify_rigid_partition(&k4, &rp, 8)?.verdict);
    Ok(())
}
