//! Evaluates the eigenvalue lower bound certified by a rigid partition.
//!
//! `cargo run --example bound_check`

use rigiditylab::construct::complete_bipartite_partition;
use rigiditylab::graph::Graph;
use rigiditylab::partition::{convert_to_rigid_partition, verify_rigid_partition};
use rigiditylab::rigidity::quantitative_bound_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::complete_bipartite(5, 5);
    let sp = complete_bipartite_partition(5, 5, 3)?;
    let rp = convert_to_rigid_partition(&g, &sp.into())?;
    let report = verify_rigid_partition(&g, &rp, 8)?;
    let hierarchy = report.hierarchy().ok_or("partition rejected")?;
    let bound = quantitative_bound_check(&g, &rp, hierarchy, 1e-8)?;
    println!("lambda_{} = {:.6} >= min a(G_ij)/2 = {:.6}: {}", bound.lambda_index, bound.lambda_value, bound.min_half_a, bound.holds);
    for (pair, a) in &bound.per_pair_a {
        println!("  a(G_{{{pair}}}) = {a:.6}");
    }
    Ok(())
}
