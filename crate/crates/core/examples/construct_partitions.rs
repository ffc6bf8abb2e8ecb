//! Builds strong rigid partitions with the randomized and deterministic
//! constructions.
//!
//! `cargo run --example construct_partitions`

use rigiditylab::construct::{
    common_neighbour_partition, complete_bipartite_partition, dirac_parameters, strong_partition_via_sparse_connector,
    DEFAULT_MAX_RETRIES,
};
use rigiditylab::generators::gnp;
use rigiditylab::graph::Graph;
use rigiditylab::partition::verify_strong;
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = RngSeed::new(7);
    let g = gnp(200, 0.7, seed.child(0))?;
    let out = strong_partition_via_sparse_connector(&g, 2, seed.child(1))?;
    println!("random split of G(200, 0.7) into 2 parts: success after {} attempt(s)", out.attempts);

    let dense = gnp(60, 0.85, seed.child(2))?;
    let params = dirac_parameters(&dense);
    println!("Dirac parameters: ell = {}, d = {}", params.ell, params.d);
    let out = common_neighbour_partition(&dense, 2, seed.child(3), DEFAULT_MAX_RETRIES)?;
    println!("common-neighbour partition found: {}", out.is_success());

    for (m, n, d) in [(4, 6, 3), (4, 5, 3)] {
        match complete_bipartite_partition(m, n, d) {
            Ok(sp) => println!("K_{{{m},{n}}}, d = {d}: {} parts, verified {}", sp.parts().len(), verify_strong(&Graph::complete_bipartite(m, n), &sp)),
            Err(e) => println!("K_{{{m},{n}}}, d = {d}: {e}"),
        }
    }
    Ok(())
}
