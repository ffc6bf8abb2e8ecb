//! Checks sparseness, expansion, connector and jumbledness properties,
//! exactly and by randomized search.
//!
//! `cargo run --example property_checks`

use rigiditylab::generators::random_regular;
use rigiditylab::properties::{is_connector, is_expander, is_sparse, jumbled_certificate_regular, CheckOptions};
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_regular(14, 4, RngSeed::new(3), true)?.graph;
    let exact = CheckOptions::default();
    println!("(4, 1.5)-sparse: {:?}", is_sparse(&g, 4.0, 1.5, &exact)?);
    println!("1-expander: {:?}", is_expander(&g, 1, &exact)?);
    println!("4-connector: {:?}", is_connector(&g, 4, &exact)?);
    let (p, beta) = jumbled_certificate_regular(&g)?;
    println!("spectral certificate: ({p:.3}, {beta:.3})-jumbled");

    // larger graphs: randomized search finds violations but cannot prove
    // that a property holds
    let big = random_regular(400, 3, RngSeed::new(4), true)?.graph;
    let search = CheckOptions::random(500, RngSeed::new(5));
    println!("400 vertices, 40-connector by search: {:?}", is_connector(&big, 40, &search)?);
    Ok(())
}
