//! Computes rigidity numbers of hyperoctahedral graphs and compares them
//! with the closed form `n − 1 − ⌊√n + 1/2⌋`.
//!
//! `cargo run --example rigidity_number`

use rigiditylab::experiments::hyperoctahedral_formula;
use rigiditylab::graph::Graph;
use rigiditylab::rigidity::rigidity_scan;
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("n\trigidity\tformula");
    for n in (4..=14).step_by(2) {
        let scan = rigidity_scan(&Graph::hyperoctahedral(n), 3, RngSeed::new(n as u64), true)?;
        println!("{n}\t{}\t\t{}", scan.rigidity, hyperoctahedral_formula(n));
    }
    Ok(())
}
