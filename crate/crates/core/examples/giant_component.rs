//! Grows a rigid component greedily in a sparse random graph and validates
//! it with the rank test.
//!
//! `cargo run --example giant_component`

use rigiditylab::component::{greedy_rigid_closure, validate_growth};
use rigiditylab::generators::gnp;
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1000;
    let d = 2;
    let p = 20.0 * d as f64 * (d as f64).ln() / n as f64;
    let g = gnp(n, p, RngSeed::new(11))?;
    let trace = greedy_rigid_closure(&g, d)?;
    println!(
        "grew a set of {} of {n} vertices ({} glue steps) from seed clique {:?}",
        trace.final_set.len(),
        trace.glue_count(),
        trace.seed_clique
    );
    let v = validate_growth(&g, &trace, 3, RngSeed::new(12), 300)?;
    println!("validated on the {:?}: {:?}", v.target, v.verdict.kind);
    Ok(())
}
