//! Samples the random graph models and prints summary statistics.
//!
//! `cargo run --example generate_graphs`

use rigiditylab::generators::{gnm, gnnp, gnp, process_hitting_time, random_regular};
use rigiditylab::rng::RngSeed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = RngSeed::new(42);
    let g = gnp(200, 0.05, seed.child(0))?;
    println!("G(200, 0.05): {} edges, degrees {}..{}", g.m(), g.min_degree(), g.max_degree());
    let bg = gnnp(50, 0.2, seed.child(1))?;
    println!("G(50, 50, 0.2): {} edges between the sides", bg.graph().m());
    let g = gnm(30, 60, seed.child(2))?;
    println!("G(30, 60): {} edges", g.m());
    let r = random_regular(20, 3, seed.child(3), true)?;
    println!("random 3-regular on 20 vertices: regular = {:?}", r.graph.is_regular());
    for d in 1..=3 {
        let snap = process_hitting_time(500, d, seed.child(4))?;
        println!("random graph process on 500 vertices reaches min degree {d} after {} edges", snap.tau_d);
    }
    // the text format read by the command-line tool
    println!("\n{}", gnm(5, 4, seed.child(5))?.to_text());
    Ok(())
}
