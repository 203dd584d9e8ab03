//! Runs every executable identity (Green's formula, maximum principle,
//! conservation of power, Thomson's principle, sign conditions, model
//! agreement) on random networks and on a shipped one.
//!
//! Run with `cargo run --release --example theorem_suite [SEED]`.

use acnet::netlist::parse_netlist;
use acnet::output::{Format, Render};
use acnet::verify::{all_passed, random_network, run_all, NetworkKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1);

    let bridge = parse_netlist(include_str!("../netlists/nontrivial.net"))?;
    print!("{}", run_all(&bridge, seed, 20).render(Format::Text));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for k in 0..10 {
        let net = random_network(&mut rng, NetworkKind::Any);
        let reports = run_all(&net, seed + k, 20);
        if !all_passed(&reports) {
            failures += 1;
            print!("{}", reports.render(Format::Text));
        }
    }
    println!("random networks with failures: {failures} of 10");
    Ok(())
}
