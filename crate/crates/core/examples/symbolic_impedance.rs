//! Exact impedance of a network over the field of rational functions in λ.
//!
//! Run with `cargo run --example symbolic_impedance [NETLIST]`; defaults to
//! the bridge in `netlists/nontrivial.net`.

use acnet::impedance::effective_symbolic;
use acnet::netlist::parse_netlist;

const DEFAULT: &str = include_str!("../netlists/nontrivial.net");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let net = parse_netlist(&text)?;
    let s = effective_symbolic(&net)?;
    println!("Z(λ) = {}", s.z);
    println!("P(λ) = {}", s.p);
    println!("coefficients: {}", s.z.coeff_record());

    // Every vertex potential is a rational function between 0 and 1.
    for (x, v) in s.solution.values.values().iter().enumerate() {
        println!("v({}) = {v}", net.name(x));
    }
    Ok(())
}
