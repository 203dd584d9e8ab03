//! Solving the complex problem at fixed λ and reading its class.
//!
//! At λ = i the bridge has infinitely many solutions, yet its impedance is
//! still well defined; at a generic frequency the solution is unique.
//!
//! Run with `cargo run --example complex_classification`.

use acnet::exact::Complex64;
use acnet::impedance::effective_complex;
use acnet::netlist::parse_netlist;
use acnet::solver::DEFAULT_RANK_TOL;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bridge = parse_netlist(include_str!("../netlists/nontrivial.net"))?;
    let ladder = parse_netlist(include_str!("../netlists/solutions.net"))?;

    let cases = [
        ("bridge", &bridge, Complex64::new(0.0, 1.0)),
        ("bridge", &bridge, Complex64::new(0.0, 2.0)),
        ("ladder", &ladder, Complex64::new(0.0, 2f64.sqrt())),
        ("ladder", &ladder, Complex64::new(0.0, 1.0 / 3f64.sqrt())),
    ];
    for (name, net, lambda) in cases {
        let r = effective_complex(net, lambda, DEFAULT_RANK_TOL)?;
        println!(
            "{name:<7} λ={lambda:.4}  class={:<8} Z={}  P={}",
            r.class.to_string(),
            r.z,
            r.p
        );
        if !r.outcome.nullspace.is_empty() {
            println!(
                "        homogeneous solutions: {}",
                r.outcome.nullspace.len()
            );
        }
    }
    Ok(())
}
