//! Frequencies where the complex problem stops being uniquely solvable:
//! zeros of the determinant of the interior system.
//!
//! Run with `cargo run --example singular_frequencies`.

use acnet::exact::{DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
use acnet::netlist::parse_netlist;
use acnet::solver::{determinant_symbolic, singular_frequencies, SingularSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nets = [
        ("solutions", include_str!("../netlists/solutions.net")),
        ("nontrivial", include_str!("../netlists/nontrivial.net")),
        ("minus_lambda", include_str!("../netlists/minus_lambda.net")),
    ];
    for (name, text) in nets {
        let net = parse_netlist(text)?;
        println!("{name}: det = {}", determinant_symbolic(&net));
        match singular_frequencies(&net, DEFAULT_ROOT_TOL, DEFAULT_MAX_ITER)? {
            SingularSet::IdenticallyZero => println!("  singular at every λ"),
            SingularSet::Finite(list) => {
                for s in list {
                    let tag = if s.physical { "physical" } else { "" };
                    println!(
                        "  λ = {:.6} (multiplicity {}) {tag}",
                        s.lambda, s.multiplicity
                    );
                }
            }
        }
    }
    Ok(())
}
