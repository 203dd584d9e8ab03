//! The complex impedance at λ against the symbolic impedance evaluated at λ.
//!
//! They agree away from singular frequencies. At λ = −1 the three-edge
//! network has many complex solutions and a different impedance than the
//! rational function predicts. The raw network with a non-RLC weight has no
//! complex solution at λ = i, and the one with weights ±λ has no symbolic
//! impedance at all.
//!
//! Run with `cargo run --example compare_models`.

use acnet::exact::{format_complex, Complex64};
use acnet::impedance::{compare, DEFAULT_COMPARE_TOL};
use acnet::netlist::parse_netlist;
use acnet::solver::DEFAULT_RANK_TOL;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let omega = parse_netlist(include_str!("../netlists/complex_omega.net"))?;
    let raw = parse_netlist(include_str!("../netlists/non_pos_w.net"))?;
    let minus = parse_netlist(include_str!("../netlists/minus_lambda.net"))?;
    let cases = [
        ("complex_omega", &omega, Complex64::new(0.0, 0.5)),
        ("complex_omega", &omega, Complex64::new(-1.0, 0.0)),
        ("non_pos_w", &raw, Complex64::new(0.0, 1.0)),
        ("minus_lambda", &minus, Complex64::new(0.0, 0.7)),
    ];
    for (name, net, lambda) in cases {
        let r = compare(net, lambda, DEFAULT_RANK_TOL, DEFAULT_COMPARE_TOL)?;
        let z2 = r.z2.map_or("undefined".to_string(), format_complex);
        println!(
            "{name:<13} λ={}  Z1={}  Z2={z2}  agree={}  ({})",
            format_complex(lambda),
            r.z1,
            r.agree,
            r.note.as_str()
        );
    }
    Ok(())
}
