//! Impedance over a logarithmic frequency grid, written as CSV.
//!
//! Run with `cargo run --example frequency_sweep > sweep.csv`.

use acnet::impedance::sweep;
use acnet::netlist::parse_netlist;
use acnet::output::{Format, Render};
use acnet::solver::DEFAULT_RANK_TOL;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = parse_netlist(include_str!("../netlists/solutions.net"))?;
    let rows = sweep(&net, 0.1, 10.0, 25, true, DEFAULT_RANK_TOL)?;
    print!("{}", rows.render(Format::Csv));
    Ok(())
}
