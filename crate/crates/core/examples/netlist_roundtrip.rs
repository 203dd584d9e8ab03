//! Reading, validating and re-rendering the netlist format, and building the
//! same network programmatically.
//!
//! Run with `cargo run --example netlist_roundtrip`.

use acnet::exact::ratio;
use acnet::impedance::effective_symbolic;
use acnet::netlist::NetlistDocument;
use acnet::network::{EdgeParams, NetworkBuilder};

const TEXT: &str = "\
# an RC low-pass seen from its input
terminals in gnd
edge in out R=0.5
edge out gnd C=2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = NetlistDocument::parse(TEXT)?;
    print!("{}", doc.render());
    let parsed = doc.to_network()?;

    let built = NetworkBuilder::new("in", "gnd")
        .edge(
            "in",
            "out",
            EdgeParams::rlc(ratio(1, 2), ratio(0, 1), ratio(0, 1)),
        )
        .edge("out", "gnd", EdgeParams::capacitor(2))
        .build()?;

    let (a, b) = (
        effective_symbolic(&parsed)?.z,
        effective_symbolic(&built)?.z,
    );
    println!("Z = {a}");
    assert_eq!(a, b);

    match NetlistDocument::parse("terminals a b\nedge a b R=x\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("invalid literal"),
    }
    Ok(())
}
