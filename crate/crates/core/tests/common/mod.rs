#![allow(dead_code)]

use acnet::netlist::parse_netlist;
use acnet::network::Network;

pub const SHIPPED: [(&str, &str); 6] = [
    ("solutions", include_str!("../../netlists/solutions.net")),
    ("nontrivial", include_str!("../../netlists/nontrivial.net")),
    (
        "complex_omega",
        include_str!("../../netlists/complex_omega.net"),
    ),
    ("non_pos_w", include_str!("../../netlists/non_pos_w.net")),
    (
        "minus_lambda",
        include_str!("../../netlists/minus_lambda.net"),
    ),
    ("resistors", include_str!("../../netlists/resistors.net")),
];

pub fn netlist_text(name: &str) -> &'static str {
    SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .expect("shipped netlist")
}

pub fn load(name: &str) -> Network {
    parse_netlist(netlist_text(name)).unwrap()
}

pub fn netlist_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("netlists")
        .join(format!("{name}.net"))
}
