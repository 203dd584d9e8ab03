//! Line-oriented netlist format.
//!
//! ```text
//! # comment
//! net <name>                      (optional)
//! mode strict|raw                 (optional, default strict)
//! terminals <a0> <a1>
//! edge <x> <y> [R=<lit>] [L=<lit>] [C=<lit>|inf]
//! wedge <x> <y> num=<c0,c1,...> den=<c0,c1,...>   (raw mode only)
//! ```
//!
//! Literals are `p/q` rationals or decimals, parsed exactly. Omitted R and L
//! default to 0, omitted C to ∞. Vertices are declared by the edges that
//! mention them, in order of first appearance.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::exact::rational::format_rational;
use crate::exact::{parse_rational, Polynomial, Rational, RationalFunction};
use crate::network::{EdgeParams, Mode, Network, NetworkBuilder};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NetlistError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Capacitance {
    Finite(Rational),
    Infinite,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Edge {
        line: usize,
        x: String,
        y: String,
        r: Option<Rational>,
        l: Option<Rational>,
        c: Option<Capacitance>,
    },
    Wedge {
        line: usize,
        x: String,
        y: String,
        num: Vec<Rational>,
        den: Vec<Rational>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetlistDocument {
    pub name: Option<String>,
    pub mode: Mode,
    pub terminals: (String, String),
    pub statements: Vec<Statement>,
}

fn syntax(line: usize, message: impl Into<String>) -> NetlistError {
    NetlistError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_coeffs(line: usize, text: &str) -> Result<Vec<Rational>, NetlistError> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(|e| syntax(line, e.to_string())))
        .collect()
}

impl NetlistDocument {
    pub fn parse(text: &str) -> Result<Self, NetlistError> {
        let mut name = None;
        let mut mode = None;
        let mut terminals = None;
        let mut statements = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = tokens.split_first() else {
                continue;
            };
            match keyword {
                "net" => {
                    let [n] = args else {
                        return Err(syntax(line, "expected `net <name>`"));
                    };
                    name = Some(n.to_string());
                }
                "mode" => {
                    if mode.is_some() {
                        return Err(syntax(line, "duplicate `mode` line"));
                    }
                    mode = Some(match args {
                        ["strict"] => Mode::Strict,
                        ["raw"] => Mode::Raw,
                        _ => return Err(syntax(line, "expected `mode strict` or `mode raw`")),
                    });
                }
                "terminals" => {
                    if terminals.is_some() {
                        return Err(syntax(line, "duplicate `terminals` line"));
                    }
                    let [a0, a1] = args else {
                        return Err(syntax(line, "expected `terminals <a0> <a1>`"));
                    };
                    terminals = Some((a0.to_string(), a1.to_string()));
                }
                "edge" => {
                    let [x, y, params @ ..] = args else {
                        return Err(syntax(line, "expected `edge <x> <y> [R=..] [L=..] [C=..]`"));
                    };
                    let (mut r, mut l, mut c) = (None, None, None);
                    for p in params {
                        let Some((key, value)) = p.split_once('=') else {
                            return Err(syntax(line, format!("expected key=value, got `{p}`")));
                        };
                        let lit =
                            |v: &str| parse_rational(v).map_err(|e| syntax(line, e.to_string()));
                        let dup = match key {
                            "R" => r.replace(lit(value)?).is_some(),
                            "L" => l.replace(lit(value)?).is_some(),
                            "C" => {
                                let cap = if value == "inf" {
                                    Capacitance::Infinite
                                } else {
                                    Capacitance::Finite(lit(value)?)
                                };
                                c.replace(cap).is_some()
                            }
                            _ => {
                                return Err(syntax(line, format!("unknown edge parameter `{key}`")))
                            }
                        };
                        if dup {
                            return Err(syntax(line, format!("parameter `{key}` given twice")));
                        }
                    }
                    statements.push(Statement::Edge {
                        line,
                        x: x.to_string(),
                        y: y.to_string(),
                        r,
                        l,
                        c,
                    });
                }
                "wedge" => {
                    let [x, y, a, b] = args else {
                        return Err(syntax(line, "expected `wedge <x> <y> num=.. den=..`"));
                    };
                    let (Some(num), Some(den)) = (a.strip_prefix("num="), b.strip_prefix("den="))
                    else {
                        return Err(syntax(line, "expected `num=<coeffs> den=<coeffs>`"));
                    };
                    statements.push(Statement::Wedge {
                        line,
                        x: x.to_string(),
                        y: y.to_string(),
                        num: parse_coeffs(line, num)?,
                        den: parse_coeffs(line, den)?,
                    });
                }
                other => return Err(syntax(line, format!("unknown statement `{other}`"))),
            }
        }
        let terminals = terminals.ok_or_else(|| syntax(0, "missing `terminals` line"))?;
        if statements.is_empty() {
            return Err(syntax(0, "netlist has no edges"));
        }
        Ok(NetlistDocument {
            name,
            mode: mode.unwrap_or_default(),
            terminals,
            statements,
        })
    }

    pub fn to_network(&self) -> Result<Network, NetlistError> {
        let mut builder = NetworkBuilder::new(&self.terminals.0, &self.terminals.1).mode(self.mode);
        for st in &self.statements {
            match st {
                Statement::Edge { x, y, r, l, c, .. } => {
                    let zero = Rational::default();
                    let cap = match c {
                        None | Some(Capacitance::Infinite) => None,
                        Some(Capacitance::Finite(v)) => Some(v.clone()),
                    };
                    let params = EdgeParams::with_capacitance(
                        r.clone().unwrap_or_else(|| zero.clone()),
                        l.clone().unwrap_or(zero),
                        cap,
                    );
                    builder = builder.edge(x, y, params);
                }
                Statement::Wedge {
                    line,
                    x,
                    y,
                    num,
                    den,
                } => {
                    if self.mode == Mode::Strict {
                        return Err(syntax(*line, "`wedge` requires `mode raw`"));
                    }
                    let w = RationalFunction::new(
                        Polynomial::new(num.clone()),
                        Polynomial::new(den.clone()),
                    )
                    .map_err(|e| syntax(*line, e.to_string()))?;
                    builder = builder.edge(x, y, EdgeParams::raw(w));
                }
            }
        }
        Ok(builder.build()?)
    }

    /// Canonical text form; parsing it yields an equal document up to line
    /// numbers.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(out, "net {n}");
        }
        let _ = writeln!(
            out,
            "mode {}",
            match self.mode {
                Mode::Strict => "strict",
                Mode::Raw => "raw",
            }
        );
        let _ = writeln!(out, "terminals {} {}", self.terminals.0, self.terminals.1);
        for st in &self.statements {
            match st {
                Statement::Edge { x, y, r, l, c, .. } => {
                    let _ = write!(out, "edge {x} {y}");
                    if let Some(r) = r {
                        let _ = write!(out, " R={}", format_rational(r));
                    }
                    if let Some(l) = l {
                        let _ = write!(out, " L={}", format_rational(l));
                    }
                    match c {
                        Some(Capacitance::Finite(c)) => {
                            let _ = write!(out, " C={}", format_rational(c));
                        }
                        Some(Capacitance::Infinite) => out.push_str(" C=inf"),
                        None => {}
                    }
                    out.push('\n');
                }
                Statement::Wedge { x, y, num, den, .. } => {
                    let list = |v: &[Rational]| {
                        v.iter().map(format_rational).collect::<Vec<_>>().join(",")
                    };
                    let _ = writeln!(out, "wedge {x} {y} num={} den={}", list(num), list(den));
                }
            }
        }
        out
    }
}

pub fn parse_netlist(text: &str) -> Result<Network, NetlistError> {
    NetlistDocument::parse(text)?.to_network()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::NetworkError;
    use crate::exact::ratio;

    #[test]
    fn single_resistor() {
        let net = parse_netlist("terminals a0 a1\nedge a0 a1 R=1\n").unwrap();
        assert_eq!(net.vertex_count(), 2);
        assert_eq!(net.admittance(0, 1), RationalFunction::one());
    }

    #[test]
    fn empty_edge_rejected() {
        let err = parse_netlist("terminals a0 a1\nedge a0 a1\n").unwrap_err();
        assert!(matches!(
            err,
            NetlistError::Invalid(Error::Network(NetworkError::ZeroRlc(..)))
        ));
    }

    #[test]
    fn wedge_requires_raw_mode() {
        let err = parse_netlist("terminals a0 a1\nwedge a0 a1 num=0,1 den=1\n").unwrap_err();
        assert!(matches!(err, NetlistError::Syntax { line: 2, .. }));
        let net = parse_netlist("mode raw\nterminals a0 a1\nwedge a0 a1 num=0,-1 den=1\n").unwrap();
        assert!(!net.all_weights_positive());
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("terminals a0 a1\nedge a0 a1 R=x\n", 2),
            ("terminals a0 a1\nedge a0 a1 Q=1\n", 2),
            ("# c\n\nterminals a0\n", 3),
            ("terminals a0 a1\nedge a0 a1 R=1\nfoo\n", 3),
            ("terminals a0 a1\nedge a0 a1 R=1 R=2\n", 2),
            ("mode weird\nterminals a0 a1\nedge a0 a1 R=1\n", 1),
            ("terminals a0 a1\nterminals a0 a1\nedge a0 a1 R=1\n", 2),
        ];
        for (text, line) in cases {
            match NetlistDocument::parse(text) {
                Err(NetlistError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(
            NetlistDocument::parse("edge a0 a1 R=1\n"),
            Err(NetlistError::Syntax { line: 0, .. })
        ));
    }

    #[test]
    fn decimal_literals_are_exact() {
        let a = NetlistDocument::parse("terminals a b\nedge a b R=0.5 C=2.5e-1\n").unwrap();
        match &a.statements[0] {
            Statement::Edge { r, c, .. } => {
                assert_eq!(r.as_ref().unwrap(), &ratio(1, 2));
                assert_eq!(c.as_ref().unwrap(), &Capacitance::Finite(ratio(1, 4)));
            }
            _ => unreachable!(),
        }
        let net = a.to_network().unwrap();
        // λ / (0.5 λ + 4)
        assert_eq!(
            net.admittance(0, 1),
            RationalFunction::from_ints(&[0, 2], &[8, 1])
        );
    }

    #[test]
    fn comments_and_inf() {
        let doc =
            NetlistDocument::parse("net t # name\nterminals a b # terms\nedge a b L=1 C=inf\n")
                .unwrap();
        assert_eq!(doc.name.as_deref(), Some("t"));
        assert_eq!(
            doc.render(),
            "net t\nmode strict\nterminals a b\nedge a b L=1 C=inf\n"
        );
    }
}
