//! Deterministic serialization of results in three formats.
//!
//! * `text`: human-oriented, one line per result (`lambda=.. Z=.. class=.. P=..`).
//! * `csv`: header plus rows, '.' decimal separator, '\n' line endings.
//! * `structured`: `key=value` records, one per line for single results and
//!   one space-separated record per line for collections.
//!
//! Complex numbers use 12 significant digits; rational-function coefficients
//! are exact and ascending.

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;

use crate::exact::{format_complex, format_real, Extended, RationalFunction};
use crate::impedance::{ComparisonReport, ComplexImpedance, SweepRow, SymbolicImpedance};
use crate::solver::SingularSet;
use crate::verify::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Structured,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "structured" => Ok(Format::Structured),
            _ => Err(format!(
                "unknown format `{s}` (expected text, csv or structured)"
            )),
        }
    }
}

pub trait Render {
    fn render(&self, format: Format) -> String;
}

pub fn serialize_result<R: Render + ?Sized>(result: &R, format: Format) -> String {
    result.render(format)
}

fn ext(z: &Extended) -> String {
    z.to_string()
}

fn ext_parts(z: &Extended) -> (String, String) {
    match z {
        Extended::Finite(c) => (format_real(c.re), format_real(c.im)),
        Extended::Infinite => ("inf".into(), "inf".into()),
    }
}

fn opt_parts(z: Option<Complex64>) -> (String, String) {
    match z {
        Some(c) => (format_real(c.re), format_real(c.im)),
        None => (String::new(), String::new()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Render for ComplexImpedance {
    fn render(&self, format: Format) -> String {
        let lambda = format_complex(self.lambda);
        match format {
            Format::Text => format!(
                "lambda={lambda} Z={} class={} P={}\n",
                ext(&self.z),
                self.class,
                ext(&self.p)
            ),
            Format::Structured => format!(
                "lambda={lambda}\nZ={}\nP={}\nclass={}\n",
                ext(&self.z),
                ext(&self.p),
                self.class
            ),
            Format::Csv => {
                let (zr, zi) = ext_parts(&self.z);
                let (pr, pi) = ext_parts(&self.p);
                format!(
                    "re_lambda,im_lambda,re_Z,im_Z,re_P,im_P,class\n{},{},{zr},{zi},{pr},{pi},{}\n",
                    format_real(self.lambda.re),
                    format_real(self.lambda.im),
                    self.class
                )
            }
        }
    }
}

fn rf_line(label: &str, f: &RationalFunction) -> String {
    format!("{label} {}\n", f.coeff_record())
}

impl Render for SymbolicImpedance {
    fn render(&self, format: Format) -> String {
        let (z, p) = (&self.z, &self.p);
        match format {
            Format::Text => rf_line("Z", z) + &rf_line("P", p),
            Format::Structured => {
                let ((zn, zd), (pn, pd)) = (z.coeff_lists(), p.coeff_lists());
                format!("Z.num={zn}\nZ.den={zd}\nP.num={pn}\nP.den={pd}\n")
            }
            Format::Csv => {
                let ((zn, zd), (pn, pd)) = (z.coeff_lists(), p.coeff_lists());
                format!(
                    "quantity,num,den\nZ,{},{}\nP,{},{}\n",
                    csv_field(&zn),
                    csv_field(&zd),
                    csv_field(&pn),
                    csv_field(&pd)
                )
            }
        }
    }
}

impl Render for [SweepRow] {
    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        if format == Format::Csv {
            out.push_str("omega,re_Z,im_Z,class\n");
        }
        for row in self {
            let omega = format_real(row.omega);
            match (&row.result, format) {
                (Ok(r), Format::Csv) => {
                    let (zr, zi) = ext_parts(&r.z);
                    let _ = writeln!(out, "{omega},{zr},{zi},{}", r.class);
                }
                (Err(_), Format::Csv) => {
                    let _ = writeln!(out, "{omega},,,error");
                }
                (Ok(r), _) => {
                    let _ = writeln!(
                        out,
                        "omega={omega} Z={} class={} P={}",
                        ext(&r.z),
                        r.class,
                        ext(&r.p)
                    );
                }
                (Err(e), _) => {
                    let _ = writeln!(out, "omega={omega} class=error message={e}");
                }
            }
        }
        out
    }
}

impl Render for Vec<SweepRow> {
    fn render(&self, format: Format) -> String {
        self.as_slice().render(format)
    }
}

impl Render for SingularSet {
    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        if format == Format::Csv {
            out.push_str("re_lambda,im_lambda,multiplicity,physical\n");
        }
        match self {
            SingularSet::IdenticallyZero => match format {
                Format::Csv => out.push_str("all,all,,\n"),
                _ => out.push_str("determinant=identically-zero\n"),
            },
            SingularSet::Finite(list) => {
                if list.is_empty() && format != Format::Csv {
                    out.push_str("determinant=no-zeros\n");
                }
                for s in list {
                    match format {
                        Format::Csv => {
                            let _ = writeln!(
                                out,
                                "{},{},{},{}",
                                format_real(s.lambda.re),
                                format_real(s.lambda.im),
                                s.multiplicity,
                                yes_no(s.physical)
                            );
                        }
                        _ => {
                            let _ = writeln!(
                                out,
                                "lambda={} multiplicity={} physical={}",
                                format_complex(s.lambda),
                                s.multiplicity,
                                yes_no(s.physical)
                            );
                        }
                    }
                }
            }
        }
        out
    }
}

impl Render for ComparisonReport {
    fn render(&self, format: Format) -> String {
        let lambda = format_complex(self.lambda);
        let z2 = self
            .z2
            .map(format_complex)
            .unwrap_or_else(|| "undefined".into());
        let (num, den) = match &self.z2_symbolic {
            Some(f) => f.coeff_lists(),
            None => ("undefined".into(), "undefined".into()),
        };
        match format {
            Format::Text => format!(
                "lambda={lambda} Z1={} Z2={z2} class={} agree={} note={}\nZ2 num={num} den={den}\n",
                ext(&self.z1),
                self.class,
                yes_no(self.agree),
                self.note.as_str()
            ),
            Format::Structured => format!(
                "lambda={lambda}\nZ1={}\nZ2={z2}\nZ2.num={num}\nZ2.den={den}\nclass={}\nagree={}\nnote={}\n",
                ext(&self.z1),
                self.class,
                yes_no(self.agree),
                self.note.as_str()
            ),
            Format::Csv => {
                let (z1r, z1i) = ext_parts(&self.z1);
                let (z2r, z2i) = opt_parts(self.z2);
                format!(
                    "re_lambda,im_lambda,re_Z1,im_Z1,re_Z2,im_Z2,class,agree,note\n{},{},{z1r},{z1i},{z2r},{z2i},{},{},{}\n",
                    format_real(self.lambda.re),
                    format_real(self.lambda.im),
                    self.class,
                    yes_no(self.agree),
                    self.note.as_str()
                )
            }
        }
    }
}

impl Render for [CheckReport] {
    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        if format == Format::Csv {
            out.push_str("check,instance,status,seed,witness\n");
        }
        for r in self {
            match format {
                Format::Csv => {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        csv_field(&r.check),
                        csv_field(&r.instance),
                        r.status,
                        r.seed,
                        csv_field(&r.witness)
                    );
                }
                Format::Structured => {
                    let _ = writeln!(
                        out,
                        "check={} instance={} status={} seed={} witness={}",
                        r.check, r.instance, r.status, r.seed, r.witness
                    );
                }
                Format::Text => {
                    let _ = write!(
                        out,
                        "{:<7} {} [{}]",
                        r.status.as_str().to_uppercase(),
                        r.check,
                        r.instance
                    );
                    if !r.witness.is_empty() {
                        let _ = write!(out, ": {}", r.witness);
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

impl Render for Vec<CheckReport> {
    fn render(&self, format: Format) -> String {
        self.as_slice().render(format)
    }
}
