//! Effective impedance and admittance in both models, energy forms, the
//! comparison between them, and frequency sweeps.

use num_complex::Complex64;

use crate::error::{Error, ExactError, Result};
use crate::exact::{Extended, Field, Polynomial, RationalFunction, ZeroTest};
use crate::network::{Network, VertexFunction, WeightedGraph};
use crate::solver::{self, DirichletOutcome, SolutionClass, SymbolicSolution};

/// Default relative tolerance for `compare`.
pub const DEFAULT_COMPARE_TOL: f64 = 1e-8;

/// Impedance at a fixed λ. `None` ⇒ Z = 0, P = ∞. A vanishing admittance
/// on a solvable problem gives Z = ∞ with `zero_admittance` set.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImpedance {
    pub lambda: Complex64,
    pub z: Extended,
    pub p: Extended,
    pub class: SolutionClass,
    pub zero_admittance: bool,
    pub outcome: DirichletOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicImpedance {
    pub z: RationalFunction,
    pub p: RationalFunction,
    pub solution: SymbolicSolution,
}

/// P = Σ_{x∼a0} v(x) ρ_{x a0} over any field instance.
pub fn admittance_from<F: Field>(
    weights: &WeightedGraph<F>,
    a0: usize,
    v: &VertexFunction<F>,
) -> F {
    weights
        .neighbors(a0)
        .iter()
        .fold(F::zero(), |acc, (x, w)| acc + v[*x].clone() * w.clone())
}

fn admittance_scale(
    weights: &WeightedGraph<Complex64>,
    a0: usize,
    v: &VertexFunction<Complex64>,
) -> f64 {
    weights
        .neighbors(a0)
        .iter()
        .map(|(x, w)| v[*x].norm() * w.norm())
        .sum()
}

/// Effective impedance over ℂ at λ; `tol` is the relative rank tolerance.
pub fn effective_complex(net: &Network, lambda: Complex64, tol: f64) -> Result<ComplexImpedance> {
    let weights = net.complex_weights(lambda)?;
    let outcome = solver::solve_complex(net, lambda, tol)?;
    let Some(v) = outcome.particular.as_ref() else {
        return Ok(ComplexImpedance {
            lambda,
            z: Extended::Finite(Complex64::new(0.0, 0.0)),
            p: Extended::Infinite,
            class: SolutionClass::None,
            zero_admittance: false,
            outcome,
        });
    };
    let p = admittance_from(&weights, net.a0(), v);
    let zt = ZeroTest::new(tol, admittance_scale(&weights, net.a0(), v));
    let zero_admittance = p.is_zero_under(&zt);
    let z = if zero_admittance {
        Extended::Infinite
    } else {
        Extended::Finite(p.inv())
    };
    Ok(ComplexImpedance {
        lambda,
        z,
        p: Extended::Finite(p),
        class: outcome.class,
        zero_admittance,
        outcome,
    })
}

/// Effective impedance over R(λ); requires every edge weight ≻ 0.
pub fn effective_symbolic(net: &Network) -> Result<SymbolicImpedance> {
    let solution = solver::solve_symbolic(net)?;
    let p = admittance_from(net.symbolic_weights(), net.a0(), &solution.values);
    let z = p.recip().map_err(|_| Error::ZeroAdmittance)?;
    Ok(SymbolicImpedance { z, p, solution })
}

/// ½ Σ_{x,y} |∇_xy v|² ρ_xy(λ), summed once per unordered edge.
pub fn energy_complex_weighted(
    weights: &WeightedGraph<Complex64>,
    v: &VertexFunction<Complex64>,
) -> Complex64 {
    weights
        .edges()
        .map(|(x, y, w)| (v[y] - v[x]).norm_sqr() * w)
        .sum()
}

pub fn energy_complex(
    net: &Network,
    v: &VertexFunction<Complex64>,
    lambda: Complex64,
) -> Result<Complex64> {
    Ok(energy_complex_weighted(&net.complex_weights(lambda)?, v))
}

/// ½ Σ_{x,y} (∇_xy v)² ρ_xy, exact. Terms sharing a denominator are
/// combined before the (gcd-reducing) general additions.
pub fn energy_symbolic(net: &Network, v: &VertexFunction<RationalFunction>) -> RationalFunction {
    let mut groups: Vec<(Polynomial, Polynomial)> = Vec::new();
    for (x, y, w) in net.symbolic_weights().edges() {
        let term = &(&v[y] - &v[x]).square() * w;
        match groups.iter_mut().find(|(d, _)| d == term.den()) {
            Some((_, n)) => *n = &*n + term.num(),
            None => groups.push((term.den().clone(), term.num().clone())),
        }
    }
    groups
        .into_iter()
        .map(|(d, n)| RationalFunction::new(n, d).expect("nonzero denominator"))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonNote {
    Generic,
    SingularMultiple,
    SingularNone,
    Pole,
    /// Some edge weight is not ≻ 0, so Z⁽²⁾ is undefined.
    SymbolicUndefined,
}

impl ComparisonNote {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComparisonNote::Generic => "generic",
            ComparisonNote::SingularMultiple => "singular-multiple",
            ComparisonNote::SingularNone => "singular-none",
            ComparisonNote::Pole => "pole",
            ComparisonNote::SymbolicUndefined => "symbolic-undefined",
        }
    }
}

/// Z⁽¹⁾(λ) against Z⁽²⁾ evaluated at λ. Agreement is evidence only; at
/// singular λ nothing is asserted.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub lambda: Complex64,
    pub z1: Extended,
    /// `None` when Z⁽²⁾ has a pole at λ or is undefined.
    pub z2: Option<Complex64>,
    pub z2_symbolic: Option<RationalFunction>,
    pub class: SolutionClass,
    pub agree: bool,
    pub note: ComparisonNote,
}

pub fn compare(
    net: &Network,
    lambda: Complex64,
    rank_tol: f64,
    tol: f64,
) -> Result<ComparisonReport> {
    let z2_symbolic = match effective_symbolic(net) {
        Ok(s) => Some(s.z),
        Err(Error::NonPositiveWeight(..)) => None,
        Err(e) => return Err(e),
    };
    compare_with(net, z2_symbolic, lambda, rank_tol, tol)
}

/// [`compare`] with Z⁽²⁾ already computed (`None` when undefined), for
/// repeated comparisons on one network.
pub fn compare_with(
    net: &Network,
    z2_symbolic: Option<RationalFunction>,
    lambda: Complex64,
    rank_tol: f64,
    tol: f64,
) -> Result<ComparisonReport> {
    let z1 = effective_complex(net, lambda, rank_tol)?;
    let z2 = match z2_symbolic.as_ref().map(|z| z.eval(lambda)) {
        Some(Ok(z)) => Some(z),
        Some(Err(ExactError::Pole(_))) | None => None,
        Some(Err(e)) => return Err(e.into()),
    };
    let agree = match (z1.z, z2) {
        (Extended::Finite(a), Some(b)) => (a - b).norm() <= tol * b.norm().max(1.0),
        _ => false,
    };
    let note = match (z2, z1.class) {
        _ if z2_symbolic.is_none() => ComparisonNote::SymbolicUndefined,
        (None, _) => ComparisonNote::Pole,
        (_, SolutionClass::Unique) => ComparisonNote::Generic,
        (_, SolutionClass::Multiple) => ComparisonNote::SingularMultiple,
        (_, SolutionClass::None) => ComparisonNote::SingularNone,
    };
    Ok(ComparisonReport {
        lambda,
        z1: z1.z,
        z2,
        z2_symbolic,
        class: z1.class,
        agree,
        note,
    })
}

/// One sweep row; per-point failures (e.g. a pole) are kept as row status.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    pub result: Result<ComplexImpedance>,
}

/// Frequency grid from `omega_min` to `omega_max` inclusive, uniform in ω or
/// in log ω.
pub fn omega_grid(omega_min: f64, omega_max: f64, points: usize, log: bool) -> Result<Vec<f64>> {
    if !(omega_min > 0.0 && omega_min <= omega_max && omega_max.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "need 0 < omega_min <= omega_max, got {omega_min}..{omega_max}"
        )));
    }
    if points == 0 {
        return Err(Error::InvalidArgument("points must be at least 1".into()));
    }
    if points == 1 {
        return Ok(vec![omega_min]);
    }
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|k| {
            if k == points - 1 {
                omega_max
            } else if log {
                (omega_min.ln() + (omega_max.ln() - omega_min.ln()) * k as f64 / last).exp()
            } else {
                omega_min + (omega_max - omega_min) * k as f64 / last
            }
        })
        .collect())
}

pub fn sweep(
    net: &Network,
    omega_min: f64,
    omega_max: f64,
    points: usize,
    log: bool,
    rank_tol: f64,
) -> Result<Vec<SweepRow>> {
    Ok(omega_grid(omega_min, omega_max, points, log)?
        .into_iter()
        .map(|omega| SweepRow {
            omega,
            result: effective_complex(net, Complex64::new(0.0, omega), rank_tol),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{EdgeParams, NetworkBuilder};

    fn series() -> Network {
        NetworkBuilder::new("a0", "a1")
            .edge("a0", "x", EdgeParams::resistor(1))
            .edge("x", "a1", EdgeParams::resistor(1))
            .build()
            .unwrap()
    }

    #[test]
    fn series_resistors() {
        let r = effective_complex(&series(), Complex64::new(0.0, 3.0), 1e-10).unwrap();
        assert_eq!(r.class, SolutionClass::Unique);
        assert!((r.z.finite().unwrap() - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        let s = effective_symbolic(&series()).unwrap();
        assert_eq!(s.z, RationalFunction::from_int(2));
        let v = &r.outcome.particular.unwrap();
        let e = energy_complex(&series(), v, Complex64::new(0.0, 3.0)).unwrap();
        assert!((e - Complex64::new(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn constant_energy_is_zero() {
        let net = series();
        let v = VertexFunction::constant(3, RationalFunction::from_int(4));
        assert!(energy_symbolic(&net, &v).is_zero());
        let vc = VertexFunction::constant(3, Complex64::new(1.0, 2.0));
        assert_eq!(
            energy_complex(&net, &vc, Complex64::new(0.0, 1.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(omega_grid(1.0, 2.0, 3, false).unwrap(), vec![1.0, 1.5, 2.0]);
        let g = omega_grid(1.0, 100.0, 3, true).unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(omega_grid(2.0, 2.0, 1, false).unwrap(), vec![2.0]);
        assert!(omega_grid(0.0, 1.0, 3, false).is_err());
        assert!(omega_grid(2.0, 1.0, 3, false).is_err());
        assert!(omega_grid(1.0, 2.0, 0, false).is_err());
    }

    #[test]
    fn sweep_keeps_pole_rows() {
        // a lone coil has a pole only at λ = 0, never on the grid; use a raw
        // weight with a pole at λ = 2i to exercise row status
        let w = RationalFunction::from_ints(&[1], &[4, 0, 1]);
        let net = NetworkBuilder::new("a0", "a1")
            .mode(crate::network::Mode::Raw)
            .edge("a0", "a1", EdgeParams::raw(w))
            .build()
            .unwrap();
        let rows = sweep(&net, 1.0, 3.0, 3, false, 1e-10).unwrap();
        assert!(rows[0].result.is_ok());
        assert!(matches!(
            rows[1].result,
            Err(Error::Exact(ExactError::Pole(_)))
        ));
        assert!(rows[2].result.is_ok());
    }
}
