//! Simultaneous-iteration polynomial root finding.
//!
//! Exact polynomials are first split into square-free factors, so the
//! iteration only ever sees simple roots; multiplicities come from the
//! factorization.

use num_complex::Complex64;

use super::poly::Polynomial;
use crate::error::ExactError;

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 500;

// Offset of the initial configuration; breaks the symmetry of real or
// purely imaginary coefficient patterns.
const ANGLE_OFFSET: f64 = 0.4;
const POLISH_SWEEPS: usize = 3;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let r = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * r + c.norm();
    }
    (p, dp, scale)
}

/// All complex roots of `Σ coeffs[k] zᵏ` by Aberth–Ehrlich iteration.
///
/// Each returned root satisfies `|p(z)| ≤ tol · Σ|cₖ||z|ᵏ`. Leading zero
/// coefficients are trimmed; trailing (constant-side) zeros yield exact
/// zero roots.
pub fn roots_of_coeffs(
    coeffs: &[Complex64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<Complex64>, ExactError> {
    let end = coeffs
        .iter()
        .rposition(|c| c.norm() != 0.0)
        .ok_or(ExactError::ConstantPolynomial)?;
    let start = coeffs.iter().position(|c| c.norm() != 0.0).unwrap_or(0);
    if end == 0 {
        return Err(ExactError::ConstantPolynomial);
    }
    let mut roots = vec![Complex64::new(0.0, 0.0); start];
    let core = &coeffs[start..=end];
    let n = core.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(-core[0] / core[1]);
        return Ok(roots);
    }

    let lead = core[n];
    let radius = 1.0
        + core[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + ANGLE_OFFSET;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut done = vec![false; n];
    let mut polish = 0;
    let mut iterations = 0;
    while iterations < max_iter {
        iterations += 1;
        for i in 0..n {
            if done[i] && polish == 0 {
                continue;
            }
            let (p, dp, scale) = horner(core, z[i]);
            if p.norm() == 0.0 {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
            }
            let (p, _, scale_new) = horner(core, z[i]);
            done[i] = p.norm() <= tol * scale_new.max(scale * f64::EPSILON);
        }
        if done.iter().all(|&d| d) {
            polish += 1;
            if polish > POLISH_SWEEPS {
                break;
            }
        }
    }

    let residual = z
        .iter()
        .map(|&zi| {
            let (p, _, scale) = horner(core, zi);
            if scale == 0.0 {
                0.0
            } else {
                p.norm() / scale
            }
        })
        .fold(0.0, f64::max);
    if residual > tol {
        return Err(ExactError::NonConvergence {
            best: z,
            residual,
            iterations,
        });
    }
    roots.extend(z);
    Ok(roots)
}

/// All complex roots of an exact polynomial, repeated by multiplicity and
/// sorted by real then imaginary part.
pub fn poly_roots(p: &Polynomial, tol: f64, max_iter: usize) -> Result<Vec<Complex64>, ExactError> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(ExactError::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_factors() {
        let rs = roots_of_coeffs(&factor.to_complex_coeffs(), tol, max_iter)?;
        for r in rs {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}
