//! Complex values, the scale-relative zero test, and ℂ ∪ {∞}.

use std::fmt;

pub use num_complex::Complex64;

/// Relative tolerance below which a complex quantity is treated as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-10;

/// `|x| ≤ tol × scale`. The scale is supplied by the caller, typically the
/// largest entry of the matrix the value came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroTest {
    pub tol: f64,
    pub scale: f64,
}

impl ZeroTest {
    pub fn new(tol: f64, scale: f64) -> Self {
        ZeroTest { tol, scale }
    }

    /// Exact zero test (used by the symbolic field).
    pub fn exact() -> Self {
        ZeroTest {
            tol: 0.0,
            scale: 0.0,
        }
    }

    pub fn is_zero(&self, magnitude: f64) -> bool {
        magnitude <= self.tol * self.scale
    }
}

/// A complex number or the infinity marker used for P = ∞ (and for Z when
/// the effective admittance vanishes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extended {
    Finite(Complex64),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            Extended::Finite(z) => Some(*z),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(z) => write!(f, "{}", format_complex(*z)),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

/// Rounds to 12 significant digits and prints the shortest decimal that
/// round-trips, in exponent form outside [1e-4, 1e15); `-0` is printed as `0`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        return "0".into();
    }
    if (1e-4..1e15).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// `a+bi` / `a-bi` with 12 significant digits per component.
pub fn format_complex(z: Complex64) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(format_complex(Complex64::new(0.0, -0.0)), "0+0i");
        assert_eq!(format_complex(Complex64::new(0.5, -0.5)), "0.5-0.5i");
        assert_eq!(format_real(-2.0 / 3.0), "-0.666666666667");
        assert_eq!(format_real(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(format_real(1e-20), "1e-20");
        assert_eq!(format_real(-2.5e17), "-2.5e17");
        assert_eq!(Extended::Infinite.to_string(), "inf");
    }

    #[test]
    fn zero_test_is_scale_relative() {
        let zt = ZeroTest::new(1e-10, 1e6);
        assert!(zt.is_zero(1e-5));
        assert!(!zt.is_zero(1e-3));
        assert!(ZeroTest::exact().is_zero(0.0));
        assert!(!ZeroTest::exact().is_zero(1e-300));
    }
}
