//! The computational-field contract shared by the complex and symbolic
//! solvers.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::complex::ZeroTest;
use super::ratfunc::RationalFunction;

/// Field operations plus the zero test used for rank decisions.
///
/// The symbolic instance ([`RationalFunction`]) is exact and ignores the
/// [`ZeroTest`]; the complex instance treats `|x| ≤ tol × scale` as zero.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_exact_zero(&self) -> bool;
    /// Contribution to a matrix scale; meaningless for exact fields.
    fn magnitude(&self) -> f64;
    fn is_zero_under(&self, zt: &ZeroTest) -> bool;
    /// Preference among candidate pivots (larger is better), `None` when the
    /// entry counts as zero.
    fn pivot_rank(&self, zt: &ZeroTest) -> Option<f64>;
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_exact_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_zero_under(&self, zt: &ZeroTest) -> bool {
        zt.is_zero(self.norm())
    }
    fn pivot_rank(&self, zt: &ZeroTest) -> Option<f64> {
        let m = self.norm();
        (!zt.is_zero(m)).then_some(m)
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
    fn is_zero_under(&self, _zt: &ZeroTest) -> bool {
        self.is_zero()
    }
    fn pivot_rank(&self, _zt: &ZeroTest) -> Option<f64> {
        (!self.is_zero()).then(|| -(self.total_degree() as f64))
    }
}
