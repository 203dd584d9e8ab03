//! Exact arithmetic over Q and R(λ), complex evaluation, and root finding.

pub mod complex;
pub mod field;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod roots;

pub use complex::{format_complex, format_real, Complex64, Extended, ZeroTest, DEFAULT_ZERO_TOL};
pub use field::Field;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use roots::{poly_roots, roots_of_coeffs, DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
