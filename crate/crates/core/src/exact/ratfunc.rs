//! The ordered field R(λ) of rational functions with rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::complex::DEFAULT_ZERO_TOL;
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::ExactError;

/// `num / den` in lowest terms with a monic denominator, so each element of
/// R(λ) has exactly one representation. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Cancels the gcd and makes the denominator monic.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd_nonzero(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Ok(Self::monic_den(num, den))
    }

    fn monic_den(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if num_traits::One::is_one(&lc) {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::from_ints(&[c]))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// λ itself.
    pub fn lambda() -> Self {
        Self::from_poly(Polynomial::lambda())
    }

    /// Convenience constructor from ascending integer coefficients; panics on
    /// a zero denominator.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Self {
        Self::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
            .expect("nonzero denominator")
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    /// Sign in the order of R(λ): the sign of lead(num)/lead(den). The
    /// denominator is monic, so this is the sign of lead(num).
    pub fn signum(&self) -> Ordering {
        self.num.leading_sign().cmp(&0)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// deg(num) + deg(den); used to prefer small pivots.
    pub fn total_degree(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn square(&self) -> Self {
        RationalFunction {
            num: &self.num * &self.num,
            den: &self.den * &self.den,
        }
    }

    /// num(λ)/den(λ); a denominator that vanishes to within the relative
    /// zero tolerance is a pole.
    pub fn eval(&self, lambda: Complex64) -> Result<Complex64, ExactError> {
        let d = self.den.eval_complex(lambda);
        if d.norm() <= DEFAULT_ZERO_TOL * self.den.eval_scale(lambda) {
            return Err(ExactError::Pole(lambda));
        }
        Ok(self.num.eval_complex(lambda) / d)
    }

    /// The same function written as a ratio of integer polynomials whose
    /// coefficients have no common factor, with positive leading
    /// denominator coefficient.
    pub fn primitive_parts(&self) -> (Polynomial, Polynomial) {
        let all = self.num.coeffs().iter().chain(self.den.coeffs());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |p: &Polynomial| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        };
        let (n, d) = (scaled(&self.num), scaled(&self.den));
        let g = n.iter().chain(&d).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if g.is_zero() { BigInt::one() } else { g };
        let poly = |v: Vec<BigInt>| {
            Polynomial::new(
                v.into_iter()
                    .map(|c| Rational::from_integer(c / &g))
                    .collect(),
            )
        };
        (poly(n), poly(d))
    }

    /// Ascending coefficient lists of [`Self::primitive_parts`].
    pub fn coeff_lists(&self) -> (String, String) {
        let (n, d) = self.primitive_parts();
        (n.coeff_list(), d.coeff_list())
    }

    /// `num=c0,c1,.. den=c0,c1,..` with exact integer coefficients.
    pub fn coeff_record(&self) -> String {
        let (n, d) = self.coeff_lists();
        format!("num={n} den={d}")
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// f ≻ g iff f − g has leading-coefficient ratio > 0. With positive
/// leading denominator coefficients that is the sign of n_f d_g − n_g d_f.
impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return (&self.num - &other.num).leading_sign().cmp(&0);
        }
        (&(&self.num * &other.den) - &(&other.num * &self.den))
            .leading_sign()
            .cmp(&0)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        // Henrici: only the shared factor of the denominators can cancel.
        let g = Polynomial::gcd_nonzero(&self.den, &rhs.den);
        if g.is_constant() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RationalFunction::zero();
            }
            return RationalFunction {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let ad = self.den.exact_div(&g);
        let bd = rhs.den.exact_div(&g);
        let t = &(&self.num * &bd) + &(&rhs.num * &ad);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let g2 = Polynomial::gcd_nonzero(&t, &g);
        let den = &ad * &rhs.den;
        if g2.is_constant() {
            RationalFunction { num: t, den }
        } else {
            RationalFunction {
                num: t.exact_div(&g2),
                den: den.exact_div(&g2),
            }
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel so the product is already in lowest terms
        let g1 = Polynomial::gcd_nonzero(&self.num, &rhs.den);
        let g2 = Polynomial::gcd_nonzero(&rhs.num, &self.den);
        let (an, bd) = if g1.is_constant() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (bn, ad) = if g2.is_constant() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        RationalFunction::monic_den(&an * &bn, &ad * &bd)
    }
}

/// Panics on division by zero, like integer division; use
/// [`RationalFunction::checked_div`] for a fallible version.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}
