//! Dense univariate polynomials in λ over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, to_f64, Rational};
use crate::error::ExactError;

/// Coefficients in ascending powers of λ. The leading coefficient is never
/// zero; the zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("polynomial division by zero");
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let inv = dlead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let q = top * &inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(ddeg);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient when `divisor` is known to divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd via the Euclidean remainder sequence.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self, ExactError> {
        if a.is_zero() && b.is_zero() {
            return Err(ExactError::GcdOfZeros);
        }
        Ok(Self::gcd_nonzero(a, b))
    }

    /// Monic gcd of two polynomials, not both zero. Runs a primitive
    /// pseudo-remainder sequence over ℤ, which keeps coefficient growth in
    /// check where Euclid over ℚ does not.
    pub(crate) fn gcd_nonzero(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() || coprime_mod_p(a, b) {
            return Self::one();
        }
        let (mut r0, mut r1) = (primitive_integer(a), primitive_integer(b));
        if r0.len() < r1.len() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_empty() {
            let r = primitive_part(pseudo_rem(&r0, &r1));
            r0 = r1;
            r1 = r;
        }
        Polynomial::new(r0.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Monic gcd by the Euclidean algorithm over ℚ.
    #[cfg(test)]
    pub(crate) fn gcd_euclid(a: &Self, b: &Self) -> Self {
        let (mut r0, mut r1) = (a.monic(), b.monic());
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r.monic();
        }
        r0.monic()
    }

    /// Square-free decomposition (Yun): `(factor, multiplicity)` pairs with
    /// monic, pairwise coprime, square-free factors whose product of powers
    /// equals `self` up to a constant.
    pub fn squarefree_factors(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd_nonzero(&f, &df);
        let mut b = f.exact_div(&a0);
        let mut d = &df.exact_div(&a0) - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let g = if d.is_zero() {
                b.monic()
            } else {
                Self::gcd_nonzero(&b, &d)
            };
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g);
            d = &d.exact_div(&g) - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    /// Σ |cᵢ| |z|ⁱ, the natural magnitude against which `eval_complex(z)` is
    /// judged to be zero.
    pub fn eval_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + to_f64(c).abs())
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(to_f64(c), 0.0))
            .collect()
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    /// Ascending coefficients in exact text form, comma separated; the zero
    /// polynomial renders as `0`.
    pub fn coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let s = format_rational(&mag);
                if i > 0 && s.contains('/') {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "{s}")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        // convolve over ℤ after clearing denominators, then reduce once per coefficient
        let ((a, da), (b, db)) = (integer_form(self), integer_form(rhs));
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        Polynomial::new(
            prod.into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Integer coefficients and a common denominator: p = (Σ cᵢλⁱ) / d.
fn integer_form(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let den = p.coeffs.iter().fold(BigInt::one(), |acc, c| {
        if c.denom().is_one() {
            acc
        } else {
            acc.lcm(c.denom())
        }
    });
    let coeffs = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (coeffs, den)
}

// 2^61 − 1
const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn int_mod(n: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = n.mod_floor(&m);
    r.try_into().expect("reduced below the modulus")
}

/// Image in GF(p)[x]; `None` if some denominator or the leading coefficient
/// vanishes mod p.
fn reduce_mod_p(p: &Polynomial) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        let d = int_mod(c.denom());
        if d == 0 {
            return None;
        }
        out.push(mul_mod(int_mod(c.numer()), pow_mod(d, MODULUS - 2)));
    }
    (out.last().copied()? != 0).then_some(out)
}

/// Degree of gcd in GF(p)[x] by Euclid.
fn gcd_degree_mod_p(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().expect("nonempty"), MODULUS - 2);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().expect("nonempty"), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let t = mul_mod(f, bc);
                a[i + shift] = (a[i + shift] + MODULUS - t) % MODULUS;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True only if `a` and `b` are certainly coprime over ℚ: their images mod a
/// prime that keeps both degrees are coprime.
fn coprime_mod_p(a: &Polynomial, b: &Polynomial) -> bool {
    match (reduce_mod_p(a), reduce_mod_p(b)) {
        (Some(x), Some(y)) => gcd_degree_mod_p(x, y) == 0,
        _ => false,
    }
}

/// Integer multiple of `p` with coprime coefficients.
fn primitive_integer(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive_part(
        p.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect(),
    )
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// lc(b)^k · a mod b over ℤ, trimmed; `b` must be nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().expect("nonempty").clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = p(&[3, 0, -2]);
        assert_eq!(&q + &Polynomial::zero(), q);
    }

    #[test]
    fn convolution_example() {
        // (3λ²+1)(λ²+2) = 3λ⁴+7λ²+2
        assert_eq!(&p(&[1, 0, 3]) * &p(&[2, 0, 1]), p(&[2, 0, 7, 0, 3]));
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert!((&p(&[1, 1]) - &p(&[1, 1])).is_zero());
    }

    #[test]
    fn prs_gcd_matches_euclid() {
        let mut seed = 17u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..200 {
            let mut q =
                |n: usize| Polynomial::from_ints(&(0..n).map(|_| next()).collect::<Vec<_>>());
            let common = q(3);
            let a = &common * &q(4);
            let b = &common * &q(3);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            assert_eq!(
                Polynomial::gcd_nonzero(&a, &b),
                Polynomial::gcd_euclid(&a, &b),
                "{a} / {b}"
            );
        }
    }

    #[test]
    fn gcd_examples() {
        let q = p(&[2, 4]);
        assert_eq!(Polynomial::gcd(&q, &Polynomial::zero()).unwrap(), q.monic());
        assert_eq!(
            Polynomial::gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(
            Polynomial::gcd(&p(&[1, 0, 1]), &p(&[1, 1])).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            Polynomial::gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(ExactError::GcdOfZeros)
        );
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(
            q,
            Polynomial::new(vec![Rational::zero(), super::super::rational::ratio(1, 2)])
        );
        assert_eq!(r, Polynomial::one());
    }

    #[test]
    fn squarefree() {
        // (λ+1)²(λ²+1)²λ
        let f = &(&p(&[1, 1]) * &p(&[1, 1])) * &(&(&p(&[1, 0, 1]) * &p(&[1, 0, 1])) * &p(&[0, 1]));
        let mut parts = f.squarefree_factors();
        parts.sort_by_key(|(_, m)| *m);
        assert_eq!(
            parts,
            vec![(p(&[0, 1]), 1), (&p(&[1, 1]) * &p(&[1, 0, 1]), 2)]
        );
        let cube = &(&p(&[-2, 1]) * &p(&[-2, 1])) * &p(&[-2, 1]);
        assert_eq!(cube.squarefree_factors(), vec![(p(&[-2, 1]), 3)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "λ^2 - λ + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-λ");
        assert_eq!(p(&[1, 3, 1, 1]).coeff_list(), "1,3,1,1");
    }

    #[test]
    fn complex_eval() {
        let z = p(&[1, 0, 1]).eval_complex(Complex64::new(0.0, 1.0));
        assert!(z.norm() < 1e-15);
    }
}
