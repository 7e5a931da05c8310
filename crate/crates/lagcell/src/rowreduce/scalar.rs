//! Exact scalars: rationals and Gaussian rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `t^e` for any integer exponent; panics on `0^negative`.
pub fn rational_pow(t: &Rational, e: i64) -> Rational {
    if e >= 0 {
        t.pow(e as i32)
    } else {
        assert!(!t.is_zero(), "zero has no negative powers");
        t.pow(e as i32)
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

/// Shorthand constructor from integer pairs: `(re_n/re_d) + (im_n/im_d) i`.
pub fn gaussian(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
    GaussianRational { re: rat(re_n, re_d), im: rat(im_n, im_d) }
}

impl GaussianRational {
    pub fn zero() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::zero() }
    }

    pub fn one() -> Self {
        GaussianRational { re: Rational::one(), im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn neg(&self) -> Self {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "division by zero Gaussian rational");
        GaussianRational { re: &self.re / &norm, im: -(&self.im / &norm) }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// The operations the transition maps need, implemented for plain Gaussian
/// rationals (evaluation) and for jets (differentiation).
pub trait Scalar: Clone {
    fn s_add(&self, o: &Self) -> Self;
    fn s_sub(&self, o: &Self) -> Self;
    fn s_mul(&self, o: &Self) -> Self;
    fn s_neg(&self) -> Self;
    fn s_inv(&self) -> Self;
    fn s_is_zero(&self) -> bool;
}

impl Scalar for GaussianRational {
    fn s_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn s_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn s_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn s_neg(&self) -> Self {
        self.neg()
    }
    fn s_inv(&self) -> Self {
        self.inv()
    }
    fn s_is_zero(&self) -> bool {
        self.is_zero()
    }
}
