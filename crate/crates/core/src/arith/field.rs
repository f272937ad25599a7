//! Coefficient fields: the rationals and their quadratic extensions.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::poly::Poly;

/// Exact rational number. `BigRational` keeps the fraction reduced with a
/// positive denominator, which is exactly the normal form we need.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// A field of characteristic zero usable as a polynomial coefficient domain.
///
/// Arithmetic is by reference; every value is immutable once built.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// Monic gcd of two polynomials over this field. The default is the
    /// Euclidean algorithm; `Rat` overrides it with an integer
    /// pseudo-remainder sequence plus a modular coprimality pretest.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        super::poly::gcd_monic_euclid(a, b)
    }

    /// Splits off a leading minus sign for term-by-term display.
    fn display_sign_abs(&self) -> (bool, String) {
        (false, format!("{self}"))
    }

    /// Total order used only to stabilize canonical output ordering; the
    /// default compares display strings.
    fn cmp_coeff(&self, other: &Self) -> std::cmp::Ordering {
        format!("{self}").cmp(&format!("{other}"))
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        rat_int(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        super::zgcd::gcd_rat(a, b)
    }

    fn display_sign_abs(&self) -> (bool, String) {
        if self.is_negative() {
            (true, format!("{}", -self))
        } else {
            (false, format!("{self}"))
        }
    }

    fn cmp_coeff(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp(other)
    }
}

/// Checks whether a rational is a square in Q.
pub fn rat_is_square(x: &Rat) -> bool {
    if x.is_negative() {
        return false;
    }
    int_is_square(x.numer()) && int_is_square(x.denom())
}

fn int_is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}
