//! The quadratic extension Q(θ) where θ satisfies θ² + pθ + r = 0.

use std::fmt;
use std::sync::Arc;

use super::field::{rat_is_square, Field, Rat};

/// Minimal polynomial data for the generator: θ² + p·θ + r = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticTag {
    pub p: Rat,
    pub r: Rat,
}

impl QuadraticTag {
    /// Creates the extension defined by x² + p·x + r, which must be
    /// irreducible over Q (discriminant not a square).
    pub fn new(p: Rat, r: Rat) -> Arc<Self> {
        let disc = &(&p * &p) - &(Rat::from_i64(4) * &r);
        assert!(
            !rat_is_square(&disc),
            "x^2 + ({p})x + ({r}) is reducible over Q"
        );
        Arc::new(QuadraticTag { p, r })
    }
}

/// Element a + b·θ of Q(θ). A `None` tag means the element is rational
/// (b must then be zero); rational elements combine with elements of any
/// concrete extension.
#[derive(Clone)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub tag: Option<Arc<QuadraticTag>>,
}

impl QuadExt {
    pub fn from_rat(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero(), tag: None }
    }

    /// The generator θ of the given extension.
    pub fn theta(tag: &Arc<QuadraticTag>) -> Self {
        QuadExt { a: Rat::zero(), b: Rat::one(), tag: Some(tag.clone()) }
    }

    pub fn new(a: Rat, b: Rat, tag: &Arc<QuadraticTag>) -> Self {
        let tag = if Field::is_zero(&b) { None } else { Some(tag.clone()) };
        QuadExt { a, b, tag }
    }

    pub fn is_rational(&self) -> bool {
        Field::is_zero(&self.b)
    }

    /// Galois conjugate: θ ↦ −p − θ.
    pub fn conj(&self) -> Self {
        match &self.tag {
            None => self.clone(),
            Some(t) => QuadExt {
                a: &self.a - &(&self.b * &t.p),
                b: (&self.b).neg(),
                tag: self.tag.clone(),
            },
        }
    }

    /// Trace a + conj(a), always rational.
    pub fn trace(&self) -> Rat {
        let s = self.add(&self.conj());
        debug_assert!(Field::is_zero(&s.b));
        s.a
    }

    /// Norm a · conj(a), always rational.
    pub fn norm(&self) -> Rat {
        let p = self.mul(&self.conj());
        debug_assert!(Field::is_zero(&p.b));
        p.a
    }

    fn unify<'s>(&'s self, rhs: &'s QuadExt) -> Option<&'s Arc<QuadraticTag>> {
        match (&self.tag, &rhs.tag) {
            (None, None) => None,
            (Some(t), None) => Some(t),
            (None, Some(t)) => Some(t),
            (Some(t), Some(u)) => {
                assert!(
                    Arc::ptr_eq(t, u) || **t == **u,
                    "mixed quadratic extensions"
                );
                Some(t)
            }
        }
    }

    fn with_tag(a: Rat, b: Rat, tag: Option<&Arc<QuadraticTag>>) -> Self {
        let tag = if Field::is_zero(&b) { None } else { tag.cloned() };
        QuadExt { a, b, tag }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a || self.b != other.b {
            return false;
        }
        match (&self.tag, &other.tag) {
            (None, None) => true,
            (Some(t), Some(u)) => Arc::ptr_eq(t, u) || **t == **u,
            // Both b's are equal; if one tag is None both b's are zero.
            _ => true,
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Field::is_zero(&self.b) {
            return write!(f, "{}", self.a);
        }
        if Field::is_zero(&self.a) {
            if self.b == Rat::one() {
                return write!(f, "theta");
            }
            return write!(f, "{}*theta", self.b);
        }
        if self.b == Rat::one() {
            write!(f, "{} + theta", self.a)
        } else {
            write!(f, "{} + {}*theta", self.a, self.b)
        }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rat(Rat::zero())
    }
    fn one() -> Self {
        QuadExt::from_rat(Rat::one())
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::from_rat(Rat::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(&self.a) && Field::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        let tag = self.unify(rhs);
        QuadExt::with_tag(&self.a + &rhs.a, &self.b + &rhs.b, tag)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let tag = self.unify(rhs);
        QuadExt::with_tag(&self.a - &rhs.a, &self.b - &rhs.b, tag)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let tag = self.unify(rhs);
        // (a1 + b1θ)(a2 + b2θ) with θ² = −pθ − r.
        let bb = &self.b * &rhs.b;
        match tag {
            None => QuadExt::with_tag(&self.a * &rhs.a, Rat::zero(), None),
            Some(t) => {
                let a = &(&self.a * &rhs.a) - &(&bb * &t.r);
                let b = &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) - &(&bb * &t.p);
                QuadExt::with_tag(a, b, Some(t))
            }
        }
    }
    fn neg(&self) -> Self {
        QuadExt {
            a: (&self.a).neg(),
            b: (&self.b).neg(),
            tag: self.tag.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        let n = self.norm();
        let c = self.conj();
        QuadExt {
            a: &c.a / &n,
            b: &c.b / &n,
            tag: c.tag,
        }
    }

    fn poly_gcd(
        a: &super::poly::Poly<Self>,
        b: &super::poly::Poly<Self>,
    ) -> super::poly::Poly<Self> {
        super::zgcd::gcd_quadext(a, b)
            .unwrap_or_else(|| super::poly::gcd_monic_euclid(a, b))
    }

    fn display_sign_abs(&self) -> (bool, String) {
        if self.is_rational() {
            self.a.display_sign_abs()
        } else {
            (false, format!("({self})"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat_int;

    #[test]
    fn golden_ratio_field_arithmetic() {
        // θ² − θ − 1 = 0, i.e. p = −1, r = −1: θ = (1+√5)/2.
        let tag = QuadraticTag::new(rat_int(-1), rat_int(-1));
        let th = QuadExt::theta(&tag);
        // θ² = θ + 1
        let sq = th.mul(&th);
        assert_eq!(sq, th.add(&QuadExt::one()));
        // norm(θ) = θ·(1−θ)... conj(θ) = 1 − θ, norm = θ − θ² = −1
        assert_eq!(th.norm(), rat_int(-1));
        assert_eq!(th.trace(), rat_int(1));
        // θ·θ⁻¹ = 1
        assert_eq!(th.mul(&th.inv()), QuadExt::one());
        // 1/θ = θ − 1
        assert_eq!(th.inv(), th.sub(&QuadExt::one()));
    }

    #[test]
    fn rationals_mix_with_extension_elements() {
        let tag = QuadraticTag::new(rat_int(0), rat_int(-2));
        let th = QuadExt::theta(&tag); // √2
        let two = QuadExt::from_i64(2);
        assert_eq!(th.mul(&th), two);
        let x = th.add(&QuadExt::one());
        assert_eq!(x.norm(), rat_int(-1)); // (1+√2)(1−√2) = −1
        assert!(x.sub(&th).is_rational());
    }

    #[test]
    #[should_panic]
    fn reducible_minimal_polynomial_rejected() {
        // x² − 4 has square discriminant.
        QuadraticTag::new(rat_int(0), rat_int(-4));
    }
}
