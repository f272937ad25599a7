//! Rational functions in one variable, and places of the projective line.

use std::fmt;

use thiserror::Error;

use super::field::Field;
use super::poly::Poly;

/// Reduced fraction of polynomials: gcd(num, den) = 1, den monic and
/// nonzero; the zero function is 0/1.
#[derive(Clone, PartialEq)]
pub struct Rf<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Rf<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Rf {
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        let lc = den.lc().unwrap().clone();
        if lc != F::one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Rf { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Rf {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Rf::from_poly(Poly::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        Rf::constant(F::from_i64(n))
    }

    pub fn zero() -> Self {
        Rf::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Rf::from_poly(Poly::one())
    }

    /// The coordinate function itself.
    pub fn var() -> Self {
        Rf::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<&Poly<F>> {
        if self.den.is_constant() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Rf::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Rf::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Rf::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero function");
        Rf::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn neg(&self) -> Self {
        Rf {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero function");
        Rf::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = Rf::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Value at a point of the base line; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Rf<G> {
        Rf::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.to_string_with_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with_var(var),
                self.den.to_string_with_var(var)
            )
        }
    }
}

impl<F: Field> fmt::Display for Rf<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}

impl<F: Field> fmt::Debug for Rf<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}

/// The function field Q(t) (or K(t)) is itself a field, which lets the same
/// generic code run with rational-function coefficients.
impl<F: Field> Field for Rf<F> {
    fn zero() -> Self {
        Rf::zero()
    }
    fn one() -> Self {
        Rf::one()
    }
    fn from_i64(n: i64) -> Self {
        Rf::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        Rf::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rf::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rf::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rf::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Rf::neg(self)
    }
    fn inv(&self) -> Self {
        Rf::inv(self)
    }
    fn display_sign_abs(&self) -> (bool, String) {
        if self.den.is_constant() && self.num.coeffs().len() == 1 {
            let (neg, abs) = self.num.coeff(0).display_sign_abs();
            return (neg, abs);
        }
        (false, format!("({self})"))
    }
}

/// Composition with a polynomial: p(φ).
pub fn poly_compose<F: Field>(p: &Poly<F>, phi: &Rf<F>) -> Rf<F> {
    // Horner evaluated in the rational-function field.
    let mut acc = Rf::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(phi).add(&Rf::constant(c.clone()));
    }
    acc
}

/// Exact composition f ∘ φ as rational functions; φ must be nonconstant.
pub fn substitute<F: Field>(f: &Rf<F>, phi: &Rf<F>) -> Rf<F> {
    assert!(!phi.is_constant(), "substitution by a constant map");
    let n = poly_compose(&f.num, phi);
    let d = poly_compose(&f.den, phi);
    n.div(&d)
}

/// A closed point of the projective line over the coefficient field.
#[derive(Clone, PartialEq, Debug)]
pub enum Place<F: Field> {
    /// Carries a squarefree monic polynomial; pairwise coprime across a
    /// coprime-basis refinement.
    Finite(Poly<F>),
    Infinity,
}

impl<F: Field> Place<F> {
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn at(value: F) -> Self {
        Place::Finite(Poly::from_coeffs(vec![value.neg(), F::one()]))
    }

    pub fn to_string_with_var(&self, var: &str) -> String {
        match self {
            Place::Finite(p) => p.to_string_with_var(var),
            Place::Infinity => "infinity".into(),
        }
    }
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}

#[derive(Debug, Error)]
#[error("non-uniform valuation at composite place {place}: refine the basis")]
pub struct NonUniformValuation {
    pub place: String,
}

/// Order of vanishing of f at the place v (negative at poles). For a
/// squarefree composite place the multiplicity must be shared by all of its
/// roots, otherwise `NonUniformValuation` is raised.
pub fn ord_at<F: Field>(f: &Rf<F>, v: &Place<F>) -> Result<i64, NonUniformValuation> {
    assert!(!f.is_zero(), "valuation of the zero function");
    match v {
        Place::Infinity => Ok(f.den().degree().unwrap_or(0) as i64
            - f.num().degree().unwrap_or(0) as i64),
        Place::Finite(p) => {
            assert!(!p.is_constant(), "finite place must be nonconstant");
            let on = uniform_ord(f.num(), p)?;
            let od = uniform_ord(f.den(), p)?;
            Ok(on - od)
        }
    }
}

fn uniform_ord<F: Field>(f: &Poly<F>, p: &Poly<F>) -> Result<i64, NonUniformValuation> {
    let mut rem = f.clone();
    let mut e = 0i64;
    while let Some(q) = rem.exact_div(p) {
        rem = q;
        e += 1;
    }
    if !Poly::gcd(&rem, p).is_constant() {
        return Err(NonUniformValuation {
            place: format!("{p:?}"),
        });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat_int, Rat};

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn reduction_and_display() {
        // (t²−1)/(2t−2) reduces to (t+1)/2 with monic (constant) denominator
        let f = Rf::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(f, Rf::new(p(&[1, 1]), p(&[2])));
        assert_eq!(f.den(), &Poly::one());
        let g = Rf::new(p(&[-1, -11, 1]), p(&[3, 1]));
        assert_eq!(g.to_string(), "(t^2 - 11*t - 1)/(t + 3)");
        assert_eq!(Rf::<Rat>::from_poly(p(&[3, 1])).to_string(), "t + 3");
    }

    #[test]
    fn ord_at_examples() {
        // f = t²/(t−1)
        let f = Rf::new(p(&[0, 0, 1]), p(&[-1, 1]));
        assert_eq!(ord_at(&f, &Place::Finite(p(&[0, 1]))).unwrap(), 2);
        assert_eq!(ord_at(&f, &Place::Infinity).unwrap(), -1);
        assert_eq!(ord_at(&f, &Place::Finite(p(&[-1, 1]))).unwrap(), -1);
        assert_eq!(ord_at(&f, &Place::Finite(p(&[5, 1]))).unwrap(), 0);
    }

    #[test]
    fn ord_at_rejects_non_uniform_composite_place() {
        // t²(t−1) has orders 2 and 1 at the roots of t(t−1)
        let f = Rf::from_poly(p(&[0, 0, 1]).mul(&p(&[-1, 1])));
        assert!(ord_at(&f, &Place::Finite(p(&[0, -1, 1]))).is_err());
    }

    #[test]
    fn substitution_examples() {
        // f = 1/t, φ = s² → 1/s²
        let f = Rf::new(p(&[1]), p(&[0, 1]));
        let phi = Rf::from_poly(p(&[0, 0, 1]));
        let g = substitute(&f, &phi);
        assert_eq!(g, Rf::new(p(&[1]), p(&[0, 0, 1])));
        // f = t, φ arbitrary → φ
        let phi2 = Rf::new(p(&[1, 0, 0, 8]), p(&[1, 0, 0, -1]));
        assert_eq!(substitute(&Rf::var(), &phi2), phi2);
        // φ = (1+8s³)/(1−s³) at s = 0 → 1
        assert_eq!(phi2.eval(&rat_int(0)), Some(rat_int(1)));
    }

    #[test]
    fn degree_weighted_orders_sum_to_zero() {
        // f = t²(t²+1)/(t³−2): zeros and poles (including ∞) balance
        let f = Rf::new(p(&[0, 0, 1]).mul(&p(&[1, 0, 1])), p(&[-2, 0, 0, 1]));
        let mut total = 1 * ord_at(&f, &Place::Finite(p(&[0, 1]))).unwrap();
        total += 2 * ord_at(&f, &Place::Finite(p(&[1, 0, 1]))).unwrap();
        total += 3 * ord_at(&f, &Place::Finite(p(&[-2, 0, 0, 1]))).unwrap();
        total += 1 * ord_at(&f, &Place::Infinity).unwrap();
        assert_eq!(total, 0);
    }
}
