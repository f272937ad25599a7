//! Weierstrass models over the function field of the base line, their
//! invariants, admissible coordinate changes, quadratic twists, and the
//! reduction of marked plane cubics to Weierstrass form.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{coprime_basis, ord_at, Field, Place, Poly, Rf};

#[derive(Debug, Error)]
pub enum WeierstrassError {
    #[error("discriminant vanishes identically: the family is degenerate")]
    DegenerateFamily,
    #[error("twist polynomial is zero or not squarefree")]
    NonSquarefreeTwist,
    #[error("marked point does not lie on the cubic")]
    NotOnCurve,
    #[error("marked point is a singular point of the generic fiber")]
    SingularMarkedPoint,
    #[error("cubic could not be brought to Weierstrass form")]
    ReductionFailed,
}

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 with coefficients in the
/// function field of the base line.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassModel<F: Field> {
    pub a1: Rf<F>,
    pub a2: Rf<F>,
    pub a3: Rf<F>,
    pub a4: Rf<F>,
    pub a6: Rf<F>,
    /// Base coordinate label, "t" before base change and "s" after.
    pub coordinate: String,
}

#[derive(Clone, Debug)]
pub struct Invariants<F: Field> {
    pub b2: Rf<F>,
    pub b4: Rf<F>,
    pub b6: Rf<F>,
    pub b8: Rf<F>,
    pub c4: Rf<F>,
    pub c6: Rf<F>,
    pub delta: Rf<F>,
    pub j: Rf<F>,
}

impl<F: Field> WeierstrassModel<F> {
    pub fn new(
        a1: Rf<F>,
        a2: Rf<F>,
        a3: Rf<F>,
        a4: Rf<F>,
        a6: Rf<F>,
        coordinate: &str,
    ) -> Self {
        WeierstrassModel {
            a1,
            a2,
            a3,
            a4,
            a6,
            coordinate: coordinate.into(),
        }
    }

    /// Short form y² = x³ + a2·x² + a4·x + a6.
    pub fn short(a2: Rf<F>, a4: Rf<F>, a6: Rf<F>, coordinate: &str) -> Self {
        WeierstrassModel::new(Rf::zero(), a2, Rf::zero(), a4, a6, coordinate)
    }

    pub fn invariants(&self) -> Result<Invariants<F>, WeierstrassError> {
        let four = Rf::from_i64(4);
        let b2 = self.a1.mul(&self.a1).add(&four.mul(&self.a2));
        let b4 = Rf::from_i64(2).mul(&self.a4).add(&self.a1.mul(&self.a3));
        let b6 = self.a3.mul(&self.a3).add(&four.mul(&self.a6));
        let b8 = b2.mul(&b6).sub(&b4.mul(&b4)).div(&four);
        let c4 = b2.mul(&b2).sub(&Rf::from_i64(24).mul(&b4));
        let c6 = b2
            .pow(3)
            .neg()
            .add(&Rf::from_i64(36).mul(&b2).mul(&b4))
            .sub(&Rf::from_i64(216).mul(&b6));
        // Δ from the b-invariants, then the c-identity as a genuine check.
        let delta = b2
            .mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&Rf::from_i64(8).mul(&b4.pow(3)))
            .sub(&Rf::from_i64(27).mul(&b6).mul(&b6))
            .add(&Rf::from_i64(9).mul(&b2).mul(&b4).mul(&b6));
        assert_eq!(
            c4.pow(3).sub(&c6.mul(&c6)),
            Rf::from_i64(1728).mul(&delta),
            "c4^3 - c6^2 = 1728*delta failed"
        );
        if delta.is_zero() {
            return Err(WeierstrassError::DegenerateFamily);
        }
        let j = c4.pow(3).div(&delta);
        Ok(Invariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            delta,
            j,
        })
    }

    /// Clears denominators with an admissible scaling so that every
    /// coefficient is polynomial.
    pub fn clear_denominators(&self) -> Self {
        let mut h = Poly::one();
        for a in [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6] {
            let d = a.den();
            let g = Poly::gcd(&h, d);
            h = h.mul(&d.exact_div(&g).unwrap());
        }
        if h.is_constant() {
            return self.clone();
        }
        let c = CoordinateChange {
            u: Rf::one().div(&Rf::from_poly(h)),
            r: Rf::zero(),
            s: Rf::zero(),
            w: Rf::zero(),
        };
        apply_change(self, &c)
    }
}

/// Admissible change (x, y) = (u²x' + r, u³y' + s·u²x' + w).
#[derive(Clone, PartialEq, Debug)]
pub struct CoordinateChange<F: Field> {
    pub u: Rf<F>,
    pub r: Rf<F>,
    pub s: Rf<F>,
    pub w: Rf<F>,
}

impl<F: Field> CoordinateChange<F> {
    pub fn identity() -> Self {
        CoordinateChange {
            u: Rf::one(),
            r: Rf::zero(),
            s: Rf::zero(),
            w: Rf::zero(),
        }
    }

    pub fn scale(u: Rf<F>) -> Self {
        CoordinateChange {
            u,
            r: Rf::zero(),
            s: Rf::zero(),
            w: Rf::zero(),
        }
    }

    /// First `self`, then `next` (in the coordinates produced by `self`).
    pub fn compose(&self, next: &Self) -> Self {
        let u1 = &self.u;
        CoordinateChange {
            u: u1.mul(&next.u),
            r: self.r.add(&u1.mul(u1).mul(&next.r)),
            s: self.s.add(&u1.mul(&next.s)),
            w: self
                .w
                .add(&u1.pow(3).mul(&next.w))
                .add(&u1.mul(u1).mul(&self.s).mul(&next.r)),
        }
    }

    pub fn invert(&self) -> Self {
        let u_inv = self.u.inv();
        let u2 = u_inv.mul(&u_inv);
        let u3 = u2.mul(&u_inv);
        CoordinateChange {
            u: u_inv.clone(),
            r: self.r.neg().mul(&u2),
            s: self.s.neg().mul(&u_inv),
            w: self.r.mul(&self.s).sub(&self.w).mul(&u3),
        }
    }
}

pub fn apply_change<F: Field>(
    m: &WeierstrassModel<F>,
    c: &CoordinateChange<F>,
) -> WeierstrassModel<F> {
    assert!(!c.u.is_zero(), "scaling factor must be invertible");
    let (u, r, s, w) = (&c.u, &c.r, &c.s, &c.w);
    let two = Rf::from_i64(2);
    let three = Rf::from_i64(3);
    let u2 = u.mul(u);
    let u3 = u2.mul(u);
    let u4 = u2.mul(&u2);
    let u6 = u3.mul(&u3);
    let a1 = m.a1.add(&two.mul(s)).div(u);
    let a2 = m
        .a2
        .sub(&s.mul(&m.a1))
        .add(&three.mul(r))
        .sub(&s.mul(s))
        .div(&u2);
    let a3 = m.a3.add(&r.mul(&m.a1)).add(&two.mul(w)).div(&u3);
    let a4 = m
        .a4
        .sub(&s.mul(&m.a3))
        .add(&two.mul(r).mul(&m.a2))
        .sub(&w.add(&r.mul(s)).mul(&m.a1))
        .add(&three.mul(r).mul(r))
        .sub(&two.mul(s).mul(w))
        .div(&u4);
    let a6 = m
        .a6
        .add(&r.mul(&m.a4))
        .add(&r.mul(r).mul(&m.a2))
        .add(&r.pow(3))
        .sub(&w.mul(&m.a3))
        .sub(&w.mul(w))
        .sub(&r.mul(w).mul(&m.a1))
        .div(&u6);
    WeierstrassModel {
        a1,
        a2,
        a3,
        a4,
        a6,
        coordinate: m.coordinate.clone(),
    }
}

/// Quadratic twist by a squarefree polynomial δ: rescales (c4, c6) to
/// (δ²c4, δ³c6), realized as y² = x³ − 27δ²c4·x − 54δ³c6.
pub fn quadratic_twist<F: Field>(
    m: &WeierstrassModel<F>,
    delta: &Poly<F>,
) -> Result<WeierstrassModel<F>, WeierstrassError> {
    if delta.is_zero() {
        return Err(WeierstrassError::NonSquarefreeTwist);
    }
    if !Poly::gcd(delta, &delta.derivative()).is_constant() {
        return Err(WeierstrassError::NonSquarefreeTwist);
    }
    let inv = m.invariants()?;
    let d = Rf::from_poly(delta.clone());
    let a4 = Rf::from_i64(-27).mul(&d.mul(&d)).mul(&inv.c4);
    let a6 = Rf::from_i64(-54).mul(&d.pow(3)).mul(&inv.c6);
    Ok(WeierstrassModel::short(
        Rf::zero(),
        a4,
        a6,
        &m.coordinate,
    ))
}

/// Removes twelfth-power content from the discriminant: at every finite
/// place p with min(⌊v(c4)/4⌋, ⌊v(c6)/6⌋, ⌊v(Δ)/12⌋) = k ≥ 1 the model is
/// rescaled by u = p^k. This keeps j and the fiber configuration while
/// shrinking coefficient degrees, which matters after repeated base change.
pub fn minimal_model<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<WeierstrassModel<F>, WeierstrassError> {
    let m = m.clear_denominators();
    let inv = m.invariants()?;
    let mut parts: Vec<Poly<F>> = vec![];
    for f in [&inv.c4, &inv.c6, &inv.delta] {
        if f.is_zero() {
            continue;
        }
        for (part, _) in f.num().squarefree_decomposition() {
            if !part.is_constant() {
                parts.push(part);
            }
        }
    }
    let (basis, _) = coprime_basis(&parts);
    let mut u = Poly::one();
    for p in basis {
        let place = Place::Finite(p.clone());
        let mut k = ord_at(&inv.delta, &place).expect("coprime basis place") / 12;
        if k > 0 && !inv.c4.is_zero() {
            k = k.min(ord_at(&inv.c4, &place).expect("coprime basis place") / 4);
        }
        if k > 0 && !inv.c6.is_zero() {
            k = k.min(ord_at(&inv.c6, &place).expect("coprime basis place") / 6);
        }
        for _ in 0..k.max(0) {
            u = u.mul(&p);
        }
    }
    if u.is_constant() {
        return Ok(m);
    }
    // Short form with the content divided out; both coefficients stay
    // polynomial because u⁴ | c4 and u⁶ | c6.
    let ur = Rf::from_poly(u);
    let a4 = Rf::from_i64(-27).mul(&inv.c4).div(&ur.pow(4));
    let a6 = Rf::from_i64(-54).mul(&inv.c6).div(&ur.pow(6));
    Ok(WeierstrassModel::short(Rf::zero(), a4, a6, &m.coordinate))
}

// ---------------------------------------------------------------------------
// Bivariate scratch polynomials (x, y over the function field), used for the
// published fractional substitutions applied verbatim and for parsing long
// Weierstrass equations.

#[derive(Clone, PartialEq, Debug)]
pub struct XYPoly<F: Field> {
    pub terms: BTreeMap<(u32, u32), Rf<F>>,
}

impl<F: Field> XYPoly<F> {
    pub fn zero() -> Self {
        XYPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rf<F>) -> Self {
        let mut p = XYPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn x() -> Self {
        let mut p = XYPoly::zero();
        p.add_term(1, 0, Rf::one());
        p
    }

    pub fn y() -> Self {
        let mut p = XYPoly::zero();
        p.add_term(0, 1, Rf::one());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rf<F>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rf::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rf<F> {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = XYPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rf<F>) -> Self {
        let mut out = XYPoly::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = XYPoly::constant(Rf::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn max_degs(&self) -> (u32, u32) {
        let mut dx = 0;
        let mut dy = 0;
        for &(i, j) in self.terms.keys() {
            dx = dx.max(i);
            dy = dy.max(j);
        }
        (dx, dy)
    }

    /// Numerator of self(xn/xd, yn/yd): each variable is replaced by a
    /// fraction of scratch polynomials and denominators are cleared.
    pub fn eval_frac(&self, xn: &Self, xd: &Self, yn: &Self, yd: &Self) -> Self {
        let (dx, dy) = self.max_degs();
        let mut out = XYPoly::zero();
        for (&(i, j), c) in &self.terms {
            let term = xn
                .pow(i)
                .mul(&xd.pow(dx - i))
                .mul(&yn.pow(j))
                .mul(&yd.pow(dy - j))
                .scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Divides out the largest common monomial x^a y^b.
    pub fn strip_monomials(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut a = u32::MAX;
        let mut b = u32::MAX;
        for &(i, j) in self.terms.keys() {
            a = a.min(i);
            b = b.min(j);
        }
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i - a, j - b), c.clone()))
                .collect(),
        }
    }
}

/// Matches a bivariate equation E(x, y) = 0 against the long Weierstrass
/// template y² + a1·xy + a3·y − (x³ + a2·x² + a4·x + a6), allowing an
/// overall unit and a non-monic x³ term (which is absorbed by an admissible
/// rescaling). Returns `None` when monomials outside the template survive.
pub fn xy_to_weierstrass<F: Field>(
    e: &XYPoly<F>,
    coordinate: &str,
) -> Option<WeierstrassModel<F>> {
    let e = e.strip_monomials();
    let cy2 = e.coeff(0, 2);
    if cy2.is_zero() {
        return None;
    }
    let p = e.scale(&cy2.inv());
    for &(i, j) in p.terms.keys() {
        if !matches!((i, j), (0, 2) | (1, 1) | (0, 1) | (3, 0) | (2, 0) | (1, 0) | (0, 0)) {
            return None;
        }
    }
    let ecoef = p.coeff(3, 0).neg();
    if ecoef.is_zero() {
        return None;
    }
    let a1 = p.coeff(1, 1);
    let a3 = p.coeff(0, 1);
    let a2 = p.coeff(2, 0).neg();
    let a4 = p.coeff(1, 0).neg();
    let a6 = p.coeff(0, 0).neg();
    // y² + a1·xy + a3·y = e·x³ + a2·x² + a4·x + a6 becomes monic in x³
    // under (x, y) → (x/e, y/e) scaled by e².
    Some(WeierstrassModel::new(
        a1,
        a2,
        ecoef.mul(&a3),
        ecoef.mul(&a4),
        ecoef.mul(&ecoef).mul(&a6),
        coordinate,
    ))
}

/// Rewrites an affine cubic curve E(x, y) = 0 through a fractional
/// substitution x = xn/xd, y = yn/yd (ξ = c/x patterns),
/// producing the Weierstrass model the substitution displays.
pub fn fractional_change<F: Field>(
    e: &XYPoly<F>,
    x_sub: (&XYPoly<F>, &XYPoly<F>),
    y_sub: (&XYPoly<F>, &XYPoly<F>),
    coordinate: &str,
) -> Option<WeierstrassModel<F>> {
    let pulled = e.eval_frac(x_sub.0, x_sub.1, y_sub.0, y_sub.1);
    xy_to_weierstrass(&pulled, coordinate)
}

// ---------------------------------------------------------------------------
// Plane cubics with a marked rational point, and Nagell's chord–tangent
// reduction to Weierstrass form.

/// Monomial order for the ten coefficients of a ternary cubic.
pub const CUBIC_MONOMIALS: [(u8, u8, u8); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

#[derive(Clone, Debug)]
pub struct PlaneCubic<F: Field> {
    /// Coefficients in `CUBIC_MONOMIALS` order.
    pub coeffs: [Rf<F>; 10],
    /// Marked projective point on the curve.
    pub point: [Rf<F>; 3],
}

type Tri<F> = BTreeMap<(u8, u8, u8), Rf<F>>;

impl<F: Field> PlaneCubic<F> {
    pub fn new(coeffs: [Rf<F>; 10], point: [Rf<F>; 3]) -> Self {
        PlaneCubic { coeffs, point }
    }

    fn tri(&self) -> Tri<F> {
        let mut m = BTreeMap::new();
        for (k, c) in CUBIC_MONOMIALS.iter().zip(self.coeffs.iter()) {
            if !c.is_zero() {
                m.insert(*k, c.clone());
            }
        }
        m
    }

    pub fn eval(&self, p: &[Rf<F>; 3]) -> Rf<F> {
        let mut acc = Rf::zero();
        for (&(i, j, k), c) in self.tri().iter() {
            acc = acc.add(
                &c.mul(&p[0].pow(i as i64))
                    .mul(&p[1].pow(j as i64))
                    .mul(&p[2].pow(k as i64)),
            );
        }
        acc
    }

    fn gradient(&self, p: &[Rf<F>; 3]) -> [Rf<F>; 3] {
        let mut out = [Rf::zero(), Rf::zero(), Rf::zero()];
        for (&(i, j, k), c) in self.tri().iter() {
            let e = [i, j, k];
            for axis in 0..3 {
                if e[axis] == 0 {
                    continue;
                }
                let mut term = c.mul(&Rf::from_i64(e[axis] as i64));
                for v in 0..3 {
                    let pow = if v == axis { e[v] - 1 } else { e[v] };
                    term = term.mul(&p[v].pow(pow as i64));
                }
                out[axis] = out[axis].add(&term);
            }
        }
        out
    }
}

fn tri_apply_linear<F: Field>(t: &Tri<F>, m: &[[Rf<F>; 3]; 3]) -> Tri<F> {
    // substitute (x, y, z) ← M·(x', y', z')
    let rows: Vec<Vec<(u8, u8, u8, Rf<F>)>> = (0..3)
        .map(|axis| {
            vec![
                (1, 0, 0, m[axis][0].clone()),
                (0, 1, 0, m[axis][1].clone()),
                (0, 0, 1, m[axis][2].clone()),
            ]
        })
        .collect();
    let mut out: Tri<F> = BTreeMap::new();
    for (&(i, j, k), c) in t {
        // expand (row0)^i (row1)^j (row2)^k
        let mut parts: Tri<F> = BTreeMap::new();
        parts.insert((0, 0, 0), c.clone());
        for (axis, e) in [(0usize, i), (1, j), (2, k)] {
            for _ in 0..e {
                let mut next: Tri<F> = BTreeMap::new();
                for (&(a, b, d), v) in &parts {
                    for (dx, dy, dz, coef) in &rows[axis] {
                        if coef.is_zero() {
                            continue;
                        }
                        let key = (a + dx, b + dy, d + dz);
                        let entry = next.entry(key).or_insert_with(Rf::zero);
                        *entry = entry.add(&v.mul(coef));
                    }
                }
                parts = next;
            }
        }
        for (key, v) in parts {
            let entry = out.entry(key).or_insert_with(Rf::zero);
            *entry = entry.add(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn mat_mul_vec<F: Field>(m: &[[Rf<F>; 3]; 3], v: &[Rf<F>; 3]) -> [Rf<F>; 3] {
    std::array::from_fn(|i| {
        m[i][0]
            .mul(&v[0])
            .add(&m[i][1].mul(&v[1]))
            .add(&m[i][2].mul(&v[2]))
    })
}

fn mat_inv<F: Field>(m: &[[Rf<F>; 3]; 3]) -> [[Rf<F>; 3]; 3] {
    let minor = |r: usize, c: usize| -> Rf<F> {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&i| i != c).collect();
        m[rs[0]][cs[0]]
            .mul(&m[rs[1]][cs[1]])
            .sub(&m[rs[0]][cs[1]].mul(&m[rs[1]][cs[0]]))
    };
    let det = m[0][0]
        .mul(&minor(0, 0))
        .sub(&m[0][1].mul(&minor(0, 1)))
        .add(&m[0][2].mul(&minor(0, 2)));
    assert!(!det.is_zero(), "singular linear change");
    let det_inv = det.inv();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            minor(j, i).mul(&Rf::from_i64(sign)).mul(&det_inv)
        })
    })
}

/// Nagell's chord–tangent reduction of a marked plane cubic to Weierstrass
/// form. The result is birational to the input over the function field, so
/// it has the same j-invariant and the same fiber configuration. The final
/// model has polynomial coefficients.
pub fn cubic_to_weierstrass<F: Field>(
    cubic: &PlaneCubic<F>,
    coordinate: &str,
) -> Result<WeierstrassModel<F>, WeierstrassError> {
    if !cubic.eval(&cubic.point).is_zero() {
        return Err(WeierstrassError::NotOnCurve);
    }
    let grad = cubic.gradient(&cubic.point);
    if grad.iter().all(|g| g.is_zero()) {
        return Err(WeierstrassError::SingularMarkedPoint);
    }

    let id = |i: usize, j: usize| -> Rf<F> {
        if i == j {
            Rf::one()
        } else {
            Rf::zero()
        }
    };
    // Pre-transforms retried in order until the chart is non-degenerate
    // (tangent's third intersection must be finite and distinct).
    let mut pre: Vec<[[Rf<F>; 3]; 3]> = vec![std::array::from_fn(|i| std::array::from_fn(|j| id(i, j)))];
    for (a, b) in [(0usize, 2usize), (1, 2), (0, 1)] {
        let mut swap: [[Rf<F>; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| id(i, j)));
        swap[a][a] = Rf::zero();
        swap[b][b] = Rf::zero();
        swap[a][b] = Rf::one();
        swap[b][a] = Rf::one();
        pre.push(swap);
    }
    for target in 0..3usize {
        for source in 0..3usize {
            if target == source {
                continue;
            }
            let mut shear: [[Rf<F>; 3]; 3] =
                std::array::from_fn(|i| std::array::from_fn(|j| id(i, j)));
            shear[target][source] = Rf::one();
            pre.push(shear);
        }
    }

    for m in &pre {
        let t = tri_apply_linear(&cubic.tri(), m);
        let point = mat_mul_vec(&mat_inv(m), &cubic.point);
        match nagell(&t, &point, coordinate) {
            Ok(model) => return Ok(model.clear_denominators()),
            Err(WeierstrassError::ReductionFailed) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(WeierstrassError::ReductionFailed)
}

fn nagell<F: Field>(
    t: &Tri<F>,
    point: &[Rf<F>; 3],
    coordinate: &str,
) -> Result<WeierstrassModel<F>, WeierstrassError> {
    // Move the marked point to (0:0:1): third column = point, the other two
    // columns are the standard basis vectors away from a nonzero coordinate.
    let k = (0..3)
        .find(|&i| !point[i].is_zero())
        .expect("projective point is zero");
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let mut m: [[Rf<F>; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rf::zero()));
    for (col, &row) in others.iter().enumerate() {
        m[row][col] = Rf::one();
    }
    for row in 0..3 {
        m[row][2] = point[row].clone();
    }
    let mut t = tri_apply_linear(t, &m);

    let coeff = |t: &Tri<F>, key: (u8, u8, u8)| t.get(&key).cloned().unwrap_or_else(Rf::zero);
    debug_assert!(coeff(&t, (0, 0, 3)).is_zero());

    // Normalize the tangent at the origin to the line Y = 0.
    let a = coeff(&t, (1, 0, 2));
    let b = coeff(&t, (0, 1, 2));
    if a.is_zero() && b.is_zero() {
        return Err(WeierstrassError::SingularMarkedPoint);
    }
    let l: [[Rf<F>; 3]; 3] = if !b.is_zero() {
        // x = X, y = (Y − aX)/b
        let binv = b.inv();
        [
            [Rf::one(), Rf::zero(), Rf::zero()],
            [a.neg().mul(&binv), binv.clone(), Rf::zero()],
            [Rf::zero(), Rf::zero(), Rf::one()],
        ]
    } else {
        // x = Y/a, y = X
        let ainv = a.inv();
        [
            [Rf::zero(), ainv.clone(), Rf::zero()],
            [Rf::one(), Rf::zero(), Rf::zero()],
            [Rf::zero(), Rf::zero(), Rf::one()],
        ]
    };
    t = tri_apply_linear(&t, &l);
    debug_assert!(coeff(&t, (1, 0, 2)).is_zero());
    debug_assert_eq!(coeff(&t, (0, 1, 2)), Rf::one());

    let e2 = coeff(&t, (2, 0, 1));
    let e3 = coeff(&t, (3, 0, 0));
    if e2.is_zero() {
        // The origin is a flex: projectively F = yz² + f2(x,y)z + f3(x,y)
        // is already a (long) Weierstrass shape in the chart y = 1.
        if e3.is_zero() {
            // the tangent line lies on the curve
            return Err(WeierstrassError::ReductionFailed);
        }
        let q11 = coeff(&t, (1, 1, 1));
        let q02 = coeff(&t, (0, 2, 1));
        let c21 = coeff(&t, (2, 1, 0));
        let c12 = coeff(&t, (1, 2, 0));
        let c03 = coeff(&t, (0, 3, 0));
        let e = e3.neg();
        return Ok(WeierstrassModel::new(
            q11,
            c21.neg(),
            e.mul(&q02),
            e.mul(&c12).neg(),
            e.mul(&e).mul(&c03).neg(),
            coordinate,
        ));
    }
    if e3.is_zero() {
        // third tangent intersection at infinity; retry in another chart
        return Err(WeierstrassError::ReductionFailed);
    }

    // General position: translate the tangent's third intersection
    // (x0, 0) with x0 = −e2/e3 to the origin.
    let x0 = e2.neg().div(&e3);
    let shift: [[Rf<F>; 3]; 3] = [
        [Rf::one(), Rf::zero(), x0],
        [Rf::zero(), Rf::one(), Rf::zero()],
        [Rf::zero(), Rf::zero(), Rf::one()],
    ];
    t = tri_apply_linear(&t, &shift);
    debug_assert!(coeff(&t, (0, 0, 3)).is_zero());

    // Lines through the new origin: substitute (X, Y) = (X, uX) and write
    // the curve as q1(u) + q2(u)·X + q3(u)·X² = 0. The discriminant
    // D(u) = q2² − 4q1q3 is a quartic vanishing at u = 0 (the direction of
    // the original tangent, which meets the curve doubly at the old point).
    let q = |k: u8| -> Poly<Rf<F>> {
        let mut cs = vec![];
        for j in 0..=k {
            cs.push(coeff(&t, (k - j, j, 3 - k)));
        }
        Poly::from_coeffs(cs)
    };
    let (q1, q2, q3) = (q(1), q(2), q(3));
    let d = q2.mul(&q2).sub(&q1.mul(&q3).scale(&Rf::from_i64(4)));
    if !d.coeff(0).is_zero() {
        return Err(WeierstrassError::ReductionFailed);
    }
    let d1 = d.coeff(1);
    let d2 = d.coeff(2);
    let d3 = d.coeff(3);
    let d4 = d.coeff(4);
    if d1.is_zero() {
        return Err(WeierstrassError::ReductionFailed);
    }
    // (2q3X + q2)² = D(u) with a rational point above u = 0 transforms to
    // y² = x³ + d2x² + d1d3·x + d1²d4 via x = d1/u, y = d1·(2q3X+q2)/u².
    Ok(WeierstrassModel::short(
        d2,
        d1.mul(&d3),
        d1.mul(&d1).mul(&d4),
        coordinate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ord_at, rat_int, Place, Rat};

    type M = WeierstrassModel<Rat>;

    fn rf(cs: &[i64]) -> Rf<Rat> {
        Rf::from_poly(Poly::from_i64s(cs))
    }

    #[test]
    fn constant_family_invariants() {
        // y² = x³ + 1: c4 = 0, c6 = −864, Δ = −432, j = 0
        let m = M::short(Rf::zero(), Rf::zero(), Rf::one(), "t");
        let inv = m.invariants().unwrap();
        assert_eq!(inv.c4, Rf::zero());
        assert_eq!(inv.c6, Rf::from_i64(-864));
        assert_eq!(inv.delta, Rf::from_i64(-432));
        assert_eq!(inv.j, Rf::zero());
    }

    #[test]
    fn gamma0_8_discriminant_support() {
        // η² = ξ³ + (2−4t²)ξ² + ξ: Δ supported on {t, t−1, t+1, ∞} with
        // orders (2, 1, 1, −4)
        let m = M::short(rf(&[2, 0, -4]), Rf::one(), Rf::zero(), "t");
        let inv = m.invariants().unwrap();
        assert_eq!(ord_at(&inv.delta, &Place::at(rat_int(0))).unwrap(), 2);
        assert_eq!(ord_at(&inv.delta, &Place::at(rat_int(1))).unwrap(), 1);
        assert_eq!(ord_at(&inv.delta, &Place::at(rat_int(-1))).unwrap(), 1);
        assert_eq!(ord_at(&inv.delta, &Place::Infinity).unwrap(), -4);
        // and nothing else: Δ = 16t²(t−1)(t+1)·(unit)? degree check
        assert_eq!(inv.delta.num().degree(), Some(4));
        assert_eq!(
            ord_at(&inv.delta, &Place::at(rat_int(7))).unwrap(),
            0
        );
    }

    #[test]
    fn gamma1_5_discriminant_support() {
        // η² = ξ³ + (t²−6t+1)ξ² + 8t(t−1)ξ + 16t²
        let m = M::short(
            rf(&[1, -6, 1]),
            rf(&[0, -8, 8]),
            rf(&[0, 0, 16]),
            "t",
        );
        let inv = m.invariants().unwrap();
        assert_eq!(ord_at(&inv.delta, &Place::at(rat_int(0))).unwrap(), 5);
        assert_eq!(
            ord_at(&inv.delta, &Place::Finite(Poly::from_i64s(&[-1, -11, 1]))).unwrap(),
            1
        );
        assert_eq!(ord_at(&inv.delta, &Place::Infinity).unwrap(), -7);
        assert_eq!(inv.delta.num().degree(), Some(7));
    }

    #[test]
    fn identity_and_scaling_changes() {
        let m = M::short(rf(&[2, 0, -1]), Rf::one(), Rf::zero(), "t");
        let j0 = m.invariants().unwrap().j;
        let m1 = apply_change(&m, &CoordinateChange::identity());
        assert_eq!(m1, m);
        let c = CoordinateChange::scale(Rf::from_i64(5));
        let m2 = apply_change(&m, &c);
        let inv2 = m2.invariants().unwrap();
        assert_eq!(inv2.j, j0);
        let ratio = m.invariants().unwrap().delta.div(&inv2.delta);
        assert_eq!(ratio, Rf::from_i64(244140625)); // 5^12
    }

    #[test]
    fn change_composition_law() {
        let m = M::new(rf(&[1]), rf(&[0, 2]), rf(&[3]), rf(&[0, 0, 1]), rf(&[5]), "t");
        let c1 = CoordinateChange {
            u: rf(&[2]),
            r: rf(&[0, 1]),
            s: rf(&[3]),
            w: rf(&[1, 1]),
        };
        let c2 = CoordinateChange {
            u: rf(&[0, 1]),
            r: rf(&[7]),
            s: rf(&[0, -1]),
            w: rf(&[2]),
        };
        let lhs = apply_change(&apply_change(&m, &c1), &c2);
        let rhs = apply_change(&m, &c1.compose(&c2));
        assert_eq!(lhs, rhs);
        // inversion really inverts
        let back = apply_change(&apply_change(&m, &c1), &c1.invert());
        assert_eq!(back, m);
    }

    #[test]
    fn twist_by_one_keeps_j() {
        let m = M::short(rf(&[1, -6, 1]), rf(&[0, -8, 8]), rf(&[0, 0, 16]), "t");
        let tw = quadratic_twist(&m, &Poly::one()).unwrap();
        assert_eq!(
            tw.invariants().unwrap().j,
            m.invariants().unwrap().j
        );
        assert!(quadratic_twist(&m, &Poly::from_i64s(&[1, 2, 1])).is_err());
    }

    #[test]
    fn inversion_change_reproduces_gamma0_9_weierstrass_form() {
        // affine cubic x²y + y² + x + t·xy = 0 under ξ = −4/x,
        // η = (8y + 4x² + 4tx)/x²  →  η² = ξ³ + t²ξ² − 8tξ + 16
        let tvar = Rf::<Rat>::var();
        let mut e = XYPoly::<Rat>::zero();
        e.add_term(2, 1, Rf::one());
        e.add_term(0, 2, Rf::one());
        e.add_term(1, 0, Rf::one());
        e.add_term(1, 1, tvar.clone());
        // x = −4/ξ
        let xn = XYPoly::constant(Rf::from_i64(-4));
        let xd = XYPoly::x();
        // y = (2η − 8 + 2tξ)/ξ²
        let mut yn = XYPoly::zero();
        yn.add_term(0, 1, Rf::from_i64(2));
        yn.add_term(0, 0, Rf::from_i64(-8));
        yn.add_term(1, 0, Rf::from_i64(2).mul(&tvar));
        let yd = XYPoly::x().mul(&XYPoly::x());
        let m = fractional_change(&e, (&xn, &xd), (&yn, &yd), "t").unwrap();
        let want = M::short(rf(&[0, 0, 1]), rf(&[0, -8]), rf(&[16]), "t");
        assert_eq!(m, want);
    }

    #[test]
    fn beauville_cubic_matches_displayed_weierstrass_j() {
        // x(x² + z² + 2zy) + t·z(x² − y²) = 0 marked at (0:1:0) has the
        // same j as η² = ξ³ + (t²+1)ξ² + t²ξ
        let t = Rf::<Rat>::var();
        let zero = Rf::<Rat>::zero();
        let one = Rf::<Rat>::one();
        // monomials: x3,x2y,x2z,xy2,xyz,xz2,y3,y2z,yz2,z3
        let cubic = PlaneCubic::new(
            [
                one.clone(),          // x³
                zero.clone(),         // x²y
                t.clone(),            // x²z
                zero.clone(),         // xy²
                Rf::from_i64(2),      // xyz
                one.clone(),          // xz²
                zero.clone(),         // y³
                t.neg(),              // y²z
                zero.clone(),         // yz²
                zero.clone(),         // z³
            ],
            [zero.clone(), one.clone(), zero.clone()],
        );
        let m = cubic_to_weierstrass(&cubic, "t").unwrap();
        let displayed = M::short(
            rf(&[1, 0, 1]),
            rf(&[0, 0, 1]),
            Rf::zero(),
            "t",
        );
        assert_eq!(
            m.invariants().unwrap().j,
            displayed.invariants().unwrap().j
        );
        // marked-point validation errors
        let mut off = cubic.clone();
        off.point = [one.clone(), one.clone(), one.clone()];
        assert!(matches!(
            cubic_to_weierstrass(&off, "t"),
            Err(WeierstrassError::NotOnCurve)
        ));
    }
}
