//! Base changes of elliptic fibrations: cyclic covers of the line branched
//! at two points, covers branched over a conjugate pair of quadratic
//! points, pullbacks of Weierstrass models, and the quadratic-twist
//! procedure that lands a fibration with multiplicative-or-starred fibers
//! in its semistable model.

use thiserror::Error;

use crate::arith::{
    rat_is_square, Field, Place, Poly, QuadExt, QuadraticTag, Rat, Rf, substitute,
};
use crate::fibers::{fiber_configuration, nori_extremality_check, FiberError};
use crate::weierstrass::{quadratic_twist, WeierstrassModel, WeierstrassError};

use std::sync::Arc;

#[derive(Debug, Error)]
pub enum BaseChangeError {
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error("branch points of a cover must be distinct")]
    EqualBranchPoints,
    #[error("branch polynomial must be monic quadratic and irreducible")]
    NotQuadraticIrreducible,
    #[error("j-map ramification is incompatible with an extremal semistable model")]
    NotNoriExtremal,
    #[error("twisting leaves a starred fiber at infinity")]
    ResidualStarredFiber,
}

/// A point of the base projective line.
#[derive(Clone, PartialEq, Debug)]
pub enum BranchPoint<F: Field> {
    Finite(F),
    Infinity,
}

/// A finite map of projective lines t = φ(s).
#[derive(Clone, Debug)]
pub struct CoverMap<F: Field> {
    pub map: Rf<F>,
    pub degree: usize,
}

impl<F: Field> CoverMap<F> {
    pub fn new(map: Rf<F>) -> Self {
        assert!(!map.is_constant(), "cover map must be nonconstant");
        let dn = map.num().degree().unwrap_or(0);
        let dd = map.den().degree().unwrap_or(0);
        CoverMap {
            map,
            degree: dn.max(dd),
        }
    }
}

/// The degree-d cover of the line fully ramified exactly over `a` and `b`:
/// in normal form φ(s) = (b·s^d + λa)/(s^d + λ) with s = 0 over a and
/// s = ∞ over b. Different nonzero λ give the same cover up to rescaling s.
pub fn cyclic_cover<F: Field>(
    a: &BranchPoint<F>,
    b: &BranchPoint<F>,
    d: u32,
    lambda: F,
) -> Result<CoverMap<F>, BaseChangeError> {
    assert!(d >= 2, "cover degree must be at least 2");
    assert!(!lambda.is_zero(), "lambda must be nonzero");
    if a == b {
        return Err(BaseChangeError::EqualBranchPoints);
    }
    let sd = Rf::var().pow(d as i64);
    let l = Rf::constant(lambda);
    let map = match (a, b) {
        (BranchPoint::Finite(a), BranchPoint::Finite(b)) => {
            let av = Rf::constant(a.clone());
            let bv = Rf::constant(b.clone());
            bv.mul(&sd).add(&l.mul(&av)).div(&sd.add(&l))
        }
        (BranchPoint::Finite(a), BranchPoint::Infinity) => {
            l.mul(&sd).add(&Rf::constant(a.clone()))
        }
        (BranchPoint::Infinity, BranchPoint::Finite(b)) => {
            Rf::constant(b.clone()).add(&l.div(&sd))
        }
        (BranchPoint::Infinity, BranchPoint::Infinity) => unreachable!(),
    };
    Ok(CoverMap::new(map))
}

/// The degree-d cover of the rational line fully ramified exactly over the
/// two conjugate roots of a monic irreducible quadratic q. With roots
/// α, ᾱ and ψ = (s−α)^d, the map t = (αψ̄ − ᾱψ)/(ψ̄ − ψ) has rational
/// coefficients, sends s = ∞ to ∞ unramified, and satisfies
/// q(φ(s))·(denominator)^d = const·q-norm form, so the pullback of q is a
/// d-th power times a unit.
pub fn redei_cover(q: &Poly<Rat>, d: u32) -> Result<CoverMap<Rat>, BaseChangeError> {
    assert!(d >= 2, "cover degree must be at least 2");
    if q.degree() != Some(2) || q.lc().cloned() != Some(Rat::one()) {
        return Err(BaseChangeError::NotQuadraticIrreducible);
    }
    let p = q.coeff(1);
    let r = q.coeff(0);
    let disc = p.mul(&p).sub(&Rat::from_i64(4).mul(&r));
    if rat_is_square(&disc) {
        return Err(BaseChangeError::NotQuadraticIrreducible);
    }
    let tag = Arc::new(QuadraticTag::new(p.clone(), r.clone()));
    let theta = QuadExt::theta(&tag);
    // ψ = (s − θ)^d over Q(θ)
    let psi = Poly::from_coeffs(vec![theta.neg(), QuadExt::one()]).pow(d);
    let psi_bar = psi.map_coeffs(|c| c.conj());
    // numerator θ·ψ̄ − θ̄·ψ and denominator ψ̄ − ψ both have coefficients
    // of the form x − x̄ = (rational)·(2θ + p); divide that out
    let two_theta_p = theta.add(&theta).add(&QuadExt::from_rat(p.clone()));
    let to_rat = |x: &QuadExt| -> Rat {
        let y = x.mul(&two_theta_p.inv());
        assert!(y.is_rational(), "coefficient not rational after division");
        y.a
    };
    let num = psi_bar
        .scale(&theta)
        .sub(&psi.scale(&theta.conj()))
        .map_coeffs(|c| to_rat(c));
    let den = psi_bar.sub(&psi).map_coeffs(|c| to_rat(c));
    Ok(CoverMap::new(Rf::new(num, den)))
}

/// Substitutes t = φ(s) into every coefficient.
pub fn pullback<F: Field>(
    m: &WeierstrassModel<F>,
    cover: &CoverMap<F>,
) -> WeierstrassModel<F> {
    let sub = |a: &Rf<F>| substitute(a, &cover.map);
    WeierstrassModel::new(
        sub(&m.a1),
        sub(&m.a2),
        sub(&m.a3),
        sub(&m.a4),
        sub(&m.a6),
        "s",
    )
}

/// Points of the s-line over a point of the t-line, with ramification
/// indices (places may be irrational; indices are uniform on each place).
pub fn fiber_over<F: Field>(
    cover: &CoverMap<F>,
    value: &BranchPoint<F>,
) -> Vec<(Place<F>, i64)> {
    let num = cover.map.num();
    let den = cover.map.den();
    let (zeros_of, dd) = match value {
        BranchPoint::Finite(a) => {
            (num.sub(&den.scale(a)), den.degree().map_or(0, |d| d as i64))
        }
        BranchPoint::Infinity => (den.clone(), num.degree().map_or(0, |d| d as i64)),
    };
    let mut out = vec![];
    for (part, mult) in zeros_of.squarefree_decomposition() {
        if !part.is_constant() {
            out.push((Place::Finite(part.monic()), mult as i64));
        }
    }
    let dz = zeros_of.degree().map_or(0, |d| d as i64);
    if dz < dd.max(num.degree().map_or(0, |d| d as i64)) {
        let d = cover.degree as i64;
        out.push((Place::Infinity, d - dz));
    }
    out
}

/// Certifies via Riemann–Hurwitz that the cover ramifies only over the
/// given branch points: the listed fibers must exhaust 2·deg − 2.
pub fn riemann_hurwitz_check<F: Field>(
    cover: &CoverMap<F>,
    branch_points: &[BranchPoint<F>],
) -> bool {
    let d = cover.degree as i64;
    let mut total = 0;
    for bp in branch_points {
        for (place, e) in fiber_over(cover, bp) {
            total += (e - 1) * place.degree() as i64;
        }
    }
    total == 2 * d - 2
}

/// Quadratic base change branched at two points of the base line.
pub fn quadratic_basechange_at<F: Field>(
    m: &WeierstrassModel<F>,
    a: &BranchPoint<F>,
    b: &BranchPoint<F>,
    lambda: F,
) -> Result<WeierstrassModel<F>, BaseChangeError> {
    let cover = cyclic_cover(a, b, 2, lambda)?;
    Ok(pullback(m, &cover))
}

/// A fibration whose j-map has the extremal ramification pattern, built
/// directly from j: y² + xy = x³ − 36/(j−1728)·x − 1/(j−1728).
pub fn model_from_j<F: Field>(j: &Rf<F>, coordinate: &str) -> WeierstrassModel<F> {
    let den = j.sub(&Rf::from_i64(1728));
    assert!(!den.is_zero(), "j must differ from 1728");
    WeierstrassModel::new(
        Rf::one(),
        Rf::zero(),
        Rf::zero(),
        Rf::from_i64(-36).div(&den),
        Rf::one().neg().div(&den),
        coordinate,
    )
}

/// Result of the two-stage twist: the first twist clears the starred
/// fibers over j = 0, the second the remaining ones (over j = 1728).
#[derive(Clone, Debug)]
pub struct TwistOutcome<F: Field> {
    pub twisted: WeierstrassModel<F>,
    pub delta1: Poly<F>,
    pub delta2: Poly<F>,
    /// Degree-weighted number of starred fibers after the first twist.
    pub intermediate_starred: u64,
}

fn starred_places_over<F: Field>(
    m: &WeierstrassModel<F>,
    over_zero_of_j: Option<bool>,
) -> Result<Vec<Poly<F>>, BaseChangeError> {
    let inv = m.invariants()?;
    let config = fiber_configuration(m)?;
    let mut out = vec![];
    for f in &config.fibers {
        if !f.kodaira.is_starred() {
            continue;
        }
        if let Place::Finite(p) = &f.place {
            let keep = match over_zero_of_j {
                None => true,
                Some(want) => {
                    let v = crate::arith::ord_at(&inv.j, &f.place).map_err(FiberError::from)?;
                    (v > 0) == want
                }
            };
            if keep {
                out.push(p.clone());
            }
        }
    }
    Ok(out)
}

fn weighted_starred<F: Field>(m: &WeierstrassModel<F>) -> Result<u64, BaseChangeError> {
    let config = fiber_configuration(m)?;
    Ok(config
        .fibers
        .iter()
        .filter(|f| f.kodaira.is_starred())
        .map(|f| f.degree() as u64)
        .sum())
}

/// Twists a fibration whose additive fibers are all starred into its
/// semistable model by two quadratic twists: first by the product of the
/// finite starred places over j = 0, then by the product of the starred
/// places that remain.
pub fn twist_to_semistable<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<TwistOutcome<F>, BaseChangeError> {
    // every additive fiber must be a quadratic twist of a multiplicative
    // or good one, i.e. starred
    let config = fiber_configuration(m)?;
    if config
        .fibers
        .iter()
        .any(|f| !f.kodaira.is_multiplicative() && !f.kodaira.is_starred())
    {
        return Err(BaseChangeError::NotNoriExtremal);
    }

    let mut delta1 = Poly::one();
    for p in starred_places_over(m, Some(true))? {
        delta1 = delta1.mul(&p);
    }
    let intermediate = quadratic_twist(m, &delta1)?;
    let intermediate_starred = weighted_starred(&intermediate)?;

    let mut delta2 = Poly::one();
    for p in starred_places_over(&intermediate, None)? {
        delta2 = delta2.mul(&p);
    }
    let twisted = quadratic_twist(&intermediate, &delta2)?.clear_denominators();

    let final_config = fiber_configuration(&twisted)?;
    if !final_config.semistable() {
        // only the place at infinity can still be starred here
        return Err(BaseChangeError::ResidualStarredFiber);
    }
    let nori = nori_extremality_check(&twisted)?;
    if !nori.extremal {
        return Err(BaseChangeError::NotNoriExtremal);
    }
    Ok(TwistOutcome {
        twisted,
        delta1,
        delta2,
        intermediate_starred,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rat};
    use crate::fibers::fiber_configuration;

    type M = WeierstrassModel<Rat>;

    fn rf(cs: &[i64]) -> Rf<Rat> {
        Rf::from_poly(Poly::from_i64s(cs))
    }

    fn fin(n: i64) -> BranchPoint<Rat> {
        BranchPoint::Finite(rat_int(n))
    }

    fn gamma0_8() -> M {
        M::short(rf(&[2, 0, -4]), Rf::one(), Rf::zero(), "t")
    }

    fn gamma1_5() -> M {
        M::short(rf(&[1, -6, 1]), rf(&[0, -8, 8]), rf(&[0, 0, 16]), "t")
    }

    fn widths(m: &M) -> Vec<u64> {
        fiber_configuration(m)
            .unwrap()
            .multiplicative_widths()
            .unwrap()
    }

    #[test]
    fn cyclic_cover_normal_forms() {
        // both finite: s ↦ s²/(s²+1) has branch points 0 and 1
        let c = cyclic_cover(&fin(0), &fin(1), 2, Rat::one()).unwrap();
        assert_eq!(c.map, Rf::new(Poly::from_i64s(&[0, 0, 1]), Poly::from_i64s(&[1, 0, 1])));
        assert!(riemann_hurwitz_check(&c, &[fin(0), fin(1)]));
        // second point at infinity: s ↦ s² + 1
        let c2 = cyclic_cover(&fin(1), &BranchPoint::Infinity, 2, Rat::one()).unwrap();
        assert_eq!(c2.map, rf(&[1, 0, 1]));
        assert!(riemann_hurwitz_check(&c2, &[fin(1), BranchPoint::Infinity]));
        assert!(cyclic_cover(&fin(3), &fin(3), 2, Rat::one()).is_err());
    }

    #[test]
    fn double_covers_of_the_width_8_base() {
        let base = gamma0_8(); // I_2@0, I_1@±1, I_8@∞
        let cases: Vec<(CoverMap<Rat>, Vec<u64>)> = vec![
            // branched over 0 and 1
            (
                cyclic_cover(&fin(0), &fin(1), 2, Rat::one()).unwrap(),
                vec![8, 8, 4, 2, 1, 1],
            ),
            // branched over −1 and 1
            (
                cyclic_cover(&fin(-1), &fin(1), 2, Rat::one()).unwrap(),
                vec![8, 8, 2, 2, 2, 2],
            ),
            // branched over 0 and ∞
            (
                cyclic_cover(&fin(0), &BranchPoint::Infinity, 2, Rat::one()).unwrap(),
                vec![16, 4, 1, 1, 1, 1],
            ),
            // branched over 1 and ∞
            (
                cyclic_cover(&fin(1), &BranchPoint::Infinity, 2, Rat::one()).unwrap(),
                vec![16, 2, 2, 2, 1, 1],
            ),
        ];
        for (cover, expected) in cases {
            let m = pullback(&base, &cover);
            assert_eq!(m.coordinate, "s");
            assert_eq!(widths(&m), expected);
        }
    }

    #[test]
    fn redei_cover_conjugate_branch_points() {
        // q = s² − 11s − 1, the multiplicative places of width 1 of the
        // width-5 base; the double cover branched there has fibers
        // {5,5,5,5,2,2}
        let q = Poly::from_i64s(&[-1, -11, 1]);
        let cover = redei_cover(&q, 2).unwrap();
        assert_eq!(cover.degree, 2);
        // q pulls back to a square times a unit
        let pulled = substitute(
            &Rf::from_poly(q.clone()),
            &cover.map,
        );
        for (_, mult) in pulled.num().squarefree_decomposition() {
            assert_eq!(mult % 2, 0);
        }
        let m = pullback(&gamma1_5(), &cover);
        assert_eq!(widths(&m), vec![5, 5, 5, 5, 2, 2]);
        // reducible quadratic is rejected
        assert!(redei_cover(&Poly::from_i64s(&[-1, 0, 1]), 2).is_err());
    }

    #[test]
    fn twist_procedure_on_a_modular_j() {
        let j = gamma1_5().invariants().unwrap().j;
        let start = model_from_j(&j, "t");
        assert_eq!(start.invariants().unwrap().j, j);
        let outcome = twist_to_semistable(&start).unwrap();
        assert_eq!(widths(&outcome.twisted), vec![5, 5, 1, 1]);
        assert_eq!(
            outcome.twisted.invariants().unwrap().j,
            j
        );
    }
}
