//! Kodaira fiber types, local reduction data at places of the base line,
//! fiber configurations with Euler numbers, and the extremality check
//! through the ramification of the j-map.

use std::fmt;

use thiserror::Error;

use crate::arith::{cmp_poly_canonical, coprime_basis, ord_at, Field, Place, Poly, Rf};
use crate::weierstrass::{Invariants, WeierstrassModel, WeierstrassError};

#[derive(Debug, Error)]
pub enum FiberError {
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    NonUniform(#[from] crate::arith::NonUniformValuation),
    #[error("minimal valuations (v4, v6, vΔ) = ({v4:?}, {v6:?}, {vd}) match no Kodaira type")]
    UnclassifiableTriple {
        v4: Option<i64>,
        v6: Option<i64>,
        vd: i64,
    },
    #[error("fiber configuration contains additive fibers; not semistable")]
    NotSemistable,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KodairaType {
    /// I_0 is good reduction, I_n (n ≥ 1) multiplicative.
    I(u64),
    /// I_n* (n ≥ 0).
    IStar(u64),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn euler_contribution(&self) -> u64 {
        match self {
            KodairaType::I(n) => *n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn is_starred(&self) -> bool {
        matches!(
            self,
            KodairaType::IStar(_)
                | KodairaType::IVStar
                | KodairaType::IIIStar
                | KodairaType::IIStar
        )
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaType::I(n) if *n >= 1)
    }

    pub fn is_good(&self) -> bool {
        matches!(self, KodairaType::I(0))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I_{}", n),
            KodairaType::IStar(n) => write!(f, "I_{}*", n),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// Reduction data of a model at one place: Kodaira type and the
/// valuations of (c4, c6, Δ) after passing to a minimal model there.
/// `None` valuations mean the invariant vanishes identically.
#[derive(Clone, Debug)]
pub struct LocalData<F: Field> {
    pub place: Place<F>,
    pub kodaira: KodairaType,
    pub v_c4: Option<i64>,
    pub v_c6: Option<i64>,
    pub v_delta: i64,
}

impl<F: Field> LocalData<F> {
    pub fn degree(&self) -> usize {
        self.place.degree()
    }
}

/// Minimalizes a raw valuation triple and classifies it (residue
/// characteristic zero, so Tate's algorithm reduces to the table).
pub fn classify_triple(
    v4: Option<i64>,
    v6: Option<i64>,
    vd: i64,
) -> Result<(KodairaType, Option<i64>, Option<i64>, i64), FiberError> {
    let mut k = vd.div_euclid(12);
    if let Some(v) = v4 {
        k = k.min(v.div_euclid(4));
    }
    if let Some(v) = v6 {
        k = k.min(v.div_euclid(6));
    }
    let v4m = v4.map(|v| v - 4 * k);
    let v6m = v6.map(|v| v - 6 * k);
    let vdm = vd - 12 * k;
    debug_assert!(vdm >= 0);
    let ge = |v: Option<i64>, n: i64| v.map_or(true, |v| v >= n);
    let ty = if vdm == 0 {
        KodairaType::I(0)
    } else if v4m == Some(0) {
        KodairaType::I(vdm as u64)
    } else if v4m == Some(2) && v6m == Some(3) && vdm >= 7 {
        KodairaType::IStar((vdm - 6) as u64)
    } else if vdm == 6 && ge(v4m, 2) && ge(v6m, 3) {
        KodairaType::IStar(0)
    } else {
        match vdm {
            2 => KodairaType::II,
            3 => KodairaType::III,
            4 => KodairaType::IV,
            8 => KodairaType::IVStar,
            9 => KodairaType::IIIStar,
            10 => KodairaType::IIStar,
            _ => {
                return Err(FiberError::UnclassifiableTriple {
                    v4: v4m,
                    v6: v6m,
                    vd: vdm,
                })
            }
        }
    };
    Ok((ty, v4m, v6m, vdm))
}

fn ord_opt<F: Field>(f: &Rf<F>, place: &Place<F>) -> Result<Option<i64>, FiberError> {
    if f.is_zero() {
        Ok(None)
    } else {
        Ok(Some(ord_at(f, place)?))
    }
}

pub fn local_data_from_invariants<F: Field>(
    inv: &Invariants<F>,
    place: &Place<F>,
) -> Result<LocalData<F>, FiberError> {
    let v4 = ord_opt(&inv.c4, place)?;
    let v6 = ord_opt(&inv.c6, place)?;
    let vd = ord_at(&inv.delta, place)?;
    let (kodaira, v4m, v6m, vdm) = classify_triple(v4, v6, vd)?;
    Ok(LocalData {
        place: place.clone(),
        kodaira,
        v_c4: v4m,
        v_c6: v6m,
        v_delta: vdm,
    })
}

pub fn local_data<F: Field>(
    m: &WeierstrassModel<F>,
    place: &Place<F>,
) -> Result<LocalData<F>, FiberError> {
    local_data_from_invariants(&m.invariants()?, place)
}

/// Places where the model can have bad reduction, as a coprime basis of the
/// supports of c4, c6 and Δ together with the place at infinity. Building
/// the basis from the squarefree parts of all three invariants at once
/// guarantees uniform valuations at every returned place.
pub fn places_of_bad_reduction<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<Vec<Place<F>>, FiberError> {
    let inv = m.invariants()?;
    let mut parts: Vec<Poly<F>> = vec![];
    for f in [&inv.c4, &inv.c6, &inv.delta] {
        if f.is_zero() {
            continue;
        }
        for p in [f.num(), f.den()] {
            if p.is_constant() {
                continue;
            }
            for (part, _) in p.squarefree_decomposition() {
                if !part.is_constant() {
                    parts.push(part);
                }
            }
        }
    }
    let (basis, _) = coprime_basis(&parts);
    let mut places: Vec<Place<F>> = basis.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    let mut bad = vec![];
    for place in places {
        let data = local_data_from_invariants(&inv, &place)?;
        if !data.kodaira.is_good() {
            bad.push(place);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug)]
pub struct FiberConfiguration<F: Field> {
    /// Singular fibers, finite places first (by degree, then canonically),
    /// the place at infinity last.
    pub fibers: Vec<LocalData<F>>,
    /// Degree-weighted sum of Euler contributions.
    pub euler_number: u64,
}

impl<F: Field> FiberConfiguration<F> {
    pub fn semistable(&self) -> bool {
        self.fibers.iter().all(|f| f.kodaira.is_multiplicative())
    }

    /// The multiset of n over all I_n fibers, each place expanded by its
    /// degree, sorted descending — directly comparable to cusp widths.
    pub fn multiplicative_widths(&self) -> Result<Vec<u64>, FiberError> {
        if !self.semistable() {
            return Err(FiberError::NotSemistable);
        }
        let mut out = vec![];
        for f in &self.fibers {
            if let KodairaType::I(n) = f.kodaira {
                for _ in 0..f.degree() {
                    out.push(n);
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }
}

pub fn fiber_configuration<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<FiberConfiguration<F>, FiberError> {
    let inv = m.invariants()?;
    let mut fibers = vec![];
    for place in places_of_bad_reduction(m)? {
        fibers.push(local_data_from_invariants(&inv, &place)?);
    }
    fibers.sort_by(|a, b| match (&a.place, &b.place) {
        (Place::Infinity, Place::Infinity) => std::cmp::Ordering::Equal,
        (Place::Infinity, _) => std::cmp::Ordering::Greater,
        (_, Place::Infinity) => std::cmp::Ordering::Less,
        (Place::Finite(p), Place::Finite(q)) => cmp_poly_canonical(p, q),
    });
    let euler_number: u64 = fibers
        .iter()
        .map(|f| f.degree() as u64 * f.kodaira.euler_contribution())
        .sum();
    assert_eq!(euler_number % 12, 0, "Euler number must be divisible by 12");
    Ok(FiberConfiguration {
        fibers,
        euler_number,
    })
}

#[derive(Clone, Debug)]
pub struct SurfaceReport<F: Field> {
    pub configuration: FiberConfiguration<F>,
    pub euler_number: u64,
    /// Holomorphic Euler characteristic χ(O) = e/12.
    pub chi: u64,
    /// Geometric genus p_g = χ − 1 (rational base, nonconstant j).
    pub p_g: u64,
    pub semistable: bool,
}

pub fn surface_report<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<SurfaceReport<F>, FiberError> {
    let configuration = fiber_configuration(m)?;
    let euler_number = configuration.euler_number;
    let chi = euler_number / 12;
    let semistable = configuration.semistable();
    Ok(SurfaceReport {
        configuration,
        euler_number,
        chi,
        p_g: chi.saturating_sub(1),
        semistable,
    })
}

/// Ramification record of the j-map over one of 0, 1728, ∞.
#[derive(Clone, Debug)]
pub struct RamificationPoint<F: Field> {
    pub place: Place<F>,
    pub index: i64,
}

/// Extremality check for a semistable fibration: the j-map must ramify
/// with index exactly 3 over 0 and exactly 2 over 1728, its pole orders
/// must reproduce the I_n configuration, and these three fibers must
/// exhaust the Riemann–Hurwitz ramification budget 2·deg(j) − 2, so that
/// the Mordell–Weil rank is zero.
#[derive(Clone, Debug)]
pub struct NoriReport<F: Field> {
    pub j_degree: i64,
    pub over_zero: Vec<RamificationPoint<F>>,
    pub over_1728: Vec<RamificationPoint<F>>,
    pub poles: Vec<RamificationPoint<F>>,
    pub zero_indices_ok: bool,
    pub unit_indices_ok: bool,
    pub poles_match_configuration: bool,
    pub ramification_exhausted: bool,
    pub extremal: bool,
}

fn divisor_of_zeros<F: Field>(f: &Rf<F>) -> Vec<RamificationPoint<F>> {
    let mut out = vec![];
    for (part, mult) in f.num().squarefree_decomposition() {
        if part.is_constant() {
            continue;
        }
        // split the squarefree part no further: a uniform index per factor
        // is exactly what the checks below need, and the coprime basis of
        // a single squarefree polynomial is itself
        out.push(RamificationPoint {
            place: Place::Finite(part.monic()),
            index: mult as i64,
        });
    }
    let dn = f.num().degree().unwrap() as i64;
    let dd = f.den().degree().map_or(0, |d| d as i64);
    if dn < dd {
        out.push(RamificationPoint {
            place: Place::Infinity,
            index: dd - dn,
        });
    }
    out
}

pub fn nori_extremality_check<F: Field>(
    m: &WeierstrassModel<F>,
) -> Result<NoriReport<F>, FiberError> {
    let config = fiber_configuration(m)?;
    if !config.semistable() {
        return Err(FiberError::NotSemistable);
    }
    let inv = m.invariants()?;
    let j = &inv.j;
    assert!(!j.is_constant(), "semistable fibration has nonconstant j");
    let dn = j.num().degree().unwrap() as i64;
    let dd = j.den().degree().map_or(0, |d| d as i64);
    let j_degree = dn.max(dd);

    let over_zero = divisor_of_zeros(j);
    let over_1728 = divisor_of_zeros(&j.sub(&Rf::from_i64(1728)));
    let mut poles: Vec<RamificationPoint<F>> = vec![];
    for (part, mult) in j.den().squarefree_decomposition() {
        if !part.is_constant() {
            poles.push(RamificationPoint {
                place: Place::Finite(part.monic()),
                index: mult as i64,
            });
        }
    }
    if dn > dd {
        poles.push(RamificationPoint {
            place: Place::Infinity,
            index: dn - dd,
        });
    }

    let zero_indices_ok = over_zero.iter().all(|r| r.index == 3);
    let unit_indices_ok = over_1728.iter().all(|r| r.index == 2);

    // pole orders vs the I_n fibers, weighted by place degree
    let mut pole_widths: Vec<u64> = vec![];
    for r in &poles {
        for _ in 0..r.place.degree() {
            pole_widths.push(r.index as u64);
        }
    }
    pole_widths.sort_unstable_by(|a, b| b.cmp(a));
    let poles_match_configuration = pole_widths == config.multiplicative_widths()?;

    let wsum = |rs: &[RamificationPoint<F>]| -> i64 {
        rs.iter()
            .map(|r| (r.index - 1) * r.place.degree() as i64)
            .sum()
    };
    let ramification_exhausted =
        wsum(&over_zero) + wsum(&over_1728) + wsum(&poles) == 2 * j_degree - 2;

    let extremal =
        zero_indices_ok && unit_indices_ok && poles_match_configuration && ramification_exhausted;
    Ok(NoriReport {
        j_degree,
        over_zero,
        over_1728,
        poles,
        zero_indices_ok,
        unit_indices_ok,
        poles_match_configuration,
        ramification_exhausted,
        extremal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    type M = WeierstrassModel<Rat>;

    fn rf(cs: &[i64]) -> Rf<Rat> {
        Rf::from_poly(Poly::from_i64s(cs))
    }

    fn widths(m: &M) -> Vec<u64> {
        fiber_configuration(m)
            .unwrap()
            .multiplicative_widths()
            .unwrap()
    }

    #[test]
    fn classify_table() {
        use KodairaType::*;
        assert_eq!(classify_triple(Some(0), Some(0), 0).unwrap().0, I(0));
        assert_eq!(classify_triple(Some(0), Some(0), 5).unwrap().0, I(5));
        assert_eq!(classify_triple(Some(1), Some(1), 2).unwrap().0, II);
        assert_eq!(classify_triple(Some(1), Some(2), 3).unwrap().0, III);
        assert_eq!(classify_triple(Some(2), Some(2), 4).unwrap().0, IV);
        assert_eq!(classify_triple(Some(2), None, 6).unwrap().0, IStar(0));
        assert_eq!(classify_triple(Some(2), Some(3), 9).unwrap().0, IStar(3));
        assert_eq!(classify_triple(Some(3), Some(4), 8).unwrap().0, IVStar);
        assert_eq!(classify_triple(Some(3), Some(5), 9).unwrap().0, IIIStar);
        assert_eq!(classify_triple(None, Some(5), 10).unwrap().0, IIStar);
        // non-minimal input gets reduced first
        assert_eq!(classify_triple(Some(4), Some(6), 13).unwrap().0, I(1));
        assert_eq!(classify_triple(Some(-4), Some(-6), -7).unwrap().0, I(5));
    }

    #[test]
    fn semistable_configuration_weights() {
        // η² = ξ³ + (t²−6t+1)ξ² + 8t(t−1)ξ + 16t²: I_5 at 0 and ∞,
        // I_1 at both roots of t²−11t−1 (one degree-2 place)
        let m = M::short(rf(&[1, -6, 1]), rf(&[0, -8, 8]), rf(&[0, 0, 16]), "t");
        let config = fiber_configuration(&m).unwrap();
        assert_eq!(config.euler_number, 12);
        assert_eq!(widths(&m), vec![5, 5, 1, 1]);
        assert!(config.semistable());
        let report = surface_report(&m).unwrap();
        assert_eq!(report.chi, 1);
        assert_eq!(report.p_g, 0);
    }

    #[test]
    fn index_12_configurations() {
        // η² = ξ³ + (2−4t²)ξ² + ξ
        let m = M::short(rf(&[2, 0, -4]), Rf::one(), Rf::zero(), "t");
        assert_eq!(widths(&m), vec![8, 2, 1, 1]);
        // η² = ξ³ + t²ξ² − 8tξ + 16
        let m9 = M::short(rf(&[0, 0, 1]), rf(&[0, -8]), rf(&[16]), "t");
        assert_eq!(widths(&m9), vec![9, 1, 1, 1]);
    }

    #[test]
    fn additive_fibers() {
        // y² = x³ + t: II at 0, II* at ∞
        let m = M::short(Rf::zero(), Rf::zero(), Rf::var(), "t");
        let config = fiber_configuration(&m).unwrap();
        assert_eq!(config.euler_number, 12);
        assert!(!config.semistable());
        let types: Vec<String> = config.fibers.iter().map(|f| f.kodaira.to_string()).collect();
        assert_eq!(types, vec!["II", "II*"]);
        // y² = x³ + t²x: I_0* at 0 and ∞
        let m2 = M::short(Rf::zero(), rf(&[0, 0, 1]), Rf::zero(), "t");
        let config2 = fiber_configuration(&m2).unwrap();
        let types2: Vec<String> = config2.fibers.iter().map(|f| f.kodaira.to_string()).collect();
        assert_eq!(types2, vec!["I_0*", "I_0*"]);
        assert!(matches!(
            nori_extremality_check(&m2),
            Err(FiberError::NotSemistable)
        ));
    }

    #[test]
    fn extremality_of_semistable_examples() {
        let m5 = M::short(rf(&[1, -6, 1]), rf(&[0, -8, 8]), rf(&[0, 0, 16]), "t");
        let r = nori_extremality_check(&m5).unwrap();
        assert_eq!(r.j_degree, 12);
        assert!(r.extremal, "{:?}", r);
        let m8 = M::short(rf(&[2, 0, -4]), Rf::one(), Rf::zero(), "t");
        assert!(nori_extremality_check(&m8).unwrap().extremal);
        let m9 = M::short(rf(&[0, 0, 1]), rf(&[0, -8]), rf(&[16]), "t");
        assert!(nori_extremality_check(&m9).unwrap().extremal);
    }
}
