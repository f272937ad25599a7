//! The catalog: every torsion-free genus-zero congruence subgroup of index
//! 6 through 60, its cusp widths, and a construction recipe for the
//! semistable elliptic surface attached to it (index ≥ 12).

use serde_json::json;
use thiserror::Error;

use crate::arith::{rat_int, Field, Poly, QuadExt, QuadraticTag, Rat, Rf};
use crate::basechange::{
    cyclic_cover, pullback, redei_cover, BaseChangeError, BranchPoint, CoverMap,
};
use crate::fibers::{fiber_configuration, FiberError};
use crate::grouptheory::{group_data, CongruenceGroup, GroupData, GroupError};
use crate::weierstrass::{cubic_to_weierstrass, minimal_model, PlaneCubic, WeierstrassError, WeierstrassModel};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("{0} has index 6; no semistable elliptic surface with p_g ≥ 0 is attached")]
    Index6Unsupported(String),
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    BaseChange(#[from] BaseChangeError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Branch point written with integer data, for the static recipe table.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Bp {
    Fin(i64),
    Inf,
}

impl Bp {
    fn to_branch_point(self) -> BranchPoint<Rat> {
        match self {
            Bp::Fin(n) => BranchPoint::Finite(rat_int(n)),
            Bp::Inf => BranchPoint::Infinity,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Bp::Fin(n) => n.to_string(),
            Bp::Inf => "infinity".into(),
        }
    }
}

/// How a cover of the base line is produced.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum CoverRecipe {
    /// Cyclic cover fully ramified over two points; `lambda` is the
    /// default normal-form parameter (any nonzero value gives the same
    /// configuration).
    Cyclic { a: Bp, b: Bp, d: u32, lambda: i64 },
    /// Explicitly displayed map, identified by the target group.
    Verbatim(VerbatimMap),
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum VerbatimMap {
    /// (s+5)(11s⁴+70s³+200s²+250s+125) / (2s(s⁴+50s²+125))
    WidthFiveFull,
    /// (s³−3s+1)/(s²−s)
    WidthNineCubic,
    /// 1 − (s²+3)²/(s²+1)²
    TwelveComposite,
    /// ((s²−1)/(s²+1))²
    SixteenComposite,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Recipe {
    /// Index-6 groups: group data only.
    Unsupported,
    /// A displayed Weierstrass model or marked plane cubic.
    Direct,
    /// Pullback of another catalog surface along a cover.
    Pullback {
        base: &'static str,
        cover: CoverRecipe,
    },
}

#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub name: &'static str,
    pub index: u64,
    pub cusp_widths: &'static [u64],
    pub recipe: Recipe,
}

use Bp::{Fin, Inf};
use CoverRecipe::{Cyclic, Verbatim};

pub fn records() -> Vec<GroupRecord> {
    let rec = |name, index, cusp_widths, recipe| GroupRecord {
        name,
        index,
        cusp_widths,
        recipe,
    };
    let cyc = |base, a, b, d, lambda| Recipe::Pullback {
        base,
        cover: Cyclic { a, b, d, lambda },
    };
    vec![
        // index 6: no associated surface
        rec("Gamma(2)", 6, &[2, 2, 2], Recipe::Unsupported),
        rec("Gamma0(4)", 6, &[4, 1, 1], Recipe::Unsupported),
        // index 12: the six Beauville surfaces
        rec("Gamma(3)", 12, &[3, 3, 3, 3], Recipe::Direct),
        rec("Gamma0(4)&Gamma(2)", 12, &[4, 4, 2, 2], Recipe::Direct),
        rec("Gamma1(5)", 12, &[5, 5, 1, 1], Recipe::Direct),
        rec("Gamma0(6)", 12, &[6, 3, 2, 1], Recipe::Direct),
        rec("Gamma0(8)", 12, &[8, 2, 1, 1], Recipe::Direct),
        rec("Gamma0(9)", 12, &[9, 1, 1, 1], Recipe::Direct),
        // index 24
        rec(
            "Gamma(4)",
            24,
            &[4, 4, 4, 4, 4, 4],
            cyc("Gamma0(4)&Gamma(2)", Fin(-1), Fin(1), 2, 1),
        ),
        rec(
            "Gamma0(3)&Gamma(2)",
            24,
            &[6, 6, 6, 2, 2, 2],
            cyc("Gamma0(6)", Fin(0), Fin(-8), 2, -1),
        ),
        rec("Gamma1(7)", 24, &[7, 7, 7, 1, 1, 1], Recipe::Direct),
        rec(
            "Gamma1(8)",
            24,
            &[8, 8, 4, 2, 1, 1],
            cyc("Gamma0(8)", Fin(0), Fin(1), 2, 1),
        ),
        rec(
            "Gamma0(8)&Gamma(2)",
            24,
            &[8, 8, 2, 2, 2, 2],
            cyc("Gamma0(8)", Fin(-1), Fin(1), 2, 1),
        ),
        rec(
            "Gamma(8;4,1,2)",
            24,
            &[8, 4, 4, 4, 2, 2],
            cyc("Gamma0(4)&Gamma(2)", Fin(1), Inf, 2, 1),
        ),
        rec(
            "Gamma0(12)",
            24,
            &[12, 4, 3, 3, 1, 1],
            cyc("Gamma0(6)", Fin(1), Inf, 2, -1),
        ),
        rec(
            "Gamma0(16)",
            24,
            &[16, 4, 1, 1, 1, 1],
            cyc("Gamma0(8)", Fin(0), Inf, 2, 1),
        ),
        rec(
            "Gamma(16;16,2,2)",
            24,
            &[16, 2, 2, 2, 1, 1],
            cyc("Gamma0(8)", Fin(1), Inf, 2, 1),
        ),
        // index 36
        rec(
            "Gamma0(2)&Gamma(3)",
            36,
            &[6, 6, 6, 6, 3, 3, 3, 3],
            cyc("Gamma0(6)", Fin(1), Fin(-8), 3, -1),
        ),
        rec(
            "Gamma1(9)",
            36,
            &[9, 9, 9, 3, 3, 1, 1, 1],
            Recipe::Pullback {
                base: "Gamma0(9)",
                cover: Verbatim(VerbatimMap::WidthNineCubic),
            },
        ),
        rec(
            "Gamma(9;3,1,3)",
            36,
            &[9, 9, 3, 3, 3, 3, 3, 3],
            cyc("Gamma(3)", Fin(1), Inf, 3, 1),
        ),
        rec("Gamma1(10)", 36, &[10, 10, 5, 5, 2, 2, 1, 1], Recipe::Direct),
        rec(
            "Gamma0(18)",
            36,
            &[18, 9, 2, 2, 2, 1, 1, 1],
            cyc("Gamma0(6)", Fin(0), Inf, 3, 1),
        ),
        rec(
            "Gamma(27;27,3,3)",
            36,
            &[27, 3, 1, 1, 1, 1, 1, 1],
            cyc("Gamma0(9)", Fin(-3), Inf, 3, 1),
        ),
        // index 48
        rec(
            "Gamma1(8)&Gamma(2)",
            48,
            &[8, 8, 8, 8, 4, 4, 2, 2, 2, 2],
            cyc("Gamma0(8)", Fin(1), Fin(-1), 4, 1),
        ),
        rec(
            "Gamma(8;2,1,2)",
            48,
            &[8, 8, 4, 4, 4, 4, 4, 4, 4, 4],
            cyc("Gamma0(4)&Gamma(2)", Fin(1), Fin(-1), 4, 1),
        ),
        rec(
            "Gamma1(12)",
            48,
            &[12, 12, 6, 4, 4, 3, 3, 2, 1, 1],
            Recipe::Pullback {
                base: "Gamma0(6)",
                cover: Verbatim(VerbatimMap::TwelveComposite),
            },
        ),
        rec(
            "Gamma(12;6,1,2)",
            48,
            &[12, 6, 6, 6, 6, 4, 2, 2, 2, 2],
            cyc("Gamma0(6)", Fin(0), Fin(-8), 4, 1),
        ),
        rec(
            "Gamma0(16)&Gamma1(8)",
            48,
            &[16, 16, 4, 4, 2, 2, 1, 1, 1, 1],
            Recipe::Pullback {
                base: "Gamma0(8)",
                cover: Verbatim(VerbatimMap::SixteenComposite),
            },
        ),
        rec(
            "Gamma(16;8,2,2)",
            48,
            &[16, 16, 2, 2, 2, 2, 2, 2, 2, 2],
            cyc("Gamma0(4)&Gamma(2)", Fin(0), Inf, 4, 1),
        ),
        rec(
            "Gamma(24;24,2,2)",
            48,
            &[24, 8, 3, 3, 3, 3, 1, 1, 1, 1],
            cyc("Gamma0(6)", Fin(1), Inf, 4, 1),
        ),
        rec(
            "Gamma(32;32,4,2)",
            48,
            &[32, 8, 1, 1, 1, 1, 1, 1, 1, 1],
            cyc("Gamma0(8)", Fin(0), Inf, 4, 1),
        ),
        // index 60
        rec(
            "Gamma(5)",
            60,
            &[5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5],
            Recipe::Pullback {
                base: "Gamma1(5)",
                cover: Verbatim(VerbatimMap::WidthFiveFull),
            },
        ),
        rec(
            "Gamma0(25)&Gamma1(5)",
            60,
            &[25, 25, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            cyc("Gamma1(5)", Fin(0), Inf, 5, 1),
        ),
    ]
}

pub fn find_record(name: &str) -> Result<GroupRecord, CatalogError> {
    records()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| CatalogError::UnknownGroup(name.to_string()))
}

fn rf(cs: &[i64]) -> Rf<Rat> {
    Rf::from_poly(Poly::from_i64s(cs))
}

fn poly(cs: &[i64]) -> Poly<Rat> {
    Poly::from_i64s(cs)
}

/// The displayed models of the Beauville surfaces and of the two
/// index-region exceptions that need their own equations.
pub fn direct_model(name: &str) -> Result<WeierstrassModel<Rat>, CatalogError> {
    let zero = Rf::<Rat>::zero();
    let one = Rf::<Rat>::one();
    let t = Rf::<Rat>::var();
    Ok(match name {
        // y² + 3t·xy + (t³−1)y = x³, the Hesse family in Weierstrass form:
        // Δ = 27(t³−1)³ and j = 27t³(t³+8)³/(t³−1)³
        "Gamma(3)" => WeierstrassModel::new(
            Rf::from_i64(3).mul(&t),
            zero.clone(),
            rf(&[-1, 0, 0, 1]),
            zero.clone(),
            zero,
            "t",
        ),
        // η² = ξ³ + (t²+1)ξ² + t²ξ
        "Gamma0(4)&Gamma(2)" => {
            WeierstrassModel::short(rf(&[1, 0, 1]), rf(&[0, 0, 1]), zero, "t")
        }
        // η² = ξ³ + (t²−6t+1)ξ² + 8t(t−1)ξ + 16t²
        "Gamma1(5)" => WeierstrassModel::short(
            rf(&[1, -6, 1]),
            rf(&[0, -8, 8]),
            rf(&[0, 0, 16]),
            "t",
        ),
        // (x+y)(y+z)(z+x) + t·xyz marked at (1:−1:0)
        "Gamma0(6)" => {
            // expansion: x²y + x²z + xy² + y²z + xz² + yz² + (2+t)·xyz
            let mut coeffs: [Rf<Rat>; 10] = std::array::from_fn(|_| Rf::zero());
            coeffs[1] = one.clone(); // x²y
            coeffs[2] = one.clone(); // x²z
            coeffs[3] = one.clone(); // xy²
            coeffs[7] = one.clone(); // y²z
            coeffs[5] = one.clone(); // xz²
            coeffs[8] = one.clone(); // yz²
            coeffs[4] = rf(&[2]).add(&t); // xyz
            let cubic = PlaneCubic::new(coeffs, [one.clone(), one.neg(), zero.clone()]);
            cubic_to_weierstrass(&cubic, "t")?
        }
        // η² = ξ³ + (2−4t²)ξ² + ξ
        "Gamma0(8)" => WeierstrassModel::short(rf(&[2, 0, -4]), one, zero, "t"),
        // η² = ξ³ + t²ξ² − 8tξ + 16
        "Gamma0(9)" => {
            WeierstrassModel::short(rf(&[0, 0, 1]), rf(&[0, -8]), rf(&[16]), "t")
        }
        // y² + (1−c)xy − by = x³ − bx² with b = t³−t², c = t²−t
        "Gamma1(7)" => {
            let b = rf(&[0, 0, -1, 1]);
            let c = rf(&[0, -1, 1]);
            WeierstrassModel::new(
                one.sub(&c),
                b.neg(),
                b.neg(),
                zero.clone(),
                zero,
                "t",
            )
        }
        // y² = x(x² + ax + b),
        // a = −(2t²−2t+1)(4t⁴−12t³+6t²+2t−1), b = 16(t²−3t+1)(t−1)⁵t⁵
        "Gamma1(10)" => {
            let a = rf(&[1, -2, 2]).mul(&rf(&[-1, 2, 6, -12, 4])).neg();
            let b = rf(&[16, -48, 16])
                .mul(&rf(&[-1, 1]).pow(5))
                .mul(&t.pow(5));
            WeierstrassModel::short(a, b, Rf::zero(), "t")
        }
        _ => return Err(CatalogError::UnknownGroup(name.to_string())),
    })
}

fn verbatim_map(which: VerbatimMap) -> Rf<Rat> {
    match which {
        VerbatimMap::WidthFiveFull => {
            let num = poly(&[5, 1]).mul(&poly(&[125, 250, 200, 70, 11]));
            let den = poly(&[0, 2]).mul(&poly(&[125, 0, 50, 0, 1]));
            Rf::new(num, den)
        }
        VerbatimMap::WidthNineCubic => Rf::new(poly(&[1, -3, 0, 1]), poly(&[0, -1, 1])),
        VerbatimMap::TwelveComposite => {
            let q = rf(&[3, 0, 1]).div(&rf(&[1, 0, 1]));
            Rf::one().sub(&q.mul(&q))
        }
        VerbatimMap::SixteenComposite => {
            let q = rf(&[-1, 0, 1]).div(&rf(&[1, 0, 1]));
            q.mul(&q)
        }
    }
}

fn build_cover(recipe: &CoverRecipe, lambda: Option<&Rat>) -> Result<CoverMap<Rat>, CatalogError> {
    Ok(match recipe {
        Cyclic { a, b, d, lambda: l0 } => {
            let l = lambda.cloned().unwrap_or_else(|| rat_int(*l0));
            cyclic_cover(&a.to_branch_point(), &b.to_branch_point(), *d, l)?
        }
        Verbatim(which) => CoverMap::new(verbatim_map(*which)),
    })
}

/// Builds the semistable elliptic surface of a catalog group, recursively
/// through its pullback recipe. `lambda` overrides the normal-form
/// parameter of every cyclic cover on the way (the configuration does not
/// depend on it).
pub fn construct_surface(
    name: &str,
    lambda: Option<&Rat>,
) -> Result<WeierstrassModel<Rat>, CatalogError> {
    let record = find_record(name)?;
    match &record.recipe {
        Recipe::Unsupported => Err(CatalogError::Index6Unsupported(name.to_string())),
        Recipe::Direct => direct_model(name),
        Recipe::Pullback { base, cover } => {
            let base_model = construct_surface(base, lambda)?;
            let cover = build_cover(cover, lambda)?;
            Ok(minimal_model(&pullback(&base_model, &cover))?)
        }
    }
}

/// Six independent checks of the group-theoretic data of a record.
#[derive(Clone, Debug)]
pub struct GroupVerification {
    pub name: String,
    pub data: GroupData,
    pub index_matches: bool,
    pub widths_match: bool,
    pub widths_sum_to_index: bool,
    pub torsion_free: bool,
    pub genus_zero: bool,
    pub level_divides_width_lcm: bool,
}

impl GroupVerification {
    pub fn all_pass(&self) -> bool {
        self.index_matches
            && self.widths_match
            && self.widths_sum_to_index
            && self.torsion_free
            && self.genus_zero
            && self.level_divides_width_lcm
    }
}

pub fn verify_group(record: &GroupRecord, level_bound: u64) -> Result<GroupVerification, CatalogError> {
    let group = CongruenceGroup::parse(record.name)?;
    let data = group_data(&group, level_bound)?;
    let widths: Vec<u64> = record.cusp_widths.to_vec();
    let lcm = |a: u64, b: u64| {
        let (mut x, mut y) = (a, b);
        while y != 0 {
            let r = x % y;
            x = y;
            y = r;
        }
        a / x * b
    };
    let width_lcm = widths.iter().copied().fold(1, lcm);
    Ok(GroupVerification {
        name: record.name.to_string(),
        index_matches: data.index == record.index,
        widths_match: data.cusp_widths == widths,
        widths_sum_to_index: widths.iter().sum::<u64>() == record.index,
        torsion_free: data.torsion_free,
        genus_zero: data.genus == 0,
        level_divides_width_lcm: width_lcm % data.level == 0,
        data,
    })
}

/// Verification of a constructed surface against its group record.
#[derive(Clone, Debug)]
pub struct SurfaceVerification {
    pub name: String,
    pub widths: Vec<u64>,
    pub euler_number: u64,
    pub widths_match_cusps: bool,
    pub euler_matches_index: bool,
    pub semistable: bool,
    pub extremal: bool,
}

impl SurfaceVerification {
    pub fn all_pass(&self) -> bool {
        self.widths_match_cusps && self.euler_matches_index && self.semistable && self.extremal
    }
}

pub fn verify_surface(
    record: &GroupRecord,
    lambda: Option<&Rat>,
) -> Result<SurfaceVerification, CatalogError> {
    let model = construct_surface(record.name, lambda)?;
    let config = fiber_configuration(&model)?;
    let semistable = config.semistable();
    let widths = config.multiplicative_widths()?;
    let extremal = crate::fibers::nori_extremality_check(&model)?.extremal;
    Ok(SurfaceVerification {
        name: record.name.to_string(),
        widths_match_cusps: widths == record.cusp_widths,
        euler_matches_index: config.euler_number == record.index,
        widths,
        euler_number: config.euler_number,
        semistable,
        extremal,
    })
}

// ---------------------------------------------------------------------------
// Quadratic base changes of the six Euler-number-12 surfaces: the K3 survey.

/// A cusp of one of the six base surfaces: rational, infinite, or one root
/// of a monic irreducible quadratic (conjugate pairs come together).
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Cusp {
    Rational(i64),
    Infinity,
    /// Root of x² + c1·x + c0.
    QuadRoot { c0: i64, c1: i64, conjugate: bool },
}

impl Cusp {
    pub fn label(&self) -> String {
        match self {
            Cusp::Rational(n) => n.to_string(),
            Cusp::Infinity => "infinity".into(),
            Cusp::QuadRoot { c0, c1, conjugate } => {
                let var = Poly::<Rat>::from_i64s(&[*c0, *c1, 1]).to_string();
                if *conjugate {
                    format!("conj root of {}", var)
                } else {
                    format!("root of {}", var)
                }
            }
        }
    }
}

/// The cusps of the six index-12 surfaces, in the coordinates of the
/// catalog models.
pub fn base_cusps(name: &str) -> Option<Vec<Cusp>> {
    let quad = |c0: i64, c1: i64| {
        [
            Cusp::QuadRoot { c0, c1, conjugate: false },
            Cusp::QuadRoot { c0, c1, conjugate: true },
        ]
    };
    Some(match name {
        "Gamma(3)" => {
            let [a, b] = quad(1, 1);
            vec![Cusp::Infinity, Cusp::Rational(1), a, b]
        }
        "Gamma0(4)&Gamma(2)" => vec![
            Cusp::Rational(0),
            Cusp::Infinity,
            Cusp::Rational(1),
            Cusp::Rational(-1),
        ],
        "Gamma1(5)" => {
            let [a, b] = quad(-1, -11);
            vec![Cusp::Rational(0), Cusp::Infinity, a, b]
        }
        "Gamma0(6)" => vec![
            Cusp::Infinity,
            Cusp::Rational(0),
            Cusp::Rational(1),
            Cusp::Rational(-8),
        ],
        "Gamma0(8)" => vec![
            Cusp::Infinity,
            Cusp::Rational(0),
            Cusp::Rational(1),
            Cusp::Rational(-1),
        ],
        "Gamma0(9)" => {
            let [a, b] = quad(9, -3);
            vec![Cusp::Infinity, Cusp::Rational(-3), a, b]
        }
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct SurveyEntry {
    pub base: String,
    pub branch: (String, String),
    /// Weighted I_n configuration of the base-changed surface.
    pub config: Vec<u64>,
    pub euler_number: u64,
}

fn lift_model(m: &WeierstrassModel<Rat>, tag: &std::sync::Arc<QuadraticTag>) -> WeierstrassModel<QuadExt> {
    let _ = tag;
    let lift = |f: &Rf<Rat>| {
        Rf::new(
            f.num().map_coeffs(|c| QuadExt::from_rat(c.clone())),
            f.den().map_coeffs(|c| QuadExt::from_rat(c.clone())),
        )
    };
    WeierstrassModel::new(
        lift(&m.a1),
        lift(&m.a2),
        lift(&m.a3),
        lift(&m.a4),
        lift(&m.a6),
        &m.coordinate,
    )
}

pub fn survey_config(
    model: &WeierstrassModel<Rat>,
    a: &Cusp,
    b: &Cusp,
) -> Result<(Vec<u64>, u64), CatalogError> {
    use Cusp::*;
    let bp = |c: &Cusp| -> Option<BranchPoint<Rat>> {
        match c {
            Rational(n) => Some(BranchPoint::Finite(rat_int(*n))),
            Infinity => Some(BranchPoint::Infinity),
            QuadRoot { .. } => None,
        }
    };
    let widths_of = |m: &WeierstrassModel<Rat>| -> Result<(Vec<u64>, u64), CatalogError> {
        let config = fiber_configuration(m)?;
        Ok((config.multiplicative_widths()?, config.euler_number))
    };
    match (a, b) {
        // conjugate pair: rational cover branched over both roots
        (
            QuadRoot { c0, c1, .. },
            QuadRoot { c0: d0, c1: d1, .. },
        ) if (c0, c1) == (d0, d1) => {
            let q = Poly::from_i64s(&[*c0, *c1, 1]);
            let cover = redei_cover(&q, 2)?;
            widths_of(&pullback(model, &cover))
        }
        // two rational (or infinite) cusps
        _ if bp(a).is_some() && bp(b).is_some() => {
            let cover = cyclic_cover(&bp(a).unwrap(), &bp(b).unwrap(), 2, Rat::one())?;
            widths_of(&pullback(model, &cover))
        }
        // mixed: work over the quadratic extension
        _ => {
            let (rat_cusp, quad) = if bp(a).is_some() { (a, b) } else { (b, a) };
            let (c0, c1, conj) = match quad {
                QuadRoot { c0, c1, conjugate } => (*c0, *c1, *conjugate),
                _ => unreachable!(),
            };
            let tag = QuadraticTag::new(rat_int(c1), rat_int(c0));
            let theta = QuadExt::theta(&tag);
            let root = if conj { theta.conj() } else { theta };
            let rat_bp: BranchPoint<QuadExt> = match rat_cusp {
                Rational(n) => BranchPoint::Finite(QuadExt::from_rat(rat_int(*n))),
                Infinity => BranchPoint::Infinity,
                _ => unreachable!(),
            };
            let cover = cyclic_cover(&rat_bp, &BranchPoint::Finite(root), 2, QuadExt::one())?;
            let lifted = lift_model(model, &tag);
            let m = pullback(&lifted, &cover);
            let config = fiber_configuration(&m)?;
            Ok((config.multiplicative_widths()?, config.euler_number))
        }
    }
}

/// All quadratic base changes of the six Euler-number-12 surfaces branched
/// at two of the four cusps: 6 surfaces × 6 cusp pairs = 36 candidates,
/// every one a semistable elliptic K3.
pub fn mp_k3_survey() -> Result<Vec<SurveyEntry>, CatalogError> {
    let mut out = vec![];
    for name in [
        "Gamma(3)",
        "Gamma0(4)&Gamma(2)",
        "Gamma1(5)",
        "Gamma0(6)",
        "Gamma0(8)",
        "Gamma0(9)",
    ] {
        let model = construct_surface(name, None)?;
        let cusps = base_cusps(name).unwrap();
        for i in 0..cusps.len() {
            for jdx in (i + 1)..cusps.len() {
                let (a, b) = (&cusps[i], &cusps[jdx]);
                let (config, euler_number) = survey_config(&model, a, b)?;
                out.push(SurveyEntry {
                    base: name.to_string(),
                    branch: (a.label(), b.label()),
                    config,
                    euler_number,
                });
            }
        }
    }
    Ok(out)
}

pub fn distinct_configs(entries: &[SurveyEntry]) -> Vec<Vec<u64>> {
    let mut configs: Vec<Vec<u64>> = entries.iter().map(|e| e.config.clone()).collect();
    configs.sort();
    configs.dedup();
    configs
}

/// Versioned JSON dump of the catalog data.
pub fn catalog_json() -> serde_json::Value {
    let groups: Vec<serde_json::Value> = records()
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "index": r.index,
                "cusp_widths": r.cusp_widths,
                "constructible": r.recipe != Recipe::Unsupported,
            })
        })
        .collect();
    json!({
        "version": 1,
        "groups": groups,
    })
}

/// Independently published alternate models used as cross-checks.
pub fn crosscheck_models() -> Vec<(&'static str, WeierstrassModel<Rat>)> {
    // y² = x(x−1)(x−c), c = (t+1/t)²/4
    let t = Rf::<Rat>::var();
    let c = t
        .add(&t.inv())
        .pow(2)
        .div(&Rf::from_i64(4));
    let gamma4 = WeierstrassModel::short(
        Rf::one().add(&c).neg(),
        c.clone(),
        Rf::zero(),
        "t",
    )
    .clear_denominators();
    // y² = x³ − 2(8t⁴−16t³+16t²−8t+1)x² + (8t²−8t+1)(2t−1)⁴x
    let a2 = rf(&[1, -8, 16, -16, 8]).mul(&Rf::from_i64(-2));
    let a4 = rf(&[1, -8, 8]).mul(&rf(&[-1, 2]).pow(4));
    let gamma8412 = WeierstrassModel::short(a2, a4, Rf::zero(), "t");
    // y² + (t²+1)xy − t²(t²−1)y = x³ − t²(t²−1)x²
    let w = rf(&[0, 0, -1, 0, 1]); // t²(t²−1) = t⁴ − t²
    let gamma012 = WeierstrassModel::new(
        rf(&[1, 0, 1]),
        w.neg(),
        w.neg(),
        Rf::zero(),
        Rf::zero(),
        "t",
    );
    vec![
        ("Gamma(4)", gamma4),
        ("Gamma(8;4,1,2)", gamma8412),
        ("Gamma0(12)", gamma012),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn widths(name: &str) -> Vec<u64> {
        let m = construct_surface(name, None).unwrap();
        fiber_configuration(&m)
            .unwrap()
            .multiplicative_widths()
            .unwrap()
    }

    #[test]
    fn index_six_is_unsupported() {
        assert!(matches!(
            construct_surface("Gamma(2)", None),
            Err(CatalogError::Index6Unsupported(_))
        ));
        assert!(matches!(
            construct_surface("Gamma0(7)", None),
            Err(CatalogError::UnknownGroup(_))
        ));
    }

    #[test]
    fn beauville_surfaces() {
        for (name, expected) in [
            ("Gamma(3)", vec![3, 3, 3, 3]),
            ("Gamma0(4)&Gamma(2)", vec![4, 4, 2, 2]),
            ("Gamma1(5)", vec![5, 5, 1, 1]),
            ("Gamma0(6)", vec![6, 3, 2, 1]),
            ("Gamma0(8)", vec![8, 2, 1, 1]),
            ("Gamma0(9)", vec![9, 1, 1, 1]),
        ] {
            assert_eq!(widths(name), expected, "{name}");
        }
    }

    #[test]
    fn sample_pullback_surfaces() {
        assert_eq!(widths("Gamma(9;3,1,3)"), vec![9, 9, 3, 3, 3, 3, 3, 3]);
        assert_eq!(widths("Gamma1(9)"), vec![9, 9, 9, 3, 3, 1, 1, 1]);
        assert_eq!(
            widths("Gamma0(25)&Gamma1(5)"),
            vec![25, 25, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]
        );
    }

    #[test]
    fn kubert_exceptions() {
        assert_eq!(widths("Gamma1(7)"), vec![7, 7, 7, 1, 1, 1]);
        assert_eq!(widths("Gamma1(10)"), vec![10, 10, 5, 5, 2, 2, 1, 1]);
    }

    #[test]
    fn hesse_cubic_matches_catalog_model() {
        // x³ + y³ + z³ − 3t·xyz marked at (1:−1:0) has the same j-invariant
        // as the catalog's Weierstrass form.
        let t = Rf::<Rat>::var();
        let one = Rf::<Rat>::one();
        let mut coeffs: [Rf<Rat>; 10] = std::array::from_fn(|_| Rf::zero());
        coeffs[0] = one.clone(); // x³
        coeffs[6] = one.clone(); // y³
        coeffs[9] = one.clone(); // z³
        coeffs[4] = Rf::from_i64(-3).mul(&t); // xyz
        let cubic = PlaneCubic::new(coeffs, [one.clone(), one.neg(), Rf::zero()]);
        let from_cubic = cubic_to_weierstrass(&cubic, "t").unwrap();
        let catalog = direct_model("Gamma(3)").unwrap();
        assert_eq!(
            from_cubic.invariants().unwrap().j,
            catalog.invariants().unwrap().j
        );
    }

    #[test]
    fn crosscheck_configurations() {
        for (name, model) in crosscheck_models() {
            let record = find_record(name).unwrap();
            let config = fiber_configuration(&model).unwrap();
            assert_eq!(
                config.multiplicative_widths().unwrap(),
                record.cusp_widths,
                "{name}"
            );
        }
    }

    #[test]
    fn lambda_override_keeps_configuration() {
        let two = rat_int(2);
        let m = construct_surface("Gamma0(16)", Some(&two)).unwrap();
        assert_eq!(
            fiber_configuration(&m)
                .unwrap()
                .multiplicative_widths()
                .unwrap(),
            vec![16, 4, 1, 1, 1, 1]
        );
    }
}
