//! Congruence subgroups of the modular group: membership predicates mod m,
//! coset enumeration in PSL₂(Z/m), cusp widths, torsion counts and genus.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("level {level} exceeds the enumeration bound {bound}")]
    LevelTooLarge { level: u64, bound: u64 },
    #[error("cannot parse group label: {0}")]
    BadLabel(String),
}

/// 2×2 matrix over Z/m with determinant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    pub m: u64,
    /// entries (a, b, c, d) reduced mod m
    pub e: [u64; 4],
}

impl ModMatrix {
    pub fn new(m: u64, a: i64, b: i64, c: i64, d: i64) -> Self {
        let red = |x: i64| x.rem_euclid(m as i64) as u64;
        ModMatrix {
            m,
            e: [red(a), red(b), red(c), red(d)],
        }
    }

    pub fn identity(m: u64) -> Self {
        ModMatrix::new(m, 1, 0, 0, 1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m);
        let m = self.m.max(1);
        let [a, b, c, d] = self.e;
        let [e, f, g, h] = rhs.e;
        ModMatrix {
            m: self.m,
            e: [
                (a * e + b * g) % m,
                (a * f + b * h) % m,
                (c * e + d * g) % m,
                (c * f + d * h) % m,
            ],
        }
    }

    /// Inverse of a determinant-1 matrix: [[d, −b], [−c, a]].
    pub fn inv(&self) -> Self {
        let m = self.m;
        let [a, b, c, d] = self.e;
        ModMatrix::new(m as u64, d as i64, -(b as i64), -(c as i64), a as i64)
    }

    pub fn neg(&self) -> Self {
        let m = self.m;
        ModMatrix {
            m,
            e: self.e.map(|x| (m.max(1) - x) % m.max(1)),
        }
    }

    pub fn reduce(&self, to: u64) -> Self {
        assert!(self.m % to == 0);
        ModMatrix {
            m: to,
            e: self.e.map(|x| x % to.max(1)),
        }
    }

    pub fn s(m: u64) -> Self {
        ModMatrix::new(m, 0, -1, 1, 0)
    }

    pub fn t(m: u64) -> Self {
        ModMatrix::new(m, 1, 1, 0, 1)
    }
}

/// A congruence subgroup given by a membership predicate at its level.
#[derive(Clone, PartialEq, Debug)]
pub enum CongruenceGroup {
    /// The full modular group (level 1).
    Modular,
    /// Γ0(n): lower-left entry ≡ 0.
    Gamma0(u64),
    /// Γ1(n): Γ0(n) with diagonal ≡ 1.
    Gamma1(u64),
    /// Γ(n): principal, all of b, c ≡ 0 and diagonal ≡ 1.
    Principal(u64),
    /// Four-parameter family Γ(m; n, ε, χ) with n | m, ε | χ... read from
    /// the label Γ(m; m/d, ε, χ); membership is
    ///   a ≡ d ≡ 1 (mod m/(εχ)), b ≡ 0 (mod d), c ≡ 0 (mod m/χ),
    ///   (a−1)/(m/(εχ)) ≡ c/(m/χ) (mod χ).
    FourParameter { m: u64, n: u64, eps: u64, chi: u64 },
    Intersection(Box<CongruenceGroup>, Box<CongruenceGroup>),
}

fn lcm(a: u64, b: u64) -> u64 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    a / x * b
}

impl CongruenceGroup {
    pub fn level(&self) -> u64 {
        match self {
            CongruenceGroup::Modular => 1,
            CongruenceGroup::Gamma0(n)
            | CongruenceGroup::Gamma1(n)
            | CongruenceGroup::Principal(n) => *n,
            CongruenceGroup::FourParameter { m, .. } => *m,
            CongruenceGroup::Intersection(a, b) => lcm(a.level(), b.level()),
        }
    }

    /// Tests a matrix given mod the group's level (exactly).
    pub fn contains_exact(&self, g: &ModMatrix) -> bool {
        debug_assert_eq!(g.m, self.level());
        let [a, b, c, d] = g.e;
        match self {
            CongruenceGroup::Modular => true,
            CongruenceGroup::Gamma0(n) => c % n == 0,
            CongruenceGroup::Gamma1(n) => c % n == 0 && a % n == 1 && d % n == 1,
            CongruenceGroup::Principal(n) => {
                b % n == 0 && c % n == 0 && a % n == 1 && d % n == 1
            }
            CongruenceGroup::FourParameter { m, n, eps, chi } => {
                let dd = m / n; // the parameter d of the family
                let q1 = m / (eps * chi);
                let q2 = m / chi;
                a % q1 == 1
                    && d % q1 == 1
                    && b % dd == 0
                    && c % q2 == 0
                    && ((a - 1) / q1) % chi == (c / q2) % chi
            }
            CongruenceGroup::Intersection(x, y) => {
                x.contains_exact(&g.reduce(x.level())) && y.contains_exact(&g.reduce(y.level()))
            }
        }
    }

    /// Tests membership in the image in PSL₂: accepts g or −g, where g is
    /// given mod any multiple of the level.
    pub fn contains_projective(&self, g: &ModMatrix) -> bool {
        let r = g.reduce(self.level());
        self.contains_exact(&r) || self.contains_exact(&r.neg())
    }

    /// Parses labels like "Gamma0(6)", "Gamma1(8)", "Gamma(2)",
    /// "Gamma(16;16,2,2)", "Gamma(1)", and intersections joined by "&".
    pub fn parse(label: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadLabel(label.to_string());
        let label = label.trim();
        if let Some((l, r)) = label.split_once('&') {
            return Ok(CongruenceGroup::Intersection(
                Box::new(CongruenceGroup::parse(l)?),
                Box::new(CongruenceGroup::parse(r)?),
            ));
        }
        let (head, rest) = label.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let parse_u64 = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
        match head.trim() {
            "Gamma0" => Ok(CongruenceGroup::Gamma0(parse_u64(inner)?)),
            "Gamma1" => Ok(CongruenceGroup::Gamma1(parse_u64(inner)?)),
            "Gamma" => {
                if let Some((m, params)) = inner.split_once(';') {
                    let m = parse_u64(m)?;
                    let ps: Vec<u64> = params
                        .split(',')
                        .map(parse_u64)
                        .collect::<Result<_, _>>()?;
                    if ps.len() != 3 {
                        return Err(bad());
                    }
                    let (n, eps, chi) = (ps[0], ps[1], ps[2]);
                    if n == 0 || m % n != 0 || eps * chi == 0 || m % (eps * chi) != 0 {
                        return Err(bad());
                    }
                    Ok(CongruenceGroup::FourParameter { m, n, eps, chi })
                } else {
                    let n = parse_u64(inner)?;
                    if n == 1 {
                        Ok(CongruenceGroup::Modular)
                    } else {
                        Ok(CongruenceGroup::Principal(n))
                    }
                }
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CongruenceGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceGroup::Modular => write!(f, "Gamma(1)"),
            CongruenceGroup::Gamma0(n) => write!(f, "Gamma0({})", n),
            CongruenceGroup::Gamma1(n) => write!(f, "Gamma1({})", n),
            CongruenceGroup::Principal(n) => write!(f, "Gamma({})", n),
            CongruenceGroup::FourParameter { m, n, eps, chi } => {
                write!(f, "Gamma({};{},{},{})", m, n, eps, chi)
            }
            CongruenceGroup::Intersection(a, b) => write!(f, "{}&{}", a, b),
        }
    }
}

/// Coset table of the group in PSL₂(Z): representatives and the right
/// action of the generators S = [[0,−1],[1,0]] and T = [[1,1],[0,1]].
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub reps: Vec<ModMatrix>,
    pub s_action: Vec<usize>,
    pub t_action: Vec<usize>,
}

pub const DEFAULT_LEVEL_BOUND: u64 = 32;

/// Enumerates cosets Γg in PSL₂(Z) via the reduction to PSL₂(Z/m),
/// breadth-first over right multiplication by S and T.
pub fn coset_enumeration(
    group: &CongruenceGroup,
    level_bound: u64,
) -> Result<CosetTable, GroupError> {
    let m = group.level();
    if m > level_bound {
        return Err(GroupError::LevelTooLarge {
            level: m,
            bound: level_bound,
        });
    }
    let s = ModMatrix::s(m);
    let t = ModMatrix::t(m);
    let same_coset =
        |a: &ModMatrix, b: &ModMatrix| group.contains_projective(&a.mul(&b.inv()));
    let gens = [&s, &t];
    let mut reps = vec![ModMatrix::identity(m)];
    let mut actions: [Vec<Option<usize>>; 2] = [vec![None], vec![None]];
    let mut frontier = 0;
    while frontier < reps.len() {
        for (gi, gen) in gens.iter().enumerate() {
            let image = reps[frontier].mul(gen);
            let found = reps.iter().position(|r| same_coset(&image, r));
            let idx = match found {
                Some(i) => i,
                None => {
                    reps.push(image);
                    actions[0].push(None);
                    actions[1].push(None);
                    reps.len() - 1
                }
            };
            actions[gi][frontier] = Some(idx);
        }
        frontier += 1;
    }
    let [s_action, t_action] = actions;
    Ok(CosetTable {
        reps,
        s_action: s_action.into_iter().map(|x| x.unwrap()).collect(),
        t_action: t_action.into_iter().map(|x| x.unwrap()).collect(),
    })
}

fn cycle_lengths(perm: &[usize]) -> Vec<u64> {
    let mut seen = vec![false; perm.len()];
    let mut out = vec![];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Index, cusp widths, elliptic point counts and genus of the group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupData {
    pub label: String,
    pub level: u64,
    pub index: u64,
    /// T-orbit lengths on the cosets, sorted descending; their number is
    /// the cusp count and their sum the index.
    pub cusp_widths: Vec<u64>,
    pub e2: u64,
    pub e3: u64,
    pub genus: u64,
    pub torsion_free: bool,
}

pub fn group_data(
    group: &CongruenceGroup,
    level_bound: u64,
) -> Result<GroupData, GroupError> {
    let table = coset_enumeration(group, level_bound)?;
    let mu = table.reps.len() as u64;
    let cusp_widths = cycle_lengths(&table.t_action);
    debug_assert_eq!(cusp_widths.iter().sum::<u64>(), mu);
    let e2 = table
        .s_action
        .iter()
        .enumerate()
        .filter(|(i, &x)| *i == x)
        .count() as u64;
    // i·(ST) = (i·S)·T
    let e3 = (0..table.reps.len())
        .filter(|&i| table.t_action[table.s_action[i]] == i)
        .count() as u64;
    let e_inf = cusp_widths.len() as u64;
    let num = 12 + mu;
    let sub = 3 * e2 + 4 * e3 + 6 * e_inf;
    assert!(num >= sub && (num - sub) % 12 == 0, "genus formula failure");
    Ok(GroupData {
        label: group.to_string(),
        level: group.level(),
        index: mu,
        cusp_widths,
        e2,
        e3,
        genus: (num - sub) / 12,
        torsion_free: e2 == 0 && e3 == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(label: &str) -> GroupData {
        group_data(
            &CongruenceGroup::parse(label).unwrap(),
            DEFAULT_LEVEL_BOUND,
        )
        .unwrap()
    }

    #[test]
    fn modular_group_itself() {
        let d = data("Gamma(1)");
        assert_eq!(d.index, 1);
        assert_eq!(d.cusp_widths, vec![1]);
        assert_eq!((d.e2, d.e3, d.genus), (1, 1, 0));
        assert!(!d.torsion_free);
    }

    #[test]
    fn index_six_groups() {
        let d2 = data("Gamma(2)");
        assert_eq!(d2.index, 6);
        assert_eq!(d2.cusp_widths, vec![2, 2, 2]);
        assert!(d2.torsion_free);
        let d04 = data("Gamma0(4)");
        assert_eq!(d04.index, 6);
        assert_eq!(d04.cusp_widths, vec![4, 1, 1]);
        assert!(d04.torsion_free);
        // Γ0(2) and Γ0(3) have torsion
        assert_eq!(data("Gamma0(2)").e2, 1);
        assert_eq!(data("Gamma0(3)").e3, 1);
    }

    #[test]
    fn index_twelve_groups() {
        for (label, widths) in [
            ("Gamma(3)", vec![3, 3, 3, 3]),
            ("Gamma0(4)&Gamma(2)", vec![4, 4, 2, 2]),
            ("Gamma1(5)", vec![5, 5, 1, 1]),
            ("Gamma0(6)", vec![6, 3, 2, 1]),
            ("Gamma0(8)", vec![8, 2, 1, 1]),
            ("Gamma0(9)", vec![9, 1, 1, 1]),
        ] {
            let d = data(label);
            assert_eq!(d.index, 12, "{label}");
            assert_eq!(d.cusp_widths, widths, "{label}");
            assert!(d.torsion_free, "{label}");
            assert_eq!(d.genus, 0, "{label}");
        }
    }

    #[test]
    fn four_parameter_groups() {
        let d = data("Gamma(16;16,2,2)");
        assert_eq!(d.index, 24);
        assert_eq!(d.cusp_widths, vec![16, 2, 2, 2, 1, 1]);
        assert!(d.torsion_free);
        assert_eq!(d.genus, 0);
        let d2 = data("Gamma(8;4,1,2)");
        assert_eq!(d2.index, 24);
        assert_eq!(d2.cusp_widths, vec![8, 4, 4, 4, 2, 2]);
    }

    #[test]
    fn genus_one_example() {
        let d = data("Gamma0(11)");
        assert_eq!(d.index, 12);
        assert_eq!(d.genus, 1);
    }

    #[test]
    fn level_bound() {
        let g = CongruenceGroup::parse("Gamma0(64)").unwrap();
        assert!(matches!(
            group_data(&g, DEFAULT_LEVEL_BOUND),
            Err(GroupError::LevelTooLarge { level: 64, bound: 32 })
        ));
        assert!(group_data(&g, 64).is_ok());
        assert!(CongruenceGroup::parse("Gammafoo(3)").is_err());
    }

    #[test]
    fn intersection_levels_and_indices() {
        let g = CongruenceGroup::parse("Gamma0(2)&Gamma(3)").unwrap();
        assert_eq!(g.level(), 6);
        let d = group_data(&g, DEFAULT_LEVEL_BOUND).unwrap();
        assert_eq!(d.index, 36);
        assert_eq!(d.cusp_widths, vec![6, 6, 6, 6, 3, 3, 3, 3]);
    }
}
