//! Dense univariate polynomials over a coefficient field.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty list and its degree is `None` (a sentinel, never -1 arithmetic).

use std::fmt;

use super::field::Field;

#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![F::zero(), F::one()])
    }

    /// c·x^k
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v.push(c);
        Poly::from_coeffs(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::from_coeffs(cs.iter().map(|&n| F::from_i64(n)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    /// Euclidean division: self = q·d + r with deg r < deg d. Panics on d = 0.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.lc().unwrap().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = r[i].mul(&lc_inv);
            for j in 0..dd {
                r[i - dd + j] = r[i - dd + j].sub(&c.mul(&d.coeffs[j]));
            }
            r[i] = F::zero();
            q[i - dd] = c;
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divmod(self).1.is_zero()
    }

    /// Exact quotient; `None` unless the division is remainder-free.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divmod(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
            .collect();
        Poly::from_coeffs(v)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(l) => {
                if *l == F::one() {
                    self.clone()
                } else {
                    self.scale(&l.inv())
                }
            }
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Monic gcd; dispatches to the field's preferred algorithm.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        F::poly_gcd(a, b)
    }

    /// Yun's squarefree decomposition: self = lc·∏ gᵢ^i with the gᵢ
    /// squarefree, monic, pairwise coprime. Panics on zero input.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly<F>, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        if f.is_constant() {
            return vec![];
        }
        let df = f.derivative();
        let g = Poly::gcd(&f, &df);
        let mut c = f.exact_div(&g).unwrap();
        let mut d = df.exact_div(&g).unwrap().sub(&c.derivative());
        let mut out = vec![];
        let mut i = 1usize;
        while !c.is_constant() {
            let gi = Poly::gcd(&c, &d);
            if !gi.is_constant() {
                out.push((gi.clone(), i));
            }
            c = c.exact_div(&gi).unwrap();
            d = d.exact_div(&gi).unwrap().sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// Product of the distinct "roots": the radical of self.
    pub fn squarefree_part(&self) -> Self {
        let mut out = Poly::one();
        for (g, _) in self.squarefree_decomposition() {
            out = out.mul(&g);
        }
        out
    }

    /// Highest power of d dividing self (self nonzero).
    pub fn ord_along(&self, d: &Self) -> usize {
        assert!(!self.is_zero() && !d.is_constant());
        let mut f = self.clone();
        let mut e = 0;
        while let Some(q) = f.exact_div(d) {
            f = q;
            e += 1;
        }
        e
    }
}

/// Monic gcd via the plain Euclidean algorithm (the generic fallback).
pub fn gcd_monic_euclid<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.divmod(&b).1;
        a = b;
        b = r;
    }
    a.monic()
}

/// Gcd-free basis: pairwise-coprime monic squarefree polynomials such that
/// every input is a constant times a product of powers of basis elements.
/// Returns the basis together with the exponent of each basis element in
/// each input (`exponents[i][j]` = exponent of `basis[j]` in `fs[i]`).
pub fn coprime_basis<F: Field>(fs: &[Poly<F>]) -> (Vec<Poly<F>>, Vec<Vec<usize>>) {
    let mut basis: Vec<Poly<F>> = vec![];
    for f in fs {
        assert!(!f.is_zero(), "coprime basis of zero");
        for (part, _) in f.squarefree_decomposition() {
            insert_coprime(&mut basis, part);
        }
    }
    basis.sort_by(cmp_poly_canonical);
    let mut exps = vec![];
    for f in fs {
        let mut row = vec![0usize; basis.len()];
        let mut rem = f.monic();
        for (j, b) in basis.iter().enumerate() {
            while let Some(q) = rem.exact_div(b) {
                rem = q;
                row[j] += 1;
                if rem.is_constant() {
                    break;
                }
            }
        }
        debug_assert!(rem.is_constant(), "coprime basis failed to reconstruct input");
        exps.push(row);
    }
    (basis, exps)
}

fn insert_coprime<F: Field>(basis: &mut Vec<Poly<F>>, mut g: Poly<F>) {
    let mut i = 0;
    while i < basis.len() && !g.is_constant() {
        let d = Poly::gcd(&g, &basis[i]);
        if d.is_constant() {
            i += 1;
            continue;
        }
        let rest = basis[i].exact_div(&d).unwrap();
        g = g.exact_div(&d).unwrap();
        if rest.is_constant() {
            // basis[i] = d entirely; keep it and strip d from g.
            i += 1;
        } else {
            basis[i] = rest;
            basis.push(d);
            // re-examine the same slot (now `rest`) and later the new piece
        }
    }
    if !g.is_constant() {
        basis.push(g.monic());
    }
}

/// Canonical ordering: by degree, then lexicographic on coefficients from
/// the highest degree down. Used to stabilize place and basis listings.
pub fn cmp_poly_canonical<F: Field>(a: &Poly<F>, b: &Poly<F>) -> std::cmp::Ordering {
    let da = a.degree().map_or(-1i64, |d| d as i64);
    let db = b.degree().map_or(-1i64, |d| d as i64);
    da.cmp(&db).then_with(|| {
        for k in (0..a.coeffs.len().max(1)).rev() {
            let o = a.coeff(k).cmp_coeff(&b.coeff(k));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl<F: Field> Poly<F> {
    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (negative, abs) = c.display_sign_abs();
            if s.is_empty() {
                if negative {
                    s.push('-');
                }
            } else if negative {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_is_one = abs == "1";
            if k == 0 {
                s.push_str(&abs);
            } else {
                if !coeff_is_one {
                    s.push_str(&abs);
                    s.push('*');
                }
                s.push_str(var);
                if k > 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}
