//! Polynomial gcd over Q via integer and modular arithmetic.
//!
//! Rational-function reduction dominates the running time of every surface
//! computation, so gcds over Q get a fast path: clear denominators, test
//! coprimality modulo a word-sized prime (gcd ≡ 1 mod p implies gcd = 1
//! over Q when p divides neither leading coefficient), and otherwise run a
//! small-prime modular gcd with CRT reconstruction and a division check.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::field::Rat;
use super::poly::Poly;

/// Primitive integer polynomial (content 1, positive leading coefficient)
/// equal to the input up to a nonzero rational constant.
pub fn primitive_integer(f: &Poly<Rat>) -> Vec<BigInt> {
    assert!(!f.is_zero());
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

fn to_rat_poly(v: &[BigInt]) -> Poly<Rat> {
    Poly::from_coeffs(v.iter().map(|c| Rat::from(c.clone())).collect())
}

// --- arithmetic mod a word-sized prime ---

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd in (Z/p)[x]; inputs lowest-degree-first, trimmed.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lb_inv = invmod(*b.last().unwrap(), p);
        while a.len() > db {
            let la = *a.last().unwrap();
            if la != 0 {
                let c = mulmod(la, lb_inv, p);
                let shift = a.len() - 1 - db;
                for j in 0..db {
                    let sub = mulmod(c, b[j], p);
                    let idx = shift + j;
                    a[idx] = (a[idx] + p - sub) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        if l != 1 {
            let inv = invmod(l, p);
            for c in &mut a {
                *c = mulmod(*c, inv, p);
            }
        }
    }
    a
}

fn symmetric_lift(r: &BigInt, m: &BigInt) -> BigInt {
    let half = m >> 1;
    if r > &half {
        r - m
    } else {
        r.clone()
    }
}

/// Monic gcd over Q, specialized for rational coefficients.
pub fn gcd_rat(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let za = primitive_integer(a);
    let zb = primitive_integer(b);
    let lc_a = za.last().unwrap().clone();
    let lc_b = zb.last().unwrap().clone();
    let g_lc = lc_a.gcd(&lc_b);

    let mut p: u64 = (1u64 << 31) - 1;
    let mut best_deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut crt: Vec<BigInt> = vec![];
    let mut previous_candidate: Option<Vec<BigInt>> = None;

    loop {
        while !is_prime_u64(p)
            || (&lc_a % BigInt::from(p)).is_zero()
            || (&lc_b % BigInt::from(p)).is_zero()
        {
            p -= 1;
        }
        let gp = gcd_mod_p(reduce_mod_p(&za, p), reduce_mod_p(&zb, p), p);
        let deg = gp.len() - 1;
        if deg == 0 {
            return Poly::one();
        }
        if deg < best_deg {
            // all previous primes were unlucky: restart the CRT
            best_deg = deg;
            modulus = BigInt::one();
            crt = vec![BigInt::zero(); deg + 1];
            previous_candidate = None;
        }
        if deg == best_deg {
            // scale the monic image so it lifts a polynomial with leading
            // coefficient g_lc, then CRT-combine with previous images
            let scale = {
                let r = g_lc.mod_floor(&BigInt::from(p));
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            };
            let pb = BigInt::from(p);
            if modulus.is_one() {
                for (i, &c) in gp.iter().enumerate() {
                    crt[i] = BigInt::from(mulmod(c, scale, p));
                }
                modulus = pb;
            } else {
                // Garner step: x ≡ crt (mod modulus), x ≡ image (mod p)
                let m_inv = {
                    let r = modulus.mod_floor(&pb);
                    let r = r.to_u64_digits().1.first().copied().unwrap_or(0);
                    invmod(r, p)
                };
                for (i, &c) in gp.iter().enumerate() {
                    let want = mulmod(c, scale, p);
                    let cur = {
                        let r = crt[i].mod_floor(&pb);
                        r.to_u64_digits().1.first().copied().unwrap_or(0)
                    };
                    let diff = mulmod((want + p - cur) % p, m_inv, p);
                    crt[i] = &crt[i] + &modulus * BigInt::from(diff);
                }
                modulus = &modulus * &pb;
            }
            let lifted: Vec<BigInt> = crt
                .iter()
                .map(|c| symmetric_lift(&c.mod_floor(&modulus), &modulus))
                .collect();
            if previous_candidate.as_ref() == Some(&lifted) {
                // stabilized: take the primitive part and verify by division
                let cand = to_rat_poly(&lifted);
                let cand = to_rat_poly(&primitive_integer(&cand));
                let ra = to_rat_poly(&za);
                let rb = to_rat_poly(&zb);
                if cand.divides(&ra) && cand.divides(&rb) {
                    return cand.monic();
                }
            }
            previous_candidate = Some(lifted);
        }
        p -= 1;
    }
}

// --- gcd over a quadratic extension Q(θ), θ² + pθ + r = 0 ---

use super::quadratic::{QuadExt, QuadraticTag};
use std::sync::Arc;

fn big_to_u64_mod(c: &BigInt, q: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(q));
    r.to_u64_digits().1.first().copied().unwrap_or(0)
}

/// Rational number n/d with |n|, |d| ≤ sqrt(m/2) congruent to a mod m,
/// if one exists (half-extended Euclid).
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound: BigInt = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Coefficients of f scaled to pairs (a, b) ∈ Z² (a + bθ) with content 1.
fn primitive_integer_quad(f: &Poly<QuadExt>) -> Vec<(BigInt, BigInt)> {
    assert!(!f.is_zero());
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.a.denom()).lcm(c.b.denom());
    }
    let mut v: Vec<(BigInt, BigInt)> = f
        .coeffs()
        .iter()
        .map(|c| {
            (
                c.a.numer() * (&den / c.a.denom()),
                c.b.numer() * (&den / c.b.denom()),
            )
        })
        .collect();
    let mut content = BigInt::zero();
    for (a, b) in &v {
        content = content.gcd(a).gcd(b);
    }
    for (a, b) in &mut v {
        *a = &*a / &content;
        *b = &*b / &content;
    }
    v
}

// Arithmetic in F_q[θ] = F_q², valid when θ² + pθ + r is irreducible mod q.

fn q2_mul(x: (u64, u64), y: (u64, u64), pq: u64, rq: u64, q: u64) -> (u64, u64) {
    let bb = mulmod(x.1, y.1, q);
    let a = (mulmod(x.0, y.0, q) + q - mulmod(bb, rq, q)) % q;
    let b = (mulmod(x.0, y.1, q) + mulmod(x.1, y.0, q)) % q;
    let b = (b + q - mulmod(bb, pq, q)) % q;
    (a, b)
}

fn q2_inv(x: (u64, u64), pq: u64, rq: u64, q: u64) -> (u64, u64) {
    // conjugate (a − bp, −b); norm a² − pab + rb² is a nonzero element of F_q
    let conj = ((x.0 + q - mulmod(x.1, pq, q)) % q, (q - x.1) % q);
    let norm = (mulmod(x.0, conj.0, q) + mulmod(mulmod(x.1, x.1, q), rq, q)) % q;
    let n_inv = invmod(norm, q);
    (mulmod(conj.0, n_inv, q), mulmod(conj.1, n_inv, q))
}

fn reduce_mod_q2(f: &[(BigInt, BigInt)], q: u64) -> Vec<(u64, u64)> {
    let mut v: Vec<(u64, u64)> = f
        .iter()
        .map(|(a, b)| (big_to_u64_mod(a, q), big_to_u64_mod(b, q)))
        .collect();
    while v.last() == Some(&(0, 0)) {
        v.pop();
    }
    v
}

/// Monic gcd in F_q²[x]; inputs lowest-degree-first, trimmed.
fn gcd_mod_q2(
    mut a: Vec<(u64, u64)>,
    mut b: Vec<(u64, u64)>,
    pq: u64,
    rq: u64,
    q: u64,
) -> Vec<(u64, u64)> {
    let sub = |x: (u64, u64), y: (u64, u64)| ((x.0 + q - y.0) % q, (x.1 + q - y.1) % q);
    while !b.is_empty() {
        let db = b.len() - 1;
        let lb_inv = q2_inv(*b.last().unwrap(), pq, rq, q);
        while a.len() > db {
            let la = *a.last().unwrap();
            if la != (0, 0) {
                let c = q2_mul(la, lb_inv, pq, rq, q);
                let shift = a.len() - 1 - db;
                for j in 0..db {
                    let s = q2_mul(c, b[j], pq, rq, q);
                    a[shift + j] = sub(a[shift + j], s);
                }
            }
            a.pop();
            while a.last() == Some(&(0, 0)) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        if l != (1, 0) {
            let inv = q2_inv(l, pq, rq, q);
            for c in &mut a {
                *c = q2_mul(*c, inv, pq, rq, q);
            }
        }
    }
    a
}

fn quad_tag_of(f: &Poly<QuadExt>) -> Option<Arc<QuadraticTag>> {
    f.coeffs().iter().find_map(|c| c.tag.clone())
}

/// Monic gcd over Q(θ) by modular images in F_q² for inert primes q.
/// Returns `None` when the minimal polynomial has non-integer
/// coefficients; the caller then falls back to the generic Euclid.
pub fn gcd_quadext(a: &Poly<QuadExt>, b: &Poly<QuadExt>) -> Option<Poly<QuadExt>> {
    if a.is_zero() {
        return Some(b.monic());
    }
    if b.is_zero() {
        return Some(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Some(Poly::one());
    }
    let tag = match quad_tag_of(a).or_else(|| quad_tag_of(b)) {
        Some(t) => t,
        None => {
            // both polynomials have rational coefficients
            let g = gcd_rat(
                &a.map_coeffs(|c| c.a.clone()),
                &b.map_coeffs(|c| c.a.clone()),
            );
            return Some(g.map_coeffs(|c| QuadExt::from_rat(c.clone())));
        }
    };
    if !tag.p.is_integer() || !tag.r.is_integer() {
        return None;
    }
    let p_int = tag.p.to_integer();
    let r_int = tag.r.to_integer();
    let disc = &p_int * &p_int - BigInt::from(4) * &r_int;

    let za = primitive_integer_quad(a);
    let zb = primitive_integer_quad(b);
    let lc_norm = |v: &[(BigInt, BigInt)]| {
        let (la, lb) = v.last().unwrap();
        la * la - &p_int * la * lb + &r_int * lb * lb
    };
    let na = lc_norm(&za);
    let nb = lc_norm(&zb);

    let mut q: u64 = (1u64 << 31) - 1;
    let mut best_deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut crt: Vec<(BigInt, BigInt)> = vec![];
    let mut prime_count = 0usize;

    loop {
        loop {
            if is_prime_u64(q) {
                let d = big_to_u64_mod(&disc, q);
                // need θ² + pθ + r irreducible mod q (disc a non-residue)
                // and both leading coefficients invertible in F_q²
                if d != 0
                    && powmod(d, (q - 1) / 2, q) == q - 1
                    && !(&na % BigInt::from(q)).is_zero()
                    && !(&nb % BigInt::from(q)).is_zero()
                {
                    break;
                }
            }
            q -= 1;
        }
        let pq = big_to_u64_mod(&p_int, q);
        let rq = big_to_u64_mod(&r_int, q);
        let gq = gcd_mod_q2(reduce_mod_q2(&za, q), reduce_mod_q2(&zb, q), pq, rq, q);
        let deg = gq.len() - 1;
        if deg == 0 {
            return Some(Poly::one());
        }
        if deg < best_deg {
            best_deg = deg;
            modulus = BigInt::one();
            crt = vec![(BigInt::zero(), BigInt::zero()); deg + 1];
            prime_count = 0;
        }
        if deg == best_deg {
            let qb = BigInt::from(q);
            if modulus.is_one() {
                for (i, &(ca, cb)) in gq.iter().enumerate() {
                    crt[i] = (BigInt::from(ca), BigInt::from(cb));
                }
                modulus = qb;
            } else {
                let m_inv = invmod(big_to_u64_mod(&modulus, q), q);
                for (i, &(ca, cb)) in gq.iter().enumerate() {
                    let step = |cur: &BigInt, want: u64| {
                        let c = big_to_u64_mod(cur, q);
                        let diff = mulmod((want + q - c) % q, m_inv, q);
                        cur + &modulus * BigInt::from(diff)
                    };
                    crt[i] = (step(&crt[i].0, ca), step(&crt[i].1, cb));
                }
                modulus = &modulus * &qb;
            }
            prime_count += 1;
            if prime_count >= 2 {
                // attempt rational reconstruction of every component
                let mut coeffs: Vec<QuadExt> = Vec::with_capacity(crt.len());
                let mut ok = true;
                for (ca, cb) in &crt {
                    match (
                        rational_reconstruct(ca, &modulus),
                        rational_reconstruct(cb, &modulus),
                    ) {
                        (Some(x), Some(y)) => coeffs.push(QuadExt::new(x, y, &tag)),
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let cand = Poly::from_coeffs(coeffs);
                    if cand.divides(a) && cand.divides(b) {
                        return Some(cand);
                    }
                }
            }
        }
        q -= 1;
    }
}

// --- integer factorization (for rational root candidates) ---

fn pollard_rho(n: &BigInt) -> BigInt {
    // Brent's variant; n must be odd composite.
    let one = BigInt::one();
    let mut c = BigInt::from(1u32);
    loop {
        let mut x = BigInt::from(2u32);
        let mut y = BigInt::from(2u32);
        let mut d = BigInt::one();
        let f = |v: &BigInt| (v * v + &c) % n;
        let mut count = 0u64;
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
            count += 1;
            if count > 2_000_000 {
                break;
            }
        }
        if d != one && &d != n {
            return d;
        }
        c += 1;
        assert!(c < BigInt::from(20u32), "integer factorization gave up");
    }
}

fn is_prime_big(n: &BigInt) -> bool {
    if let Ok(small) = u64::try_from(n) {
        return is_prime_u64(small);
    }
    // Miller–Rabin with fixed bases; adequate for the divisor search here.
    let one = BigInt::one();
    let two = BigInt::from(2u32);
    if (n % &two).is_zero() {
        return false;
    }
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of |n| (n nonzero) as (prime, exponent) pairs.
pub fn factor_int(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = vec![];
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
        for entry in out.iter_mut() {
            if entry.0 == p {
                entry.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    for small in 2u64..=99_991 {
        if n.is_one() {
            break;
        }
        let sb = BigInt::from(small);
        if &sb * &sb > n {
            break;
        }
        while (&n % &sb).is_zero() {
            n = &n / &sb;
            push(sb.clone(), &mut out);
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime_big(&m) {
            push(m, &mut out);
        } else {
            let d = pollard_rho(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort();
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor_int(n) {
        let mut next = vec![];
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk = &pk * &p;
            }
        }
        out = next;
    }
    out
}

/// All rational roots of f with exact multiplicities, in increasing order.
pub fn rational_roots(f: &Poly<Rat>) -> Vec<(Rat, usize)> {
    assert!(!f.is_zero());
    let mut out: Vec<(Rat, usize)> = vec![];
    if f.is_constant() {
        return out;
    }
    let mut z = primitive_integer(f);
    // split off the root at zero
    let k = z.iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        out.push((Rat::zero(), k));
        z.drain(..k);
    }
    if z.len() <= 1 {
        out.sort_by(|x, y| x.0.cmp(&y.0));
        return out;
    }
    let zp = to_rat_poly(&z);
    let a0 = z.first().unwrap();
    let an = z.last().unwrap();
    for p in divisors(a0) {
        for q in divisors(an) {
            if p.gcd(&q) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                if zp.eval(&cand).is_zero() {
                    let lin = Poly::from_coeffs(vec![-cand.clone(), Rat::one()]);
                    out.push((cand, zp.ord_along(&lin)));
                }
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.dedup_by(|x, y| x.0 == y.0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat_int;

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn modular_gcd_matches_euclid() {
        let a = p(&[-2, 0, 1]).mul(&p(&[1, 5, 1, 3])); // (t²−2)(3t³+t²+5t+1)
        let b = p(&[-2, 0, 1]).mul(&p(&[7, 0, 2]));
        let g = gcd_rat(&a, &b);
        assert_eq!(g, p(&[-2, 0, 1]));
        let euclid = crate::arith::poly::gcd_monic_euclid(&a, &b);
        assert_eq!(g, euclid);
    }

    #[test]
    fn coprime_fast_path() {
        let a = p(&[1, 3, 0, 1]);
        let b = p(&[5, -1, 2]);
        assert_eq!(gcd_rat(&a, &b), Poly::one());
    }

    #[test]
    fn rational_roots_examples() {
        // t²−1 → ±1
        assert_eq!(
            rational_roots(&p(&[-1, 0, 1])),
            vec![(rat_int(-1), 1), (rat_int(1), 1)]
        );
        // t²−11t−1 → none (roots are (11±5√5)/2)
        assert!(rational_roots(&p(&[-1, -11, 1])).is_empty());
        // 2t³(2t−3)² → 0 (mult 3), 3/2 (mult 2)
        let f = Poly::monomial(rat_int(2), 3).mul(&p(&[-3, 2])).mul(&p(&[-3, 2]));
        assert_eq!(
            rational_roots(&f),
            vec![(rat_int(0), 3), (crate::arith::field::rat(3, 2), 2)]
        );
    }

    #[test]
    fn quadratic_extension_gcd_matches_euclid() {
        use crate::arith::field::Field;
        use crate::arith::quadratic::{QuadExt, QuadraticTag};
        // θ² + θ + 1 = 0
        let tag = QuadraticTag::new(rat_int(1), rat_int(1));
        let th = QuadExt::theta(&tag);
        // common factor t − θ, cofactors coprime
        let lin = Poly::from_coeffs(vec![th.neg(), QuadExt::one()]);
        let a = lin.mul(&Poly::from_coeffs(vec![
            QuadExt::from_i64(3),
            th.clone(),
            QuadExt::one(),
        ]));
        let b = lin.mul(&Poly::from_coeffs(vec![th.add(&QuadExt::one()), QuadExt::one()]));
        let g = gcd_quadext(&a, &b).unwrap();
        assert_eq!(g, lin);
        assert_eq!(g, crate::arith::poly::gcd_monic_euclid(&a, &b));
        // coprime inputs
        let c = Poly::from_coeffs(vec![QuadExt::one(), th]);
        let d = Poly::from_coeffs(vec![QuadExt::from_i64(2), QuadExt::one()]);
        assert_eq!(gcd_quadext(&c, &d).unwrap(), Poly::one());
    }

    #[test]
    fn factoring_small_numbers() {
        let f = factor_int(&BigInt::from(2u32.pow(5) * 9 * 49));
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 5),
                (BigInt::from(3), 2),
                (BigInt::from(7), 2)
            ]
        );
    }
}
