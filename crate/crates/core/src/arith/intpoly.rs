//! Dense integer and rational coefficient vectors (constant term first).
//!
//! Small helpers shared by the number-field layer and the univariate
//! polynomial code: rational root isolation via p-adic lifting and the
//! low-degree factor trial used to sanity-check minimal polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{common_denominator, integer_content, Rational};

pub(crate) fn trim_rat(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn rat_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_rat(&mut out);
    out
}

pub(crate) fn rat_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim_rat(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn rat_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    trim_rat(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        trim_rat(&mut rem);
    }
    trim_rat(&mut quot);
    (quot, rem)
}

/// Monic gcd over Q, through gcds modulo word-sized primes combined by CRT
/// and certified by trial division.
pub(crate) fn rat_monic_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim_rat(&mut x);
    trim_rat(&mut y);
    if x.is_empty() || y.is_empty() {
        return rat_monic_gcd_euclid(&x, &y);
    }
    let g = modular_gcd(&primitive_integer(&x), &primitive_integer(&y));
    let lead = Rational::from_integer(g.last().expect("nonzero gcd").clone());
    g.into_iter()
        .map(|c| Rational::from_integer(c) / &lead)
        .collect()
}

fn to_residues(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    a.iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect()
}

fn divides_int(g: &[BigInt], a: &[BigInt]) -> bool {
    let gr: Vec<Rational> = g.iter().cloned().map(Rational::from_integer).collect();
    let ar: Vec<Rational> = a.iter().cloned().map(Rational::from_integer).collect();
    rat_divrem(&ar, &gr).1.is_empty()
}

/// Primitive gcd of two nonzero primitive integer polynomials.
fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let la = a.last().expect("nonzero");
    let lb = b.last().expect("nonzero");
    let lc = la.gcd(lb);
    let mut p: u64 = (1 << 31) - 1;
    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut attempts = 0;
    loop {
        p -= 2;
        while !is_prime(p) {
            p -= 2;
        }
        let pb = BigInt::from(p);
        if (la % &pb).is_zero() || (lb % &pb).is_zero() {
            continue;
        }
        attempts += 1;
        if attempts > 4000 {
            let x: Vec<Rational> = a.iter().cloned().map(Rational::from_integer).collect();
            let y: Vec<Rational> = b.iter().cloned().map(Rational::from_integer).collect();
            return primitive_integer(&rat_monic_gcd_euclid(&x, &y));
        }
        let mut g = gcd_mod_p(&to_residues(a, p), &to_residues(b, p), p);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        // normalize so the leading coefficient is lc mod p
        let scale = (lc.mod_floor(&pb).to_u64().expect("residue") as u128
            * inv_mod_p(*g.last().expect("nonzero"), p) as u128
            % p as u128) as u64;
        for c in g.iter_mut() {
            *c = (*c as u128 * scale as u128 % p as u128) as u64;
        }
        let gi: Vec<BigInt> = g.iter().map(|&c| BigInt::from(c)).collect();
        let (prev, m) = match acc.take() {
            Some((prev, m)) if prev.len() == gi.len() => (prev, m),
            Some((prev, m)) if prev.len() < gi.len() => {
                acc = Some((prev, m));
                continue;
            }
            _ => {
                acc = Some((gi, pb));
                continue;
            }
        };
        let minv = inv_mod_p((&m % &pb).to_u64().expect("residue"), p);
        let mm = &m * &pb;
        let half = &mm >> 1;
        let mut changed = false;
        let combined: Vec<BigInt> = prev
            .iter()
            .zip(gi.iter())
            .map(|(c, r)| {
                let t = ((r - c).mod_floor(&pb) * BigInt::from(minv)).mod_floor(&pb);
                let v = c + &m * t;
                let sym_old = if c > &(&m >> 1) { c - &m } else { c.clone() };
                let sym_new = if v > half { &v - &mm } else { v.clone() };
                if sym_old != sym_new {
                    changed = true;
                }
                v
            })
            .collect();
        if !changed {
            let sym: Vec<BigInt> = combined
                .iter()
                .map(|v| if v > &half { v - &mm } else { v.clone() })
                .collect();
            let cand = primitive_part_int(sym);
            if divides_int(&cand, a) && divides_int(&cand, b) {
                return cand;
            }
        }
        acc = Some((combined, mm));
    }
}

fn primitive_part_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim_int(&mut v);
    let content = integer_content(v.iter());
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    r as u64
}

fn rat_monic_gcd_euclid(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim_rat(&mut x);
    trim_rat(&mut y);
    while !y.is_empty() {
        let (_, r) = rat_divrem(&x, &y);
        x = y;
        // keeping remainders primitive stops coefficient growth
        y = primitive_integer(&r)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

fn rat_derivative(a: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect();
    trim_rat(&mut out);
    out
}

/// Clears denominators and removes the content; the sign is kept.
pub(crate) fn primitive_integer(a: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(a);
    let mut ints: Vec<BigInt> = a
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = integer_content(ints.iter());
    if !content.is_zero() && !content.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
    }
    trim_int(&mut ints);
    ints
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn eval_mod(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    p.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative_int(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Polynomial gcd over the prime field `Z/p`, coefficients in `[0, p)`.
fn gcd_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    fn inv(a: u64, p: u64) -> u64 {
        let mut r = 1u128;
        let mut base = a as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        r as u64
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let dy = y.len() - 1;
        let li = inv(y[dy], p);
        while x.len() > dy {
            let shift = x.len() - 1 - dy;
            let c = (x[x.len() - 1] as u128 * li as u128 % p as u128) as u64;
            for (j, yj) in y.iter().enumerate() {
                let sub = (c as u128 * *yj as u128 % p as u128) as u64;
                x[shift + j] = (x[shift + j] + p - sub) % p;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Integer roots of a squarefree monic integer polynomial.
fn integer_roots_monic_squarefree(h: &[BigInt]) -> Vec<BigInt> {
    let deg = h.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-h[0].clone()];
    }
    let bound = h[..deg]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let dh = derivative_int(h);
    let mut p = 101u64.max(2 * deg as u64 + 1);
    loop {
        while !is_prime(p) {
            p += 1;
        }
        let pb = BigInt::from(p);
        let hm: Vec<u64> = h
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        let dm: Vec<u64> = dh
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        let g = gcd_mod_p(&hm, &dm, p);
        if g.len() == 1 {
            break;
        }
        p += 1;
    }
    let pb = BigInt::from(p);
    let target = &bound * BigInt::from(2);
    let mut out = Vec::new();
    for r0 in 0..p {
        let mut r = BigInt::from(r0);
        if !eval_mod(h, &r, &pb).is_zero() {
            continue;
        }
        let mut modulus = pb.clone();
        while modulus <= target {
            let next = &modulus * &modulus;
            let hv = eval_mod(h, &r, &next);
            let dv = eval_mod(&dh, &r, &next);
            let Some(dinv) = mod_inverse(&dv, &next) else {
                break;
            };
            r = (r - hv * dinv).mod_floor(&next);
            modulus = next;
        }
        let half = &modulus / BigInt::from(2);
        let cand = if r > half { r - &modulus } else { r };
        if eval_int(h, &cand).is_zero() {
            out.push(cand);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All distinct rational roots of a nonzero rational polynomial, ascending.
pub(crate) fn rational_roots(a: &[Rational]) -> Vec<Rational> {
    let mut p = a.to_vec();
    trim_rat(&mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        p.drain(..zeros);
    }
    if p.len() > 1 {
        let g = rat_monic_gcd(&p, &rat_derivative(&p));
        let (sqfree, _) = rat_divrem(&p, &g);
        let ints = primitive_integer(&sqfree);
        let deg = ints.len() - 1;
        let lead = ints[deg].clone();
        // h(w) = lead^(deg-1) p(w / lead) is monic with integer coefficients.
        let mut h = Vec::with_capacity(deg + 1);
        for (i, c) in ints.iter().enumerate() {
            if i == deg {
                h.push(BigInt::one());
            } else {
                h.push(c * num_traits::pow(lead.clone(), deg - 1 - i));
            }
        }
        for w in integer_roots_monic_squarefree(&h) {
            roots.push(Rational::new(w, lead.clone()));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Looks for a factor of degree one or two of a monic integer polynomial.
///
/// Returns `Some(true)` when a factor is found, `Some(false)` when the
/// search was exhaustive and found none, and `None` when the search space
/// was too large to enumerate.
pub(crate) fn has_small_factor(monic: &[BigInt]) -> Option<bool> {
    let deg = monic.len() - 1;
    if deg <= 1 {
        return Some(false);
    }
    let rats: Vec<Rational> = monic.iter().cloned().map(Rational::from_integer).collect();
    if !rational_roots(&rats).is_empty() {
        return Some(true);
    }
    if deg < 4 {
        return Some(false);
    }
    let a0 = monic[0].abs();
    let cauchy = monic[..deg].iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let cauchy = cauchy.to_i64()?;
    if a0 > BigInt::from(1_000_000_000_000i64) || cauchy > 10_000 {
        return None;
    }
    let a0 = a0.to_i64()?;
    let mut divisors = Vec::new();
    let mut i = 1i64;
    while i * i <= a0 {
        if a0 % i == 0 {
            divisors.push(i);
            divisors.push(a0 / i);
        }
        i += 1;
    }
    let qmax = cauchy.saturating_mul(cauchy);
    let pmax = 2 * cauchy;
    let work = divisors.len() as i64 * 2 * (2 * pmax + 1);
    if work > 400_000 {
        return None;
    }
    for &dv in &divisors {
        for q in [dv, -dv] {
            if q.abs() > qmax {
                continue;
            }
            for p in -pmax..=pmax {
                let quad = [
                    Rational::from_integer(BigInt::from(q)),
                    Rational::from_integer(BigInt::from(p)),
                    Rational::one(),
                ];
                let (_, r) = rat_divrem(&rats, &quad);
                if r.is_empty() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}
