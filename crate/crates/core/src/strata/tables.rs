use num_bigint::BigUint;

use crate::arith::{Field, FieldElement};
use crate::error::Result;
use crate::forms::{BinaryForm, FormSpace, ProjPoint};

use super::{StratumId, StratumParams};

fn int(f: &Field, v: i64) -> FieldElement {
    FieldElement::from_int(f, v)
}

fn sign(f: &Field, k: usize) -> FieldElement {
    int(f, if k % 2 == 0 { 1 } else { -1 })
}

/// Form of degree `dd` from `(coefficient, exponent of y)` pairs.
fn form(f: &Field, dd: usize, terms: &[(FieldElement, usize)]) -> BinaryForm {
    terms.iter().fold(BinaryForm::zero(f, dd), |acc, (c, j)| {
        acc.add(&BinaryForm::monomial(c.clone(), dd, *j))
    })
}

/// Homogenizes `Σ c X^e` to degree `dd` with `X = x/y`.
fn affine(f: &Field, dd: usize, terms: &[(FieldElement, usize)]) -> BinaryForm {
    let flipped: Vec<(FieldElement, usize)> =
        terms.iter().map(|(c, e)| (c.clone(), dd - e)).collect();
    form(f, dd, &flipped)
}

/// The coordinate forms of the representative curve.
pub fn stratum_forms(id: StratumId, p: &StratumParams) -> Vec<BinaryForm> {
    let f = p.field();
    let d = p.degree();
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let one = int(f, 1);
    let mono = |j: usize| BinaryForm::monomial(one.clone(), d, j);
    let mut out = Vec::new();
    match id {
        StratumId::Tacnode => {
            out.push(form(
                f,
                d,
                &[(one.clone(), 0), (b.clone(), d - 1), (-&one, d)],
            ));
            out.push(form(f, d, &[(one.clone(), 1), (-a, d - 1)]));
            out.extend((2..=d - 2).map(mono));
        }
        StratumId::Cusp345 => {
            out.push(form(f, d, &[(one.clone(), 0), (a.clone(), 2)]));
            out.extend((3..=d).map(mono));
        }
        StratumId::Cusp25 => {
            out.push(form(f, d, &[(one.clone(), 0), (-a, 3)]));
            out.push(form(f, d, &[(one.clone(), 2), (-b, 3)]));
            out.extend((4..=d).map(mono));
        }
        StratumId::CuspWithSmoothBranch => {
            out.push(form(f, d, &[(one.clone(), 0), (-a, 1), (-&one, d)]));
            out.extend((2..=d - 1).map(mono));
        }
        StratumId::OrdinaryTriplePoint => {
            out.push(form(
                f,
                d,
                &[(one.clone(), 0), (b.clone(), d - 1), (a.clone(), d)],
            ));
            out.extend((1..=d - 2).map(|i| form(f, d, &[(one.clone(), i), (-&one, d - 1)])));
        }
        StratumId::TwoCusps => {
            out.push(form(f, d, &[(one.clone(), 0), (-a, 1)]));
            out.extend((2..=d - 2).map(mono));
            out.push(form(f, d, &[(-b, d - 1), (one.clone(), d)]));
        }
        StratumId::CuspAndNode => {
            out.push(form(f, d, &[(one.clone(), 0), (-a, 1), (a - &one, d - 1)]));
            out.extend((2..=d - 2).map(|i| form(f, d, &[(one.clone(), i), (-&one, d - 1)])));
            out.push(form(f, d, &[(b.clone(), d - 1), (one.clone(), d)]));
        }
        StratumId::TwoNodes => {
            let bc = b + c;
            if !bc.is_zero() {
                let lead = &(&(&c.pow(d as u64) - &(a * b)) - a) + b;
                out.push(form(
                    f,
                    d,
                    &[(-a, 0), (-&(&lead / &bc), 1), (one.clone(), d)],
                ));
                for i in 2..=d - 1 {
                    let coef = -&(&(b + &c.pow(i as u64)) / &bc);
                    out.push(form(f, d, &[(coef, 1), (one.clone(), i)]));
                }
            } else {
                let cc = &(c * c) - c;
                let lead = &(&(&c.pow(d as u64) + &(a * c)) - a) - c;
                out.push(form(
                    f,
                    d,
                    &[(-a, 0), (-&(&lead / &cc), 2), (one.clone(), d)],
                ));
                out.push(mono(1));
                for i in 3..=d - 1 {
                    let coef = -&(&(&c.pow(i as u64) - c) / &cc);
                    out.push(form(f, d, &[(coef, 2), (one.clone(), i)]));
                }
            }
        }
    }
    out
}

pub fn stratum_space(id: StratumId, p: &StratumParams) -> Result<FormSpace> {
    FormSpace::from_basis(p.field(), p.degree(), &stratum_forms(id, p))
}

/// Closed-form basis of `L^k` for the representative curve.
pub fn stratum_power_basis(id: StratumId, p: &StratumParams, k: usize) -> Result<FormSpace> {
    if k == 0 {
        return crate::error::invalid("powers start at k = 1");
    }
    let f = p.field();
    let dd = p.degree() * k;
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let one = int(f, 1);
    let kk = int(f, k as i64);
    let sg = sign(f, k);
    let x = |e: usize| affine(f, dd, &[(one.clone(), e)]);
    let mut rows = Vec::new();
    match id {
        StratumId::Tacnode => {
            rows.push(affine(
                f,
                dd,
                &[
                    (one.clone(), dd),
                    (-&(&(&sg * &kk) * b), 1),
                    (sg.clone(), 0),
                ],
            ));
            rows.push(affine(f, dd, &[(one.clone(), dd - 1), (&sg * a, 1)]));
            rows.extend((2..=dd - 2).map(x));
        }
        StratumId::Cusp345 => {
            rows.push(affine(f, dd, &[(one.clone(), dd), (&kk * a, dd - 2)]));
            rows.extend((0..=dd - 3).map(x));
        }
        StratumId::Cusp25 => {
            rows.push(affine(f, dd, &[(one.clone(), dd), (-&(&kk * a), dd - 3)]));
            rows.push(affine(f, dd, &[(one.clone(), dd - 2), (-b, dd - 3)]));
            rows.extend((0..=dd - 4).map(x));
        }
        StratumId::CuspWithSmoothBranch => {
            rows.push(affine(
                f,
                dd,
                &[(one.clone(), dd), (-&(&kk * a), dd - 1), (sg.clone(), 0)],
            ));
            rows.extend((1..=dd - 2).map(x));
        }
        StratumId::OrdinaryTriplePoint => {
            let ak = a.pow(k as u64);
            let lin = &(&(&one + b) + a).pow(k as u64) - &(&one + &ak);
            rows.push(affine(f, dd, &[(one.clone(), dd), (lin, 1), (ak, 0)]));
            rows.extend((2..=dd - 1).map(|j| affine(f, dd, &[(one.clone(), j), (-&one, 1)])));
        }
        StratumId::TwoCusps => {
            rows.push(affine(f, dd, &[(one.clone(), dd), (-&(&kk * a), dd - 1)]));
            rows.extend((2..=dd - 2).map(x));
            rows.push(affine(f, dd, &[(-&(&kk * b), 1), (one.clone(), 0)]));
        }
        StratumId::CuspAndNode => {
            let ka = &kk * a;
            rows.push(affine(
                f,
                dd,
                &[(one.clone(), dd), (-&ka, dd - 1), (&ka - &one, 1)],
            ));
            rows.extend((2..=dd - 2).map(|j| affine(f, dd, &[(one.clone(), j), (-&one, 1)])));
            let lin = &(b + &one).pow(k as u64) - &one;
            rows.push(affine(f, dd, &[(lin, 1), (one.clone(), 0)]));
        }
        StratumId::TwoNodes => {
            let (ak, bk) = (a.pow(k as u64), b.pow(k as u64));
            let num = &(&bk - &ak) - &(&sg * &(&c.pow(dd as u64) - &(&ak * &bk)));
            let lead = (-a).pow(k as u64);
            let den = &bk - &(&sg * c);
            let (den, e, skip) = if den.is_zero() {
                (&bk - &(&sg * &(c * c)), dd - 2, 2)
            } else {
                (den, dd - 1, 1)
            };
            rows.push(affine(
                f,
                dd,
                &[(lead, dd), (-&(&num / &den), e), (one.clone(), 0)],
            ));
            for i in (1..=dd - 1).filter(|&i| i != skip) {
                let coef = -&(&(&bk - &(&sg * &c.pow(i as u64))) / &den);
                rows.push(affine(f, dd, &[(coef, e), (one.clone(), dd - i)]));
            }
        }
    }
    FormSpace::from_basis(f, dd, &rows)
}

/// `k`-independent part of the condition for `id` at `q`, together with
/// the elements that must all be `k`-th roots of unity. `None` means the
/// condition fails for every `k`.
pub(crate) fn point_condition(
    id: StratumId,
    p: &StratumParams,
    q: &ProjPoint,
) -> Option<Vec<FieldElement>> {
    let f = p.field();
    let d = p.degree() as u64;
    let dd = int(f, d as i64);
    let one = int(f, 1);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let nonzero = |z: FieldElement| (!z.is_zero()).then_some(z);
    match id {
        StratumId::Tacnode => {
            if q.is_infinity() {
                return None;
            }
            let al = q.alpha();
            let quad = &(&(&(&dd * &(al * al)) * a) + &(al * b)) - &dd;
            if !quad.is_zero() {
                return None;
            }
            Some(vec![nonzero(-&(-al).pow(d))?])
        }
        StratumId::Cusp345 | StratumId::Cusp25 => {
            let ok = q.is_infinity() || (a.is_zero() && q.alpha().is_zero());
            ok.then(Vec::new)
        }
        StratumId::CuspWithSmoothBranch => {
            if q.is_infinity() || &dd * q.alpha() != *a {
                return None;
            }
            Some(vec![nonzero(-&(-q.alpha()).pow(d))?])
        }
        StratumId::OrdinaryTriplePoint => {
            if q.is_infinity() {
                return None;
            }
            let al = -q.alpha();
            let s = &(&one + b) + a;
            let z1 = &(&al + &one).pow(d) / &s;
            let z2 = &al.pow(d) / a;
            Some(vec![nonzero(z1)?, nonzero(z2)?])
        }
        StratumId::TwoCusps => {
            let ok = if q.is_infinity() {
                b.is_zero()
            } else {
                let al = q.alpha();
                (a.is_zero() && al.is_zero()) || (a * b == &dd * &dd && &dd * al == *a)
            };
            ok.then(Vec::new)
        }
        StratumId::CuspAndNode => {
            if q.is_infinity() {
                return Some(vec![b + &one]);
            }
            if a.is_zero() || &dd * q.alpha() != *a {
                return None;
            }
            let r = &(a - &dd) / a;
            Some(vec![nonzero(&r.pow(d) / &(b + &one))?])
        }
        StratumId::TwoNodes => {
            if q.is_infinity() || q.alpha().is_zero() {
                return None;
            }
            let beta = -&q.alpha().inv().expect("nonzero");
            let z1 = &beta.pow(d) / &(-a);
            let bc = &beta + c;
            if bc.is_zero() {
                return None;
            }
            let z2 = &(-&(b * &(&beta + &one).pow(d))) / &bc.pow(d);
            Some(vec![nonzero(z1)?, nonzero(z2)?])
        }
    }
}

/// Evaluates the Khovanskii-finiteness condition of the family at `(q, k)`.
pub fn stratum_kf_condition(id: StratumId, p: &StratumParams, q: &ProjPoint, k: usize) -> bool {
    match point_condition(id, p, q) {
        None => false,
        Some(zs) => zs.iter().all(|z| z.pow(k as u64).is_one()),
    }
}

/// Largest `k` the algorithm needs to try for the family.
pub fn stratum_bound(id: StratumId, n: usize, ell: u64) -> BigUint {
    let ell = BigUint::from(ell);
    match id {
        StratumId::Cusp345 | StratumId::Cusp25 | StratumId::TwoCusps => BigUint::from(1u32),
        StratumId::Tacnode => (&ell * 2u32).pow(2) + 2u32,
        StratumId::CuspWithSmoothBranch | StratumId::CuspAndNode => ell.pow(2) + 2u32,
        StratumId::OrdinaryTriplePoint | StratumId::TwoNodes => {
            let d4 = BigUint::from(n as u64 + 2).pow(4);
            (d4 * 16u32 * ell.pow(2) + 2u32).pow(2)
        }
    }
}
