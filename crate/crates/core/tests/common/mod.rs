#![allow(dead_code)]

use kf_core::arith::{ratio, Field, FieldDescriptor, FieldElement, Rational, UniPoly};
use kf_core::forms::{BinaryForm, FormSpace, ProjPoint};
use kf_core::strata::{StratumId, StratumParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn qq() -> Field {
    FieldDescriptor::rationals()
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    ratio(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn elt(f: &Field, q: Rational) -> FieldElement {
    FieldElement::from_rational(f, q)
}

pub fn int(f: &Field, v: i64) -> FieldElement {
    FieldElement::from_int(f, v)
}

pub fn random_params(r: &mut impl Rng, id: StratumId, n: usize) -> StratumParams {
    let f = qq();
    loop {
        let (a, b, c) = (small_rational(r), small_rational(r), small_rational(r));
        if let Ok(p) = StratumParams::new(id, n, elt(&f, a), elt(&f, b), elt(&f, c)) {
            return p;
        }
    }
}

pub fn space(f: &Field, rows: &[&[i64]]) -> FormSpace {
    let forms: Vec<BinaryForm> = rows
        .iter()
        .map(|r| BinaryForm::from_ints(f, r).unwrap())
        .collect();
    FormSpace::from_basis(f, rows[0].len() - 1, &forms).unwrap()
}

pub fn quintic(f: &Field) -> FormSpace {
    space(
        f,
        &[
            &[1, -5, 0, 0, 0, -1],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ],
    )
}

/// `⟨x⁷ + y⁷, x³y⁴, x²y⁵, xy⁶⟩`, a genus-6 curve.
pub fn septic(f: &Field) -> FormSpace {
    space(
        f,
        &[
            &[1, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
        ],
    )
}

fn rational_roots(coeffs: Vec<FieldElement>) -> Vec<FieldElement> {
    let f = coeffs[0].field().clone();
    UniPoly::new(&f, coeffs).roots_in_field().0
}

/// `t^d − c` for both signs of `c`, as rational roots.
fn signed_roots(d: usize, c: &FieldElement) -> Vec<FieldElement> {
    let f = c.field().clone();
    let mut out = Vec::new();
    for s in [c.clone(), -c] {
        let mut coeffs = vec![FieldElement::zero(&f); d + 1];
        coeffs[0] = -&s;
        coeffs[d] = int(&f, 1);
        out.extend(rational_roots(coeffs));
    }
    out
}

/// The explicit points named by the conditions for `id` at these parameters,
/// where they are defined over the rationals.
pub fn candidates(id: StratumId, p: &StratumParams) -> Vec<ProjPoint> {
    let f = p.field().clone();
    let d = p.degree();
    let dd = int(&f, d as i64);
    let inf = ProjPoint::infinity(&f);
    let aff = |x: FieldElement| ProjPoint::affine(x);
    let mut out = match id {
        StratumId::Tacnode => rational_roots(vec![-&dd, p.b.clone(), &dd * &p.a])
            .into_iter()
            .map(aff)
            .collect(),
        StratumId::Cusp345 | StratumId::Cusp25 => vec![inf, aff(int(&f, 0))],
        StratumId::CuspWithSmoothBranch => vec![aff(&p.a / &dd)],
        StratumId::TwoCusps => vec![inf, aff(int(&f, 0)), aff(&p.a / &dd)],
        StratumId::CuspAndNode => vec![inf, aff(&p.a / &dd)],
        StratumId::OrdinaryTriplePoint => {
            // points (α:−1) = (−α:1)
            let s = &(&int(&f, 1) + &p.a) + &p.b;
            let mut al = signed_roots(d, &p.a);
            al.extend(signed_roots(d, &s).into_iter().map(|r| &r - &int(&f, 1)));
            al.into_iter().map(|a| aff(-a)).collect()
        }
        StratumId::TwoNodes => {
            // points (−1:β) = (−1/β:1)
            signed_roots(d, &p.a)
                .into_iter()
                .filter(|b| !b.is_zero())
                .map(|b| aff(-&b.inv().unwrap()))
                .collect()
        }
    };
    let mut seen = Vec::new();
    out.retain(|q| {
        let fresh = !seen.contains(q);
        seen.push(q.clone());
        fresh
    });
    out
}

/// Parameters with a known Khovanskii-finite point.
pub fn constructed(r: &mut impl Rng, id: StratumId, n: usize) -> (StratumParams, ProjPoint) {
    let f = qq();
    let d = (n + 2) as i64;
    let e = |q: Rational| elt(&f, q);
    let sign = |r: &mut dyn rand::RngCore| if r.gen_bool(0.5) { 1 } else { -1 };
    let nz = |r: &mut dyn rand::RngCore| loop {
        let q = ratio(r.gen_range(-9..=9), r.gen_range(1..=4));
        if q != ratio(0, 1) {
            return q;
        }
    };
    let (a, b, c, q) = match id {
        StratumId::Tacnode => {
            let al = Rational::from_integer(sign(r).into());
            let a = nz(r);
            let dq = Rational::from_integer(d.into());
            let b = (dq.clone() - dq * al.clone() * al.clone() * a.clone()) / al.clone();
            (a, b, ratio(2, 1), ProjPoint::affine(e(al)))
        }
        StratumId::Cusp345 | StratumId::Cusp25 => {
            (nz(r), nz(r), ratio(2, 1), ProjPoint::infinity(&f))
        }
        StratumId::CuspWithSmoothBranch => {
            let al = Rational::from_integer(sign(r).into());
            (
                al.clone() * Rational::from_integer(d.into()),
                ratio(0, 1),
                ratio(2, 1),
                ProjPoint::affine(e(al)),
            )
        }
        StratumId::TwoCusps => {
            let a = ratio(d * sign(r), 1);
            let b = ratio(d, 1) * ratio(d, 1) / a.clone();
            let q = ProjPoint::affine(e(a.clone() / Rational::from_integer(d.into())));
            (a, b, ratio(2, 1), q)
        }
        StratumId::CuspAndNode => (nz(r), ratio(-2, 1), ratio(2, 1), ProjPoint::infinity(&f)),
        StratumId::OrdinaryTriplePoint => {
            // α = 1 at (1:−1)
            let a = ratio(sign(r), 1);
            let b = ratio(sign(r) * 2i64.pow(d as u32), 1) - ratio(1, 1) - a.clone();
            (a, b, ratio(2, 1), ProjPoint::affine(e(ratio(-1, 1))))
        }
        StratumId::TwoNodes => {
            // β = 1 at (−1:1)
            let a = ratio(sign(r), 1);
            let c = loop {
                let c = nz(r);
                if c != ratio(1, 1) && c != ratio(-1, 1) {
                    break c;
                }
            };
            let cp = (c.clone() + ratio(1, 1)) / ratio(2, 1);
            let b = ratio(sign(r), 1) * num_traits::pow(cp, d as usize);
            (a, b, c, ProjPoint::affine(e(ratio(-1, 1))))
        }
    };
    let p =
        StratumParams::new(id, n, e(a), e(b), e(c)).expect("constructed parameters are admissible");
    (p, q)
}

pub fn random_points(r: &mut impl Rng, f: &Field, count: usize) -> Vec<ProjPoint> {
    (0..count)
        .map(|_| ProjPoint::affine(elt(f, ratio(r.gen_range(-7..=7), r.gen_range(1..=3)))))
        .collect()
}

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic(m: usize) -> Vec<i64> {
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for e in 1..m {
        if m % e == 0 {
            let q = cyclotomic(e);
            // exact division of monic integer polynomials
            let mut rem = p.clone();
            let mut out = vec![0i64; rem.len() - q.len() + 1];
            for i in (0..out.len()).rev() {
                let c = rem[i + q.len() - 1];
                out[i] = c;
                for (j, qj) in q.iter().enumerate() {
                    rem[i + j] -= c * qj;
                }
            }
            p = out;
        }
    }
    p
}

/// `Q(ζ_m)` with `ζ_m` as generator, or `Q` for `m ≤ 2`.
pub fn cyclotomic_field(m: usize) -> Field {
    if m <= 2 {
        qq()
    } else {
        FieldDescriptor::from_ints(&cyclotomic(m)).unwrap()
    }
}

/// A primitive m-th root of unity in `cyclotomic_field(m)`.
pub fn primitive_root(m: usize) -> FieldElement {
    let f = cyclotomic_field(m);
    match m {
        1 => int(&f, 1),
        2 => int(&f, -1),
        _ => FieldElement::generator(&f),
    }
}
