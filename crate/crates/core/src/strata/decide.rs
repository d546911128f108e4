use num_bigint::BigUint;
use num_integer::Integer;

use crate::arith::{is_root_of_unity, poly_gcd, root_of_unity_order_bound, FieldElement, UniPoly};
use crate::decision::{any_valuation_within, Outcome, Verdict, Witness, DEFAULT_CAP};
use crate::error::{precondition, Result};
use crate::forms::ProjPoint;

use super::tables::{point_condition, stratum_bound, stratum_space};
use super::{StratumId, StratumParams};

/// Least `k` at which the condition holds at `q`; by the root-of-unity
/// bound this settles every `k` at once.
fn least_k(id: StratumId, p: &StratumParams, q: &ProjPoint) -> Result<Option<u64>> {
    let Some(zs) = point_condition(id, p, q) else {
        return Ok(None);
    };
    let mut k = 1u64;
    for z in &zs {
        match is_root_of_unity(z)? {
            Some(m) => k = k.lcm(&m),
            None => return Ok(None),
        }
    }
    Ok(Some(k))
}

fn candidates(id: StratumId, p: &StratumParams) -> Vec<ProjPoint> {
    let f = p.field();
    let d = FieldElement::from_int(f, p.degree() as i64);
    let inf = ProjPoint::infinity(f);
    let zero = ProjPoint::affine(FieldElement::zero(f));
    let a_over_d = ProjPoint::affine(&p.a / &d);
    let mut out = match id {
        StratumId::Cusp345 | StratumId::Cusp25 => vec![inf, zero],
        StratumId::TwoCusps => vec![inf, zero, a_over_d],
        StratumId::CuspWithSmoothBranch => vec![a_over_d],
        StratumId::CuspAndNode => vec![inf, a_over_d],
        _ => Vec::new(),
    };
    out.dedup();
    out
}

/// The tacnode quadratic `d a t² + b t − d` split into roots in `F` and
/// the remaining factor.
fn tacnode_quadratic(p: &StratumParams) -> (Vec<FieldElement>, UniPoly) {
    let f = p.field();
    let d = FieldElement::from_int(f, p.degree() as i64);
    let q = UniPoly::new(f, vec![-&d, p.b.clone(), &d * &p.a]);
    q.roots_in_field()
}

/// Least `k ≤ limit` with `gcd((−(−t)^d)^k − 1, q)` nonconstant.
fn tacnode_search(p: &StratumParams, q: &UniPoly, limit: u64) -> Result<Option<u64>> {
    let f = p.field();
    let d = p.degree();
    let sg = FieldElement::from_int(f, if d % 2 == 0 { -1 } else { 1 });
    let zeta = UniPoly::monomial(sg, d).rem(q)?;
    let one = UniPoly::constant(FieldElement::one(f));
    let mut power = zeta.clone();
    for k in 1..=limit {
        if !poly_gcd(&power.sub(&one), q)?.is_constant() {
            return Ok(Some(k));
        }
        power = power.mul(&zeta).rem(q)?;
    }
    Ok(None)
}

fn settled(
    witnesses: Vec<Witness>,
    bound: BigUint,
    cap: u64,
    trace: Vec<(u64, bool)>,
    certain: bool,
) -> Verdict {
    let mut v = Verdict::finish(witnesses, Some(bound.clone()), cap, trace);
    if certain && v.outcome == Outcome::Undecided {
        // every k is covered by the root-of-unity bound, not only those below the cap
        v.outcome = Outcome::NotKf;
        v.bound_used = u64::try_from(&bound).unwrap_or(u64::MAX);
    }
    v
}

fn divides_trace(ks: &[u64], upto: u64) -> Vec<(u64, bool)> {
    (1..=upto)
        .map(|k| (k, ks.iter().any(|m| k % m == 0)))
        .collect()
}

/// Decides Khovanskii-finiteness on a representative curve, at `q` or at
/// every point when `q` is `None`.
pub fn stratum_decide(
    id: StratumId,
    p: &StratumParams,
    q: Option<&ProjPoint>,
    ell: Option<u64>,
    cap: Option<u64>,
) -> Result<Verdict> {
    let field_degree = p.field().degree() as u64;
    let ell = ell.unwrap_or(field_degree);
    if ell < field_degree {
        return precondition(format!(
            "ell = {ell} is below the degree {field_degree} of the coefficient field"
        ));
    }
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let bound = stratum_bound(id, p.n, ell);
    let (limit, _) = Verdict::limits(&Some(bound.clone()), cap);
    let horizon = limit.min(root_of_unity_order_bound(ell).pow(2));

    if let Some(q) = q {
        let k = least_k(id, p, q)?;
        let ks: Vec<u64> = k.into_iter().collect();
        let witnesses = ks
            .iter()
            .map(|&k| Witness::Point {
                point: q.clone(),
                k,
            })
            .collect();
        let upto = ks.first().copied().unwrap_or(horizon).min(limit);
        return Ok(settled(
            witnesses,
            bound,
            cap,
            divides_trace(&ks, upto),
            true,
        ));
    }

    match id {
        StratumId::OrdinaryTriplePoint | StratumId::TwoNodes => {
            let l = stratum_space(id, p)?;
            any_valuation_within(&l, Some(bound), Some(cap))
        }
        StratumId::Tacnode => {
            let (roots, rest) = tacnode_quadratic(p);
            let mut witnesses = Vec::new();
            let mut ks = Vec::new();
            for r in roots {
                let pt = ProjPoint::affine(r);
                if let Some(k) = least_k(id, p, &pt)? {
                    ks.push(k);
                    witnesses.push(Witness::Point { point: pt, k });
                }
            }
            let mut certain = true;
            if !rest.is_constant() {
                match tacnode_search(p, &rest, limit)? {
                    Some(k) => {
                        ks.push(k);
                        witnesses.push(Witness::Algebraic { poly: rest, k });
                    }
                    None => certain = Verdict::limits(&Some(bound.clone()), cap).1,
                }
            }
            let upto = ks.iter().min().copied().unwrap_or(if certain {
                horizon.min(limit)
            } else {
                limit
            });
            Ok(settled(
                witnesses,
                bound,
                cap,
                divides_trace(&ks, upto),
                certain,
            ))
        }
        _ => {
            let mut witnesses = Vec::new();
            let mut ks = Vec::new();
            for pt in candidates(id, p) {
                if let Some(k) = least_k(id, p, &pt)? {
                    ks.push(k);
                    witnesses.push(Witness::Point { point: pt, k });
                }
            }
            let upto = ks.iter().min().copied().unwrap_or(horizon).min(limit);
            Ok(settled(
                witnesses,
                bound,
                cap,
                divides_trace(&ks, upto),
                true,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;

    #[test]
    fn quintic_points() {
        let f = FieldDescriptor::rationals();
        let p = StratumParams::from_ints(&f, StratumId::CuspWithSmoothBranch, 3, 5, 0, 2).unwrap();
        let pt = |a, b| ProjPoint::from_ints(&f, a, b).unwrap();
        let v = stratum_decide(
            StratumId::CuspWithSmoothBranch,
            &p,
            Some(&pt(1, 1)),
            None,
            None,
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 1 });
        let v = stratum_decide(
            StratumId::CuspWithSmoothBranch,
            &p,
            Some(&pt(0, 1)),
            None,
            None,
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::NotKf);
        assert_eq!(v.bound_used, 3);
        let v = stratum_decide(StratumId::CuspWithSmoothBranch, &p, None, None, None).unwrap();
        assert_eq!(v.point(), Some(&pt(1, 1)));
    }

    #[test]
    fn tacnode() {
        let f = FieldDescriptor::rationals();
        let p = StratumParams::from_ints(&f, StratumId::Tacnode, 3, 1, 1, 2).unwrap();
        let v = stratum_decide(StratumId::Tacnode, &p, None, None, None).unwrap();
        assert_eq!(v.outcome, Outcome::NotKf);
        assert_eq!(v.bound_used, 6);
        assert_eq!(v.trace.len(), 6);
        let p = StratumParams::from_ints(&f, StratumId::Tacnode, 3, 2, 5, 2).unwrap();
        let q = ProjPoint::from_ints(&f, -1, 1).unwrap();
        let v = stratum_decide(StratumId::Tacnode, &p, Some(&q), None, None).unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 2 });
        let v = stratum_decide(StratumId::Tacnode, &p, None, None, None).unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 2 });
    }

    #[test]
    fn two_cusps_and_triple_point() {
        let f = FieldDescriptor::rationals();
        let p = StratumParams::from_ints(&f, StratumId::TwoCusps, 3, 1, 25, 2).unwrap();
        let v = stratum_decide(StratumId::TwoCusps, &p, None, None, None).unwrap();
        assert_eq!(
            v.point(),
            Some(
                &ProjPoint::from_rationals(&f, crate::arith::ratio(1, 5), crate::arith::rat(1))
                    .unwrap()
            )
        );
        let p = StratumParams::from_ints(&f, StratumId::OrdinaryTriplePoint, 3, 1, 30, 2).unwrap();
        let v = stratum_decide(StratumId::OrdinaryTriplePoint, &p, None, None, Some(2)).unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 1 });
        assert_eq!(v.point(), Some(&ProjPoint::from_ints(&f, -1, 1).unwrap()));
    }
}
