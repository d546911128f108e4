use num_bigint::BigUint;

use crate::arith::{binomial, poly_gcd_all, FieldElement, Rational, UniPoly};
use crate::error::{precondition, Error, Result};
use crate::forms::{BinaryForm, FormSpace, PowerCache, ProjPoint};

use super::verdict::{Verdict, Witness, DEFAULT_CAP};

/// `(βx − αy)^{dk} ∈ L^k`.
pub fn membership(l: &FormSpace, q: &ProjPoint, k: usize) -> Result<bool> {
    membership_cached(&mut PowerCache::new(l.clone()), q, k)
}

pub fn membership_cached(cache: &mut PowerCache, q: &ProjPoint, k: usize) -> Result<bool> {
    let lk = cache.get(k)?;
    lk.contains(&BinaryForm::linear_power(q, lk.degree()))
}

/// `max{2(d − n − 1), ((96 d³ ℓ)² + 2)²}`.
pub fn general_bound(d: u64, n: u64, ell: u64) -> BigUint {
    let first = BigUint::from(2 * d.saturating_sub(n + 1));
    let inner = BigUint::from(96u64) * BigUint::from(d).pow(3) * BigUint::from(ell);
    let second = (inner.pow(2) + 2u32).pow(2);
    first.max(second)
}

fn require_genus_two(l: &FormSpace) -> Result<()> {
    match l.genus()? {
        2 => Ok(()),
        g => precondition(format!(
            "decidability needs arithmetic genus 2, got {g}; use membership or value_semigroup instead"
        )),
    }
}

fn check_ell(l: &FormSpace, ell: u64) -> Result<()> {
    if ell < l.field().degree() as u64 {
        return precondition(format!(
            "ell = {ell} is below the degree {} of the coefficient field",
            l.field().degree()
        ));
    }
    Ok(())
}

/// Runs the naive algorithm at `q` until success, the bound, or the cap.
pub fn decide_point(l: &FormSpace, q: &ProjPoint, ell: u64, cap: Option<u64>) -> Result<Verdict> {
    check_ell(l, ell)?;
    require_genus_two(l)?;
    let n = l.dim() as u64 - 1;
    let bound = general_bound(l.degree() as u64, n, ell);
    decide_point_within(l, q, Some(bound), cap)
}

/// The naive iteration at `q` against an arbitrary bound.
pub fn decide_point_within(
    l: &FormSpace,
    q: &ProjPoint,
    bound: Option<BigUint>,
    cap: Option<u64>,
) -> Result<Verdict> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let (limit, _) = Verdict::limits(&bound, cap);
    let mut cache = PowerCache::new(l.clone());
    let mut trace = Vec::new();
    let mut witnesses = Vec::new();
    for k in 1..=limit {
        let hit = membership_cached(&mut cache, q, k as usize)?;
        trace.push((k, hit));
        if hit {
            witnesses.push(Witness::Point {
                point: q.clone(),
                k,
            });
            break;
        }
    }
    Ok(Verdict::finish(witnesses, bound, cap, trace))
}

/// Residues of `(x − t y)^D` modulo the echelon basis of `s`, one
/// polynomial in `t` per non-pivot column.
fn residuals(s: &FormSpace) -> Vec<UniPoly> {
    let field = s.field();
    let dd = s.degree();
    let coeff = |j: usize| -> UniPoly {
        let mut c = Rational::from_integer(binomial(dd as u64, j as u64));
        if j % 2 == 1 {
            c = -c;
        }
        UniPoly::monomial(FieldElement::from_rational(field, c), j)
    };
    let pivots = s.pivots();
    let mut out = Vec::new();
    for j in (0..=dd).filter(|j| !pivots.contains(j)) {
        let mut r = coeff(j);
        for (row, &p) in s.rows().iter().zip(pivots) {
            if !row[j].is_zero() {
                r = r.sub(&coeff(p).scale(&row[j]));
            }
        }
        out.push(r);
    }
    out
}

/// Points `Q` with `(βx − αy)^D ∈ S`: explicit ones in the field and the
/// cofactor carrying the others.
fn kf_points_at_level(s: &FormSpace, k: u64) -> Vec<Witness> {
    let field = s.field();
    let mut out = Vec::new();
    let inf = ProjPoint::infinity(field);
    if s.contains(&BinaryForm::linear_power(&inf, s.degree()))
        .expect("degrees agree")
    {
        out.push(Witness::Point { point: inf, k });
    }
    let res = residuals(s);
    let g = poly_gcd_all(field, res.iter());
    if g.is_zero() {
        // every point works; report a representative
        out.push(Witness::Point {
            point: ProjPoint::affine(FieldElement::zero(field)),
            k,
        });
        return out;
    }
    if g.degree() == Some(0) {
        return out;
    }
    let (roots, rest) = g.roots_in_field();
    for r in roots {
        out.push(Witness::Point {
            point: ProjPoint::affine(r),
            k,
        });
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(Witness::Algebraic { poly: rest, k });
    }
    out
}

/// Searches all points at once: at each level the common roots of the
/// residues of `(x − t y)^{dk}` are exactly the affine witnesses.
pub fn any_valuation(l: &FormSpace, ell: u64, cap: Option<u64>) -> Result<Verdict> {
    check_ell(l, ell)?;
    let bound = match l.genus() {
        Ok(2) => Some(general_bound(l.degree() as u64, l.dim() as u64 - 1, ell)),
        Ok(_) | Err(Error::Inconsistent(_)) => None,
        Err(e) => return Err(e),
    };
    any_valuation_within(l, bound, cap)
}

/// [`any_valuation`] against a caller-supplied bound; `None` searches up
/// to the cap without ever concluding a negative answer.
pub fn any_valuation_within(
    l: &FormSpace,
    bound: Option<BigUint>,
    cap: Option<u64>,
) -> Result<Verdict> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let (limit, _) = Verdict::limits(&bound, cap);
    let mut cache = PowerCache::new(l.clone());
    let mut trace = Vec::new();
    for k in 1..=limit {
        let s = cache.get(k as usize)?;
        let found = kf_points_at_level(&s, k);
        trace.push((k, !found.is_empty()));
        if !found.is_empty() {
            return Ok(Verdict::finish(found, bound, cap, trace));
        }
    }
    Ok(Verdict::finish(Vec::new(), bound, cap, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, FieldDescriptor};
    use crate::decision::Outcome;

    fn space(f: &Field, rows: &[&[i64]]) -> FormSpace {
        let forms: Vec<BinaryForm> = rows
            .iter()
            .map(|r| BinaryForm::from_ints(f, r).unwrap())
            .collect();
        FormSpace::from_basis(f, rows[0].len() - 1, &forms).unwrap()
    }

    fn quintic(f: &Field) -> FormSpace {
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

    #[test]
    fn bounds() {
        assert_eq!(general_bound(5, 3, 1), BigUint::from(144_000_002u64).pow(2));
        assert_eq!(
            general_bound(7, 5, 1),
            (BigUint::from(32928u64).pow(2) + 2u32).pow(2)
        );
    }

    #[test]
    fn quintic_points() {
        let f = FieldDescriptor::rationals();
        let l = quintic(&f);
        let q11 = ProjPoint::from_ints(&f, 1, 1).unwrap();
        let q01 = ProjPoint::from_ints(&f, 0, 1).unwrap();
        assert!(membership(&l, &q11, 1).unwrap());
        assert!(!membership(&l, &q01, 3).unwrap());
        let v = decide_point(&l, &q11, 1, None).unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 1 });
        let v = decide_point(&l, &q01, 1, Some(10)).unwrap();
        assert_eq!(v.outcome, Outcome::Undecided);
        assert_eq!(v.bound_used, 10);
        assert_eq!(v.trace.len(), 10);
    }

    #[test]
    fn quintic_any_valuation() {
        let f = FieldDescriptor::rationals();
        let l = quintic(&f);
        let v = any_valuation(&l, 1, Some(3)).unwrap();
        assert_eq!(v.outcome, Outcome::Kf { k: 1 });
        assert_eq!(v.point(), Some(&ProjPoint::from_ints(&f, 1, 1).unwrap()));
        let res = residuals(&l);
        assert_eq!(res.len(), 2);
        let g = poly_gcd_all(&f, res.iter());
        assert_eq!(g, UniPoly::from_ints(&f, &[-1, 1]));
    }

    #[test]
    fn genus_precondition() {
        let f = FieldDescriptor::rationals();
        let l = FormSpace::full(&f, 5);
        let q = ProjPoint::infinity(&f);
        assert!(matches!(
            decide_point(&l, &q, 1, Some(2)),
            Err(Error::Precondition(_))
        ));
        assert!(decide_point(&quintic(&f), &q, 0, Some(2)).is_err());
    }
}
