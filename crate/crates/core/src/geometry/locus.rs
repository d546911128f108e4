use crate::arith::{poly_gcd, resultant_t, BiPoly, FieldElement, UniPoly};
use crate::error::{precondition, Result};
use crate::forms::{BinaryForm, FormSpace, ProjPoint};

use super::center::center_of;
use super::classify::{classify_with_profile, LambdaProfile, SingularityType};

/// Polynomials whose roots contain every singular parameter of the map
/// `P^1 → P^n` given by a linear series.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    /// The minors `f_i(s) f_j(t) − f_j(s) f_i(t)` with all factors `t − s` removed.
    pub secant_minors: Vec<BiPoly>,
    /// Monic squarefree polynomial in `s` vanishing at every affine parameter
    /// sharing its image with another parameter.
    pub secant_eliminant: UniPoly,
    /// Monic gcd of the Jacobian minors, dehomogenized at `y = 1`.
    pub cusp_poly: UniPoly,
    /// Whether the map is ramified at `(1:0)`.
    pub cusp_at_infinity: bool,
}

/// One singular point of the image with the preimages found in `F`.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub preimages: Vec<ProjPoint>,
    pub ramified: Vec<bool>,
    /// False when some preimage is not defined over `F`.
    pub complete: bool,
    pub kind: Option<SingularityType>,
    pub profile: Option<LambdaProfile>,
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub points: Vec<SingularPoint>,
    /// Squarefree factors carrying singular parameters outside `F`.
    pub unresolved: Vec<UniPoly>,
    /// Sum of delta-invariants, when every singular point was classified.
    pub total_delta: Option<u32>,
}

fn jacobian_common_factor(l: &FormSpace) -> Result<(UniPoly, usize)> {
    let basis = l.basis();
    let grads: Vec<(BinaryForm, BinaryForm)> = basis
        .iter()
        .map(|f| (f.partial_x(), f.partial_y()))
        .collect();
    let mut minors = Vec::new();
    for i in 0..grads.len() {
        for j in i + 1..grads.len() {
            minors.push(
                grads[i]
                    .0
                    .mul(&grads[j].1)
                    .sub(&grads[j].0.mul(&grads[i].1)),
            );
        }
    }
    let deg = minors.first().map(BinaryForm::degree).unwrap_or(0);
    if minors.iter().all(BinaryForm::is_zero) {
        return precondition("the linear series does not separate tangent directions");
    }
    Ok(FormSpace::span(l.field(), deg, &minors)?.common_factor())
}

fn combination(minors: &[BiPoly], seed: u64) -> BiPoly {
    let field = minors[0].field().clone();
    let mut acc = BiPoly::new(&field, Vec::new());
    for (k, m) in minors.iter().enumerate() {
        let c = ((k as u64 + 1) * (2 * seed + 3)) % 17 + 1;
        acc = acc.add(&m.scale(&FieldElement::from_int(&field, c as i64)));
    }
    acc.saturate_diagonal()
}

pub fn singular_parameter_locus(l: &FormSpace) -> Result<SingularLocus> {
    if !l.basepoint_free() {
        return precondition("singular parameters need a basepoint-free linear series");
    }
    let field = l.field().clone();
    let affine: Vec<UniPoly> = l.basis().iter().map(BinaryForm::dehomogenize).collect();
    let mut minors = Vec::new();
    for i in 0..affine.len() {
        for j in i + 1..affine.len() {
            let m =
                BiPoly::outer(&affine[i], &affine[j]).sub(&BiPoly::outer(&affine[j], &affine[i]));
            if !m.is_zero() {
                minors.push(m.saturate_diagonal());
            }
        }
    }
    let one = UniPoly::constant(FieldElement::one(&field));
    let secant_eliminant = if minors.iter().all(|m| m.degree_t() == Some(0)) {
        one.clone()
    } else {
        let mut g = UniPoly::zero(&field);
        for r in 0..3 {
            let res = resultant_t(
                &combination(&minors, 2 * r),
                &combination(&minors, 2 * r + 1),
            );
            if !res.is_zero() {
                g = poly_gcd(&g, &res)?;
            }
        }
        if g.is_zero() {
            return precondition("the map is not birational onto its image");
        }
        g.squarefree().monic()
    };
    let (cusp, e) = jacobian_common_factor(l)?;
    Ok(SingularLocus {
        secant_minors: minors,
        secant_eliminant,
        cusp_poly: cusp.squarefree().monic(),
        cusp_at_infinity: e > 0,
    })
}

fn values_at(basis: &[BinaryForm], p: &ProjPoint) -> Vec<FieldElement> {
    basis.iter().map(|f| f.eval_at(p)).collect()
}

/// Parameters with the same image as `p`; the flag is false when some of
/// them lie outside `F`.
fn fiber(l: &FormSpace, p: &ProjPoint) -> (Vec<ProjPoint>, bool, Option<UniPoly>) {
    let basis = l.basis();
    let v = values_at(&basis, p);
    let mut forms = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            forms.push(basis[j].scale(&v[i]).sub(&basis[i].scale(&v[j])));
        }
    }
    let mut pts = vec![p.clone()];
    let Ok(span) = FormSpace::span(l.field(), l.degree(), &forms) else {
        return (pts, true, None);
    };
    let (g, e) = span.common_factor();
    if e > 0 && !pts.contains(&ProjPoint::infinity(l.field())) {
        pts.push(ProjPoint::infinity(l.field()));
    }
    let (roots, rest) = g.roots_in_field();
    for r in roots {
        let q = ProjPoint::affine(r);
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    let complete = rest.degree().unwrap_or(0) == 0;
    (pts, complete, (!complete).then_some(rest))
}

fn ramified_at(l: &FormSpace, p: &ProjPoint) -> bool {
    let basis = l.basis();
    let dx = values_at(
        &basis.iter().map(BinaryForm::partial_x).collect::<Vec<_>>(),
        p,
    );
    let dy = values_at(
        &basis.iter().map(BinaryForm::partial_y).collect::<Vec<_>>(),
        p,
    );
    for i in 0..dx.len() {
        for j in i + 1..dx.len() {
            if !(&(&dx[i] * &dy[j]) - &(&dx[j] * &dy[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Finds the singular points whose preimages can be located in `F` and
/// classifies each when `L` has codimension two.
pub fn singular_points(l: &FormSpace) -> Result<SingularityReport> {
    let locus = singular_parameter_locus(l)?;
    let field = l.field().clone();
    let center = center_of(l).ok();
    let mut candidates = vec![ProjPoint::infinity(&field)];
    let mut unresolved = Vec::new();
    for poly in [&locus.secant_eliminant, &locus.cusp_poly] {
        let (roots, rest) = poly.roots_in_field();
        candidates.extend(roots.into_iter().map(ProjPoint::affine));
        if rest.degree().unwrap_or(0) > 0 && !unresolved.contains(&rest) {
            unresolved.push(rest);
        }
    }
    let mut points: Vec<SingularPoint> = Vec::new();
    for c in candidates {
        if points.iter().any(|sp| sp.preimages.contains(&c)) {
            continue;
        }
        let (mut pre, complete, rest) = fiber(l, &c);
        let ramified: Vec<bool> = pre.iter().map(|p| ramified_at(l, p)).collect();
        if pre.len() == 1 && !ramified[0] && complete {
            continue;
        }
        if let Some(r) = rest {
            if !unresolved.contains(&r) {
                unresolved.push(r);
            }
        }
        let mut order: Vec<usize> = (0..pre.len()).collect();
        // infinity first, then affine parameters in the order found
        order.sort_by_key(|&i| !pre[i].is_infinity());
        pre = order.iter().map(|&i| pre[i].clone()).collect();
        let ramified = order.iter().map(|&i| ramified[i]).collect();
        let (kind, profile) = match (&center, complete) {
            (Some(u), true) if pre.len() <= 3 => match classify_with_profile(u, &pre) {
                Ok((t, p)) => (Some(t), Some(p)),
                Err(_) => (None, None),
            },
            _ => (None, None),
        };
        points.push(SingularPoint {
            preimages: pre,
            ramified,
            complete,
            kind,
            profile,
        });
    }
    let total_delta = if unresolved.is_empty() && points.iter().all(|p| p.kind.is_some()) {
        Some(points.iter().map(|p| p.kind.unwrap().delta()).sum())
    } else {
        None
    };
    Ok(SingularityReport {
        points,
        unresolved,
        total_delta,
    })
}
