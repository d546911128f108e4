//! Deciding whether algebraic numbers are roots of unity.
//!
//! An element of a field of degree `ℓ` that is a root of unity has order
//! at most `ℓ² + 2`, so a bounded powering search is a complete test.

use super::field::FieldElement;
use super::unipoly::{poly_gcd, UniPoly};
use crate::error::{invalid, Result};

/// Largest order a root of unity of degree at most `ell` can have.
pub fn root_of_unity_order_bound(ell: u64) -> u64 {
    ell * ell + 2
}

/// Least `k ≤ ℓ² + 2` with `ζ^k = 1`, where `ℓ` is the degree of ζ's field;
/// `None` when ζ is not a root of unity.
pub fn is_root_of_unity(zeta: &FieldElement) -> Result<Option<u64>> {
    if zeta.is_zero() {
        return invalid("zero is not a root of unity candidate");
    }
    let bound = root_of_unity_order_bound(zeta.field().degree() as u64);
    let mut power = zeta.clone();
    for k in 1..=bound {
        if power.is_one() {
            return Ok(Some(k));
        }
        power = &power * zeta;
    }
    Ok(None)
}

/// Works in `F[t]/(q)` and asks whether some root α of `q` makes `ζ(α)` a
/// root of unity of order at most `k_max`.
///
/// Returns the least such `k` together with `gcd(ζ^k − 1, q)`, whose roots
/// are exactly the α with `ζ(α)^k = 1`.
pub fn unit_root_witness(
    zeta: &UniPoly,
    q: &UniPoly,
    k_max: u64,
) -> Result<Option<(u64, UniPoly)>> {
    if q.is_constant() {
        return invalid("modulus of the quotient ring must be nonconstant");
    }
    let field = q.field().clone();
    let one = UniPoly::constant(FieldElement::one(&field));
    let base = zeta.rem(q)?;
    let mut power = base.clone();
    for k in 1..=k_max {
        let g = poly_gcd(&power.sub(&one), q)?;
        if !g.is_constant() {
            return Ok(Some((k, g)));
        }
        power = power.mul(&base).rem(q)?;
    }
    Ok(None)
}

/// True iff `gcd(ζ^k − 1, q)` is nonconstant for some `k ≤ k_max`.
pub fn unit_root_probe(zeta: &UniPoly, q: &UniPoly, k_max: u64) -> Result<bool> {
    Ok(unit_root_witness(zeta, q, k_max)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{Field, FieldDescriptor};
    use crate::arith::rational::ratio;

    fn q() -> Field {
        FieldDescriptor::rationals()
    }

    #[test]
    fn rational_cases() {
        let f = q();
        assert_eq!(
            is_root_of_unity(&FieldElement::from_int(&f, -1)).unwrap(),
            Some(2)
        );
        assert_eq!(
            is_root_of_unity(&FieldElement::from_int(&f, 1)).unwrap(),
            Some(1)
        );
        assert_eq!(
            is_root_of_unity(&FieldElement::from_int(&f, 2)).unwrap(),
            None
        );
        assert_eq!(
            is_root_of_unity(&FieldElement::from_rational(&f, ratio(3, 2))).unwrap(),
            None
        );
        assert!(is_root_of_unity(&FieldElement::zero(&f)).is_err());
    }

    #[test]
    fn fifth_root_in_cyclotomic_field() {
        let f = FieldDescriptor::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let th = FieldElement::generator(&f);
        assert_eq!(is_root_of_unity(&th).unwrap(), Some(5));
        let one_plus = &FieldElement::one(&f) + &th;
        // under θ ↦ e^{2πi/5}, |1 + θ| = 2cos(π/5) ≠ 1
        assert_eq!(is_root_of_unity(&one_plus).unwrap(), None);
        // -θ is a primitive 10th root
        assert_eq!(is_root_of_unity(&(-&th)).unwrap(), Some(10));
    }

    #[test]
    fn probe_examples() {
        let f = q();
        let t = UniPoly::variable(&f);
        assert!(unit_root_probe(&t, &UniPoly::from_ints(&f, &[-1, 0, 1]), 3).unwrap());
        assert!(!unit_root_probe(&t, &UniPoly::from_ints(&f, &[-2, 0, 1]), 6).unwrap());
        assert!(unit_root_probe(&t, &UniPoly::from_ints(&f, &[3]), 6).is_err());
    }

    #[test]
    fn probe_tacnode_quadratic() {
        // q(α) = 5α² − 5, ζ = −(−α)^5; α = 1 gives ζ = 1
        let f = q();
        let q5 = UniPoly::from_ints(&f, &[-5, 0, 5]);
        let minus_t = UniPoly::variable(&f).neg();
        let zeta = minus_t.pow(5).neg();
        let (k, g) = unit_root_witness(&zeta, &q5, 6).unwrap().unwrap();
        assert_eq!(k, 1);
        assert_eq!(g, UniPoly::from_ints(&f, &[-1, 1]));
        // the other root α = −1 gives ζ = −1, caught at k = 2 only after α = 1 is removed
        let g2 = UniPoly::from_ints(&f, &[1, 1]);
        let (k2, _) = unit_root_witness(&zeta, &g2, 6).unwrap().unwrap();
        assert_eq!(k2, 2);
    }
}
