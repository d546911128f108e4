//! Dense univariate polynomials over a number field.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{same_field, Field, FieldElement};
use super::intpoly::{rat_monic_gcd, rational_roots};
use super::rational::{common_denominator, integer_content, Rational};
use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    // ascending powers, leading coefficient nonzero
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| same_field(c.field(), field)));
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_rationals(field: &Field, coeffs: &[Rational]) -> Self {
        Self::new(
            field,
            coeffs
                .iter()
                .map(|c| FieldElement::from_rational(field, c.clone()))
                .collect(),
        )
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(
            field,
            coeffs
                .iter()
                .map(|&c| FieldElement::from_int(field, c))
                .collect(),
        )
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// The polynomial `t`.
    pub fn variable(field: &Field) -> Self {
        Self::new(
            field,
            vec![FieldElement::zero(field), FieldElement::one(field)],
        )
    }

    /// `c * t^n`.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![FieldElement::zero(&field); n];
        coeffs.push(c);
        Self::new(&field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            &self.field,
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            &self.field,
            (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out =
            vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|x| -x).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(FieldElement::one(&self.field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &FieldElement::from_int(&self.field, i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder. Fails when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(lead) = divisor.leading() else {
            return invalid("polynomial division by zero");
        };
        let lead_inv = lead.inv().expect("nonzero field element is invertible");
        let db = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quot = vec![FieldElement::zero(&self.field); rem.len() - db];
        while rem.len() > db {
            let shift = rem.len() - 1 - db;
            let c = &rem[rem.len() - 1] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in divisor.coeffs.iter().enumerate() {
                    rem[shift + j] = &rem[shift + j] - &(&c * dj);
                }
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(&self.field, quot), Self::new(&self.field, rem)))
    }

    /// Remainder modulo `m`.
    pub fn rem(&self, m: &Self) -> Result<Self> {
        Ok(self.div_rem(m)?.1)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = poly_gcd(self, &self.derivative()).expect("nonzero");
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// `self` times the rational scalar that makes every rational
    /// coordinate of every coefficient integral with content one.
    pub fn primitive(&self) -> Self {
        let all: Vec<&Rational> = self.coeffs.iter().flat_map(|c| c.coeffs()).collect();
        if all.is_empty() {
            return self.clone();
        }
        let den = common_denominator(all.iter().copied());
        let nums: Vec<BigInt> = all
            .iter()
            .map(|c| (*c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let k = Rational::new(den, integer_content(nums.iter()));
        if k.is_one() {
            return self.clone();
        }
        self.scale(&FieldElement::from_rational(&self.field, k))
    }

    /// The coordinates `p_j` with `p = Σ θ^j p_j`, each in `Q[t]`.
    fn rational_coordinates(&self) -> Vec<Vec<Rational>> {
        let l = self.field.degree();
        (0..l)
            .map(|j| {
                self.coeffs
                    .iter()
                    .map(|c| c.coeffs().get(j).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect()
    }

    /// The distinct roots of `self` that lie in `Q ⊂ F`, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_constant() {
            return Vec::new();
        }
        let coords = self.rational_coordinates();
        let g = coords
            .iter()
            .fold(Vec::<Rational>::new(), |acc, p| rat_monic_gcd(&acc, p));
        rational_roots(&g)
    }

    /// Roots in `F` that can be found without factoring: all rational
    /// roots, plus the root of any linear factor left after removing them.
    /// Returns the roots and the monic squarefree cofactor that carries the
    /// remaining roots (a constant when every root was found).
    pub fn roots_in_field(&self) -> (Vec<FieldElement>, UniPoly) {
        let mut rest = self.squarefree();
        let mut roots = Vec::new();
        for r in self.rational_roots() {
            let x = FieldElement::from_rational(&self.field, r);
            let lin = UniPoly::new(&self.field, vec![-&x, FieldElement::one(&self.field)]);
            rest = rest.div_exact(&lin).expect("root gives a linear factor");
            roots.push(x);
        }
        if rest.degree() == Some(1) {
            let x = -&(&rest.coeff(0) / &rest.coeff(1));
            roots.push(x);
            rest = UniPoly::constant(FieldElement::one(&self.field));
        }
        (roots, rest)
    }

    /// Text form in the given variable name, using explicit `*` and `^`.
    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_in("t"))
    }
}

/// Monic greatest common divisor; fails only when both inputs are zero.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return invalid("gcd of two zero polynomials");
    }
    if p.field().is_rational() {
        let rats = |u: &UniPoly| -> Vec<Rational> {
            u.coeffs()
                .iter()
                .map(|c| c.as_rational().expect("rational field"))
                .collect()
        };
        return Ok(UniPoly::from_rationals(
            p.field(),
            &rat_monic_gcd(&rats(p), &rats(q)),
        ));
    }
    let (mut a, mut b) = (p.primitive(), q.primitive());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r.primitive();
    }
    Ok(a.monic())
}

/// Gcd of many polynomials, skipping zeros; the zero polynomial if all vanish.
pub fn poly_gcd_all<'a>(field: &Field, polys: impl IntoIterator<Item = &'a UniPoly>) -> UniPoly {
    let mut acc = UniPoly::zero(field);
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = poly_gcd(&acc, p).expect("one side nonzero");
        if acc.degree() == Some(0) {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::FieldDescriptor;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn gcd_examples() {
        let q = FieldDescriptor::rationals();
        let p = |c: &[i64]| UniPoly::from_ints(&q, c);
        assert_eq!(
            poly_gcd(&p(&[-1, 1]), &p(&[-1, 0, 0, 0, 0, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(
            poly_gcd(&p(&[1, 0, 1]), &p(&[0, 1, 0, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        assert!(poly_gcd(&p(&[]), &p(&[])).is_err());
        assert_eq!(poly_gcd(&p(&[0, 3]), &p(&[])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn gcd_over_gaussian_field() {
        let f = FieldDescriptor::from_ints(&[1, 0, 1]).unwrap();
        let i = FieldElement::generator(&f);
        let s_minus_i = UniPoly::new(&f, vec![-&i, FieldElement::one(&f)]);
        let s2p1 = UniPoly::from_ints(&f, &[1, 0, 1]);
        let g = poly_gcd(&s_minus_i, &s2p1).unwrap();
        assert_eq!(g, s_minus_i);
        // substitution check: the root i kills both inputs
        assert!(s2p1.eval(&i).is_zero());
        assert!(g.eval(&i).is_zero());
    }

    #[test]
    fn roots_and_cofactor() {
        let q = FieldDescriptor::rationals();
        // (2t - 1)(t^2 - 2)(t + 3)^2
        let p = UniPoly::from_ints(&q, &[-1, 2])
            .mul(&UniPoly::from_ints(&q, &[-2, 0, 1]))
            .mul(&UniPoly::from_ints(&q, &[3, 1]).pow(2));
        let (roots, rest) = p.roots_in_field();
        let rs: Vec<_> = roots.iter().map(|r| r.as_rational().unwrap()).collect();
        assert_eq!(rs, vec![rat(-3), ratio(1, 2)]);
        assert_eq!(rest, UniPoly::from_ints(&q, &[-2, 0, 1]));
    }

    #[test]
    fn rational_roots_over_extension() {
        let f = FieldDescriptor::from_ints(&[-2, 0, 1]).unwrap();
        let th = FieldElement::generator(&f);
        // (t - 5)(t - θ)
        let p = UniPoly::from_ints(&f, &[-5, 1])
            .mul(&UniPoly::new(&f, vec![-&th, FieldElement::one(&f)]));
        assert_eq!(p.rational_roots(), vec![rat(5)]);
        let (roots, rest) = p.roots_in_field();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[1], th);
        assert!(rest.is_constant());
    }

    #[test]
    fn display() {
        let q = FieldDescriptor::rationals();
        let p = UniPoly::from_rationals(&q, &[rat(-1), rat(0), ratio(-1, 2), rat(1)]);
        assert_eq!(p.fmt_in("s"), "s^3 - 1/2*s^2 - 1");
    }
}
