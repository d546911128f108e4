//! Number fields `Q(θ)` presented by a monic integral minimal polynomial.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::{has_small_factor, rat_divrem, rat_mul, rat_sub, trim_rat};
use super::rational::{format_rational, Rational};
use crate::error::{invalid, Result};

/// A number field `F = Q[t]/(minpoly)` with `[F:Q] = degree`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    minpoly: Vec<BigInt>,
    minpoly_rat: Vec<Rational>,
}

/// Shared handle to a field; elements keep one of these.
pub type Field = Arc<FieldDescriptor>;

impl FieldDescriptor {
    /// The rational numbers, encoded with minimal polynomial `t`.
    pub fn rationals() -> Field {
        Self::new_unchecked(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds `Q[t]/(minpoly)` from integer coefficients, constant term first.
    ///
    /// The polynomial must be monic and nonconstant. Irreducibility is the
    /// caller's job; inputs with a factor of degree one or two are rejected
    /// when that can be detected cheaply.
    pub fn new(minpoly: Vec<BigInt>) -> Result<Field> {
        let mut minpoly = minpoly;
        super::intpoly::trim_int(&mut minpoly);
        if minpoly.len() < 2 {
            return invalid("minimal polynomial must be nonconstant");
        }
        if !minpoly.last().unwrap().is_one() {
            return invalid("minimal polynomial must be monic");
        }
        if minpoly.len() > 2 && has_small_factor(&minpoly) == Some(true) {
            return invalid("minimal polynomial has a factor of degree at most two");
        }
        Ok(Self::new_unchecked(minpoly))
    }

    /// Like [`FieldDescriptor::new`] with `i64` coefficients.
    pub fn from_ints(minpoly: &[i64]) -> Result<Field> {
        Self::new(minpoly.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn new_unchecked(minpoly: Vec<BigInt>) -> Field {
        let minpoly_rat = minpoly
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect();
        Arc::new(FieldDescriptor {
            minpoly,
            minpoly_rat,
        })
    }

    /// `[F:Q]`.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let l = self.degree();
        while v.len() > l {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = v.len() - l;
            for (j, m) in self.minpoly_rat[..l].iter().enumerate() {
                v[shift + j] -= &top * m;
            }
        }
        trim_rat(&mut v);
        v
    }
}

pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An element of a number field, stored as its canonical residue.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    // residue coefficients, constant first, trailing zeros stripped
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Field, q: Rational) -> Self {
        let mut coeffs = vec![q];
        trim_rat(&mut coeffs);
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    /// The class of `t`, i.e. the primitive element θ.
    pub fn generator(field: &Field) -> Self {
        Self::from_residue(field, vec![Rational::zero(), Rational::one()])
    }

    /// Reduces an arbitrary polynomial in θ modulo the minimal polynomial.
    pub fn from_residue(field: &Field, coeffs: Vec<Rational>) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: field.reduce(coeffs),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Residue coefficients, constant term first, without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The residue padded to exactly `[F:Q]` coefficients.
    pub fn residue(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.resize(self.field.degree(), Rational::zero());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        // extended Euclid: s * self ≡ g (mod minpoly)
        let m = &self.field.minpoly_rat;
        let (mut r0, mut r1) = (m.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = rat_divrem(&r0, &r1);
            let s2 = rat_sub(&s0, &rat_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd; a unit exactly when the minimal polynomial is irreducible
        if r0.len() != 1 {
            return None;
        }
        let scale = r0[0].recip();
        let s: Vec<Rational> = s0.into_iter().map(|c| c * &scale).collect();
        Some(Self::from_residue(&self.field, s))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check(&self, other: &Self) {
        debug_assert!(
            same_field(&self.field, &other.field),
            "mixing elements of different fields"
        );
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs: Vec<Rational> = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        trim_rat(&mut coeffs);
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        FieldElement {
            field: self.field.clone(),
            coeffs: rat_sub(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        if self.coeffs.len() <= 1 && rhs.coeffs.len() <= 1 {
            let coeffs = match (self.coeffs.first(), rhs.coeffs.first()) {
                (Some(a), Some(b)) => vec![a * b],
                _ => Vec::new(),
            };
            return FieldElement {
                field: self.field.clone(),
                coeffs,
            };
        }
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.reduce(rat_mul(&self.coeffs, &rhs.coeffs)),
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero.
    fn div(self, rhs: &FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero in number field");
        self * &inv
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        let mut first = true;
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "θ".to_string(),
                _ => format!("θ^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn rejects_bad_minpolys() {
        assert!(FieldDescriptor::from_ints(&[1]).is_err());
        assert!(FieldDescriptor::from_ints(&[1, 2]).is_err());
        assert!(FieldDescriptor::from_ints(&[-1, 0, 1]).is_err());
        assert!(FieldDescriptor::from_ints(&[2, 1, 3, 1, 1]).is_err());
        assert!(FieldDescriptor::from_ints(&[1, 0, 1]).is_ok());
    }

    #[test]
    fn gaussian_rationals() {
        let f = FieldDescriptor::from_ints(&[1, 0, 1]).unwrap();
        let i = FieldElement::generator(&f);
        let one = FieldElement::one(&f);
        assert_eq!(&i * &i, -one.clone());
        let z = &one + &i;
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, one);
        assert_eq!(
            w,
            FieldElement::from_residue(&f, vec![ratio(1, 2), ratio(-1, 2)])
        );
        assert_eq!(i.pow(4), FieldElement::one(&f));
        assert_eq!(z.to_string(), "(θ + 1)");
    }

    #[test]
    fn rationals_fast_path() {
        let q = FieldDescriptor::rationals();
        let a = FieldElement::from_rational(&q, ratio(3, 4));
        let b = FieldElement::from_int(&q, -2);
        assert_eq!((&a * &b).as_rational(), Some(ratio(-3, 2)));
        assert_eq!((&a / &b).as_rational(), Some(ratio(-3, 8)));
        assert_eq!(b.pow(10).as_rational(), Some(rat(1024)));
        assert!(FieldElement::zero(&q).inv().is_none());
    }
}
