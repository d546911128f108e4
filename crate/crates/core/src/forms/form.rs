use std::fmt;

use crate::arith::{binomial, Field, FieldElement, Rational, UniPoly};
use crate::error::{invalid, Result};

/// A binary form of degree `d`; `coeffs[j]` multiplies `x^(d-j) y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl BinaryForm {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return invalid("a binary form needs at least one coefficient");
        }
        Ok(BinaryForm {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn from_rationals(field: &Field, coeffs: &[Rational]) -> Result<Self> {
        Self::new(
            field,
            coeffs
                .iter()
                .map(|c| FieldElement::from_rational(field, c.clone()))
                .collect(),
        )
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            field,
            coeffs
                .iter()
                .map(|&c| FieldElement::from_int(field, c))
                .collect(),
        )
    }

    pub fn zero(field: &Field, degree: usize) -> Self {
        BinaryForm {
            field: field.clone(),
            coeffs: vec![FieldElement::zero(field); degree + 1],
        }
    }

    /// `c x^(d-j) y^j`.
    pub fn monomial(c: FieldElement, degree: usize, j: usize) -> Self {
        let mut f = Self::zero(c.field(), degree);
        f.coeffs[j] = c;
        f
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        BinaryForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        BinaryForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        BinaryForm {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.field, self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let d = self.degree() as u64;
        let mut acc = FieldElement::zero(&self.field);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let j = j as u64;
                acc = &acc + &(c * &(&x.pow(d - j) * &y.pow(j)));
            }
        }
        acc
    }

    pub fn eval_at(&self, p: &ProjPoint) -> FieldElement {
        self.eval(p.alpha(), p.beta())
    }

    /// `f(x + αy, y)`.
    pub fn shift(&self, alpha: &FieldElement) -> Self {
        let d = self.degree();
        let powers: Vec<FieldElement> = (0..=d as u64).map(|i| alpha.pow(i)).collect();
        let mut out = Self::zero(&self.field, d);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..=d - j {
                let b = FieldElement::from_rational(
                    &self.field,
                    Rational::from_integer(binomial((d - j) as u64, i as u64)),
                );
                out.coeffs[j + i] = &out.coeffs[j + i] + &(&(c * &b) * &powers[i]);
            }
        }
        out
    }

    /// `f(y, x)`.
    pub fn swap(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// `f(s, 1)` as a polynomial in `s`.
    pub fn dehomogenize(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::new(&self.field, c)
    }

    /// Largest `e` with `y^e` dividing `f`; `None` for the zero form.
    pub fn y_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Vanishing order at `p`; `None` for the zero form.
    pub fn order_at(&self, p: &ProjPoint) -> Option<usize> {
        if p.is_infinity() {
            self.y_order()
        } else {
            self.shift(p.alpha()).swap().y_order()
        }
    }

    pub fn partial_x(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return self.clone();
        }
        let coeffs = (0..d)
            .map(|j| &self.coeffs[j] * &FieldElement::from_int(&self.field, (d - j) as i64))
            .collect();
        BinaryForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn partial_y(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return self.clone();
        }
        let coeffs = (1..=d)
            .map(|j| &self.coeffs[j] * &FieldElement::from_int(&self.field, j as i64))
            .collect();
        BinaryForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// The binomial expansion of `(βx − αy)^m` for `Q = (α:β)`.
    pub fn linear_power(q: &ProjPoint, m: usize) -> Self {
        let field = q.alpha().field().clone();
        let neg_alpha = -q.alpha();
        let coeffs = (0..=m)
            .map(|j| {
                let b = FieldElement::from_rational(
                    &field,
                    Rational::from_integer(binomial(m as u64, j as u64)),
                );
                &(&b * &q.beta().pow((m - j) as u64)) * &neg_alpha.pow(j as u64)
            })
            .collect();
        BinaryForm { field, coeffs }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = Vec::new();
            match d - j {
                0 => {}
                1 => mono.push("x".to_string()),
                e => mono.push(format!("x^{e}")),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                e => mono.push(format!("y^{e}")),
            }
            let mono = mono.join("*");
            let cs = c.to_string();
            parts.push(if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts[0])?;
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => write!(f, " - {rest}")?,
                None => write!(f, " + {p}")?,
            }
        }
        Ok(())
    }
}

/// A point `(α:β)` of the projective line, normalized to `β = 1` or `(1:0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    alpha: FieldElement,
    beta: FieldElement,
}

impl ProjPoint {
    pub fn new(alpha: FieldElement, beta: FieldElement) -> Result<Self> {
        if beta.is_zero() {
            if alpha.is_zero() {
                return invalid("(0:0) is not a point of the projective line");
            }
            return Ok(Self::infinity(alpha.field()));
        }
        let a = &alpha / &beta;
        Ok(Self::affine(a))
    }

    /// `(α:1)`.
    pub fn affine(alpha: FieldElement) -> Self {
        let beta = FieldElement::one(alpha.field());
        ProjPoint { alpha, beta }
    }

    /// `(1:0)`.
    pub fn infinity(field: &Field) -> Self {
        ProjPoint {
            alpha: FieldElement::one(field),
            beta: FieldElement::zero(field),
        }
    }

    pub fn from_rationals(field: &Field, alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(
            FieldElement::from_rational(field, alpha),
            FieldElement::from_rational(field, beta),
        )
    }

    pub fn from_ints(field: &Field, alpha: i64, beta: i64) -> Result<Self> {
        Self::new(
            FieldElement::from_int(field, alpha),
            FieldElement::from_int(field, beta),
        )
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    pub fn field(&self) -> &Field {
        self.alpha.field()
    }

    pub fn is_infinity(&self) -> bool {
        self.beta.is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.alpha, self.beta)
    }
}
