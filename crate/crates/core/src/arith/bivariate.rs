//! Polynomials in `s, t` over a number field, viewed as `F[s][t]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{Field, FieldElement};
use super::rational::{common_denominator, Rational};
use super::unipoly::UniPoly;

/// `Σ coeffs[k](s) t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    field: Field,
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(field: &Field, mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// `p(s) q(t)`.
    pub fn outer(p: &UniPoly, q: &UniPoly) -> Self {
        let coeffs = q.coeffs().iter().map(|c| p.scale(c)).collect();
        Self::new(p.field(), coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = UniPoly::zero(&self.field);
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .unwrap_or(&zero)
                    .add(other.coeffs.get(k).unwrap_or(&zero))
            })
            .collect();
        Self::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&FieldElement::from_int(&self.field, -1)))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(
            &self.field,
            self.coeffs.iter().map(|p| p.scale(c)).collect(),
        )
    }

    /// Exact quotient by `t − s`, if it divides.
    pub fn div_t_minus_s(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let s = UniPoly::variable(&self.field);
        let n = self.coeffs.len();
        if n == 1 {
            return None;
        }
        // synthetic division by the root t = s
        let mut q = vec![UniPoly::zero(&self.field); n - 1];
        q[n - 2] = self.coeffs[n - 1].clone();
        for k in (1..n - 1).rev() {
            q[k - 1] = self.coeffs[k].add(&s.mul(&q[k]));
        }
        let rem = self.coeffs[0].add(&s.mul(&q[0]));
        rem.is_zero().then(|| Self::new(&self.field, q))
    }

    /// Divides out every factor `t − s`.
    pub fn saturate_diagonal(&self) -> Self {
        let mut p = self.clone();
        if p.is_zero() {
            return p;
        }
        while let Some(q) = p.div_t_minus_s() {
            p = q;
        }
        p
    }

    /// The polynomial in `t` obtained by fixing `s = x`.
    pub fn at_s(&self, x: &FieldElement) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Text form in `s` and `t`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let inner = c.fmt_in("s");
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            parts.push(
                match (
                    tpow.is_empty(),
                    c.coeffs().iter().filter(|x| !x.is_zero()).count(),
                ) {
                    (true, _) => inner,
                    (false, 1) if inner == "1" => tpow,
                    (false, 1) => format!("{inner}*{tpow}"),
                    (false, _) => format!("({inner})*{tpow}"),
                },
            );
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Determinant of the Sylvester matrix of two coefficient vectors
/// (constant term first) with the given formal degrees.
fn sylvester_det(a: &[FieldElement], b: &[FieldElement], field: &Field) -> FieldElement {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    let zero = FieldElement::zero(field);
    let mut m: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
    for i in 0..db {
        let mut row = vec![zero.clone(); n];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        m.push(row);
    }
    for i in 0..da {
        let mut row = vec![zero.clone(); n];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        m.push(row);
    }
    let mut det = FieldElement::one(field);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return zero;
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let inv = m[k][k].inv().expect("nonzero pivot");
        det = &det * &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k + 1..n {
                if !m[k][j].is_zero() {
                    m[i][j] = &m[i][j] - &(&factor * &m[k][j]);
                }
            }
        }
    }
    det
}

/// The same determinant for rational entries, by fraction-free elimination
/// over the integers after clearing denominators.
fn sylvester_det_rational(a: &[Rational], b: &[Rational]) -> Rational {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    let clear = |v: &[Rational]| -> (Vec<BigInt>, BigInt) {
        let den = common_denominator(v);
        let ints = v
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (ints, den)
    };
    let (ai, den_a) = clear(a);
    let (bi, den_b) = clear(b);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..db {
        for (j, c) in ai.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in bi.iter().rev().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let scale = num_traits::pow(den_a, db) * num_traits::pow(den_b, da);
    Rational::new(sign * prev, scale)
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(field: &Field, xs: &[FieldElement], ys: &[FieldElement]) -> UniPoly {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = &(&c[i] - &c[i - 1]) / &(&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UniPoly::constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(field, vec![-&xs[i], FieldElement::one(field)]);
        p = p.mul(&lin).add(&UniPoly::constant(c[i].clone()));
    }
    p
}

/// `Res_t(a, b)`, by evaluating the Sylvester determinant at enough values
/// of `s` and interpolating.
pub fn resultant_t(a: &BiPoly, b: &BiPoly) -> UniPoly {
    let field = a.field.clone();
    let (Some(da), Some(db)) = (a.degree_t(), b.degree_t()) else {
        return UniPoly::zero(&field);
    };
    if da == 0 {
        return a.coeffs[0].pow(db as u32);
    }
    if db == 0 {
        return b.coeffs[0].pow(da as u32);
    }
    let deg_s = |p: &BiPoly| {
        p.coeffs
            .iter()
            .filter_map(UniPoly::degree)
            .max()
            .unwrap_or(0)
    };
    let bound = db * deg_s(a) + da * deg_s(b);
    let xs: Vec<FieldElement> = (0..=bound as i64)
        .map(|i| FieldElement::from_int(&field, if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }))
        .collect();
    let ys: Vec<FieldElement> = xs
        .iter()
        .map(|x| {
            let ea: Vec<FieldElement> = a.coeffs.iter().map(|c| c.eval(x)).collect();
            let eb: Vec<FieldElement> = b.coeffs.iter().map(|c| c.eval(x)).collect();
            if field.is_rational() {
                let rats = |v: &[FieldElement]| -> Vec<Rational> {
                    v.iter()
                        .map(|c| c.as_rational().expect("rational field"))
                        .collect()
                };
                FieldElement::from_rational(&field, sylvester_det_rational(&rats(&ea), &rats(&eb)))
            } else {
                sylvester_det(&ea, &eb, &field)
            }
        })
        .collect();
    interpolate(&field, &xs, &ys)
}
