//! Sparse multivariate polynomials over `Q` and resultants.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, format_rational, integer_content, Rational};
use crate::error::{invalid, Result};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<[String]>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; vars.len()]), c);
        }
        p
    }

    /// The variable with the given name. Panics if it is not in `vars`.
    pub fn var(vars: &Arc<[String]>, name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    pub fn ring(names: &[&str]) -> Arc<[String]> {
        names
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .into()
    }

    pub fn from_terms(
        vars: &Arc<[String]>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials live in different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check(divisor);
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let e: Vec<u32> = m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect();
            let coef = c / &lc;
            let mut t = Self::zero(&self.vars);
            t.add_term(Monomial(e), coef);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Coefficients of `self` viewed as a polynomial in `var`, ascending.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e.0[var] as usize;
            e.0[var] = 0;
            out[k].add_term(e, c.clone());
        }
        out
    }

    /// Substitutes `value` for `var`; the variable stays in the ring.
    pub fn specialize(&self, var: usize, value: &Rational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e.0[var];
            e.0[var] = 0;
            out.add_term(e, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Full evaluation at a point given in variable order.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }

    /// Reduces modulo a monic univariate polynomial in `var`
    /// (coefficients constant first).
    pub fn reduce_mod_var(&self, var: usize, monic: &[Rational]) -> Self {
        let deg = (monic.len() - 1) as u32;
        let mut out = self.clone();
        loop {
            let Some(m) = out.terms.keys().rev().find(|m| m.0[var] >= deg).cloned() else {
                return out;
            };
            let c = out.terms.remove(&m).unwrap();
            for (j, a) in monic[..deg as usize].iter().enumerate() {
                let mut e = m.clone();
                e.0[var] = m.0[var] - deg + j as u32;
                out.add_term(e, -(&c * a));
            }
        }
    }

    /// Scales to integer coefficients with content 1 and a positive
    /// leading coefficient in graded-lex order.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(self.terms.values());
        let nums: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = integer_content(nums.iter());
        let mut k = Rational::new(den, content);
        if self.leading().unwrap().1.is_negative() {
            k = -k;
        }
        self.scale(&k)
    }

    /// Text form with explicit `+`, `*`, `^`, leading term first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> =
                m.0.iter()
                    .zip(self.vars.iter())
                    .filter(|(k, _)| **k > 0)
                    .map(|(&k, v)| {
                        if k == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{k}")
                        }
                    })
                    .collect();
            if factors.is_empty() {
                out.push_str(&format_rational(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&format_rational(&mag));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Determinant by fraction-free elimination; every division is exact.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>, vars: &Arc<[String]>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::constant(vars, Rational::one());
    }
    let mut sign = false;
    let mut prev = MultiPoly::constant(vars, Rational::one());
    for k in 0..n - 1 {
        // pivot on the entry with the fewest terms to limit growth
        let Some(p) = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].num_terms())
        else {
            return MultiPoly::zero(vars);
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to the named variable, computed
/// as the determinant of the Sylvester matrix.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    p.check(q);
    let Some(v) = p.var_index(var) else {
        return invalid(format!("variable {var} is not in the ring"));
    };
    let dp = p.degree_in(v).unwrap_or(0) as usize;
    let dq = q.degree_in(v).unwrap_or(0) as usize;
    if dp == 0 && dq == 0 {
        return invalid(format!("variable {var} occurs in neither polynomial"));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero(p.vars()));
    }
    let vars = p.vars().clone();
    if dq == 0 {
        return Ok(q.pow(dp as u32));
    }
    if dp == 0 {
        return Ok(p.pow(dq as u32));
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let n = dp + dq;
    let mut rows = Vec::with_capacity(n);
    for i in 0..dq {
        let mut row = vec![MultiPoly::zero(&vars); n];
        for (j, c) in pc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..dp {
        let mut row = vec![MultiPoly::zero(&vars); n];
        for (j, c) in qc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(determinant(rows, &vars))
}
