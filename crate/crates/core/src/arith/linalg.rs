//! Row reduction over a number field.

use super::field::{Field, FieldElement};

/// A row space kept in reduced row echelon form.
///
/// Pivot columns are increasing from the first row down, and every pivot
/// entry is one with zeros above and below it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, ncols: usize) -> Self {
        Echelon {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(
        field: &Field,
        ncols: usize,
        rows: impl IntoIterator<Item = Vec<FieldElement>>,
    ) -> Self {
        let mut e = Self::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// What is left of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.ncols {
                if !row[j].is_zero() {
                    v[j] = &v[j] - &(&c * &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..self.ncols {
                if !v[j].is_zero() {
                    row[j] = &row[j] - &(&c * &v[j]);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : r·x = 0 for every row r}` under the plain dot product.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let zero = FieldElement::zero(&self.field);
        let one = FieldElement::one(&self.field);
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|j| !self.pivots.contains(j)) {
            let mut x = vec![zero.clone(); self.ncols];
            x[free] = one.clone();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = -&row[free];
            }
            out.push(x);
        }
        out
    }
}

impl PartialEq for Echelon {
    fn eq(&self, other: &Self) -> bool {
        self.ncols() == other.ncols() && self.rows() == other.rows()
    }
}

pub fn rank(field: &Field, ncols: usize, rows: &[Vec<FieldElement>]) -> usize {
    Echelon::from_rows(field, ncols, rows.iter().cloned()).rank()
}

pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len());
    let mut acc = FieldElement::zero(a.first().map_or_else(|| unreachable!(), |x| x.field()));
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}
