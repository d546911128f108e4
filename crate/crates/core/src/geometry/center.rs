use crate::arith::{binomial, Echelon, Field, FieldElement, Rational};
use crate::error::{invalid, Result};
use crate::forms::{FormSpace, ProjPoint};

/// The center `U = L^⊥` of the projection, a plane in `V = K[x,y]_d^*`.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterLine {
    degree: usize,
    ech: Echelon,
}

impl CenterLine {
    /// `span{u, v}` in coordinates dual to `x^d, x^(d-1) y, …, y^d`.
    pub fn new(field: &Field, degree: usize, rows: &[Vec<FieldElement>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != degree + 1) {
            return invalid(format!("center rows must have length {}", degree + 1));
        }
        let ech = Echelon::from_rows(field, degree + 1, rows.iter().cloned());
        if ech.rank() != 2 {
            return invalid(format!("a center line needs rank 2, got {}", ech.rank()));
        }
        Ok(CenterLine { degree, ech })
    }

    pub fn from_ints(field: &Field, degree: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&c| FieldElement::from_int(field, c))
                    .collect()
            })
            .collect();
        Self::new(field, degree, &rows)
    }

    pub fn field(&self) -> &Field {
        self.ech.field()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        self.ech.rows()
    }
}

/// `U = L^⊥`; needs `dim L = d − 1`.
pub fn center_of(l: &FormSpace) -> Result<CenterLine> {
    let d = l.degree();
    if l.dim() + 2 != d + 1 {
        return invalid(format!(
            "center line needs dim L = d - 1 = {}, got {}",
            d.saturating_sub(1),
            l.dim()
        ));
    }
    let ns = Echelon::from_rows(l.field(), d + 1, l.rows().iter().cloned()).nullspace();
    CenterLine::new(l.field(), d, &ns)
}

/// `L = U^⊥`.
pub fn space_of(u: &CenterLine) -> FormSpace {
    let ns = u.ech.nullspace();
    let ech = Echelon::from_rows(u.field(), u.degree + 1, ns);
    FormSpace::from_echelon(u.degree, ech)
        .expect("a line in P^d with d >= 2 has a nonzero complement")
}

/// Basis of the osculating space `V^i(P)`: the derivatives of orders
/// `0, …, i − 1` of the Veronese curve at `P`.
pub fn osculating_basis(p: &ProjPoint, i: usize, d: usize) -> Result<Vec<Vec<FieldElement>>> {
    if i > d {
        return invalid(format!("osculating index {i} exceeds d = {d}"));
    }
    let field = p.field();
    let zero = FieldElement::zero(field);
    let rows = (0..i)
        .map(|j| {
            if p.is_infinity() {
                let mut e = vec![zero.clone(); d + 1];
                e[j] = FieldElement::one(field);
                e
            } else {
                // component m of (s^d, s^(d-1), …, 1) differentiated j times, over j!
                (0..=d)
                    .map(|m| {
                        if d - m < j {
                            return zero.clone();
                        }
                        let b = Rational::from_integer(binomial((d - m) as u64, j as u64));
                        &FieldElement::from_rational(field, b) * &p.alpha().pow((d - m - j) as u64)
                    })
                    .collect()
            }
        })
        .collect();
    Ok(rows)
}

/// `dim(U ∩ ⟨V^{α_1}(P_1), …, V^{α_r}(P_r)⟩)`.
pub fn lambda_prime(u: &CenterLine, points: &[ProjPoint], alpha: &[usize]) -> Result<usize> {
    if points.len() != alpha.len() {
        return invalid("one multiplicity per point is required");
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return invalid(format!("point {p} is listed twice"));
        }
    }
    let d = u.degree;
    let mut f = Echelon::new(u.field(), d + 1);
    for (p, &a) in points.iter().zip(alpha) {
        if a > d {
            return invalid(format!("multiplicity {a} exceeds d = {d}"));
        }
        for row in osculating_basis(p, a, d)? {
            f.insert(row);
        }
    }
    let rf = f.rank();
    for r in u.rows() {
        f.insert(r.clone());
    }
    Ok(2 + rf - f.rank())
}
