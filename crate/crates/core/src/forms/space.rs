use std::sync::{Arc, RwLock};

use crate::arith::{poly_gcd_all, Echelon, Field, FieldElement, UniPoly};
use crate::error::{invalid, precondition, Error, Result};

use super::form::{BinaryForm, ProjPoint};

/// A subspace of `K[x,y]_d` held by its reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct FormSpace {
    degree: usize,
    ech: Echelon,
}

impl PartialEq for FormSpace {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.ech.rows() == other.ech.rows()
    }
}

impl Eq for FormSpace {}

impl FormSpace {
    /// Builds the space from a basis; zero or dependent rows are rejected.
    pub fn from_basis(field: &Field, degree: usize, basis: &[BinaryForm]) -> Result<Self> {
        if basis.is_empty() {
            return invalid("a form space needs at least one basis form");
        }
        let mut ech = Echelon::new(field, degree + 1);
        for (i, f) in basis.iter().enumerate() {
            if f.degree() != degree {
                return invalid(format!(
                    "basis form {i} has degree {}, expected {degree}",
                    f.degree()
                ));
            }
            if f.is_zero() {
                return invalid(format!("basis form {i} is zero"));
            }
            if !ech.insert(f.coeffs().to_vec()) {
                return invalid(format!(
                    "basis form {i} is a combination of the previous ones"
                ));
            }
        }
        Ok(FormSpace { degree, ech })
    }

    /// The span of arbitrary forms; fails only if they span zero.
    pub fn span(field: &Field, degree: usize, forms: &[BinaryForm]) -> Result<Self> {
        let mut ech = Echelon::new(field, degree + 1);
        for f in forms {
            if f.degree() != degree {
                return invalid("degree mismatch in spanning set");
            }
            ech.insert(f.coeffs().to_vec());
        }
        if ech.rank() == 0 {
            return invalid("forms span the zero space");
        }
        Ok(FormSpace { degree, ech })
    }

    pub(crate) fn from_echelon(degree: usize, ech: Echelon) -> Result<Self> {
        if ech.rank() == 0 {
            return invalid("forms span the zero space");
        }
        Ok(FormSpace { degree, ech })
    }

    /// All of `K[x,y]_d`.
    pub fn full(field: &Field, degree: usize) -> Self {
        let forms: Vec<BinaryForm> = (0..=degree)
            .map(|j| BinaryForm::monomial(FieldElement::one(field), degree, j))
            .collect();
        Self::from_basis(field, degree, &forms).expect("monomials are independent")
    }

    pub fn field(&self) -> &Field {
        self.ech.field()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    /// Canonical basis rows.
    pub fn rows(&self) -> &[Vec<FieldElement>] {
        self.ech.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    pub fn basis(&self) -> Vec<BinaryForm> {
        self.ech
            .rows()
            .iter()
            .map(|r| BinaryForm::new(self.field(), r.clone()).expect("nonempty row"))
            .collect()
    }

    pub fn contains(&self, f: &BinaryForm) -> Result<bool> {
        if f.degree() != self.degree {
            return invalid(format!(
                "form of degree {} tested against a space of degree {}",
                f.degree(),
                self.degree
            ));
        }
        Ok(self.ech.contains(f.coeffs()))
    }

    /// The span of all pairwise products of basis forms.
    pub fn product(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut ech = Echelon::new(self.field(), degree + 1);
        'outer: for a in self.basis() {
            for b in other.basis() {
                ech.insert(a.mul(&b).into_coeffs());
                if ech.rank() == degree + 1 {
                    break 'outer;
                }
            }
        }
        FormSpace { degree, ech }
    }

    /// `L^k` for `k ≥ 1`.
    pub fn power(&self, k: usize) -> Result<Self> {
        PowerCache::new(self.clone()).get(k)
    }

    /// The set of vanishing orders at `q` of nonzero elements, ascending.
    pub fn orders_at(&self, q: &ProjPoint) -> Vec<usize> {
        let d = self.degree;
        let mut orders: Vec<usize> = if q.is_infinity() {
            self.pivots().to_vec()
        } else {
            // in the shifted coordinates the order is d minus the largest y-exponent
            let shifted = self.basis().into_iter().map(|f| {
                let mut c = f.shift(q.alpha()).into_coeffs();
                c.reverse();
                c
            });
            let ech = Echelon::from_rows(self.field(), d + 1, shifted);
            ech.pivots().to_vec()
        };
        orders.sort_unstable();
        orders
    }

    /// Affine gcd `g(s)` of the `f(s,1)` and the largest `e` with `y^e`
    /// dividing every form; the forms share the factor `y^e g(x/y) y^deg g`.
    pub fn common_factor(&self) -> (UniPoly, usize) {
        let polys: Vec<UniPoly> = self.basis().iter().map(BinaryForm::dehomogenize).collect();
        let g = poly_gcd_all(self.field(), polys.iter());
        let e = *self.pivots().first().expect("nonzero space");
        (g, e)
    }

    /// True iff no point of the projective line is a zero of every form.
    pub fn basepoint_free(&self) -> bool {
        let (g, e) = self.common_factor();
        e == 0 && g.degree() == Some(0)
    }

    /// Arithmetic genus `d k + 1 − dim L^k` read off in the regular range.
    pub fn genus(&self) -> Result<i64> {
        if !self.basepoint_free() {
            return precondition("genus requires a basepoint-free linear series");
        }
        let d = self.degree as i64;
        let n = self.dim() as i64 - 1;
        let k0 = std::cmp::max(2, d - n + 1) as usize;
        let mut cache = PowerCache::new(self.clone());
        let g0 = d * k0 as i64 + 1 - cache.get(k0)?.dim() as i64;
        let g1 = d * (k0 as i64 + 1) + 1 - cache.get(k0 + 1)?.dim() as i64;
        if g0 != g1 {
            return Err(Error::Inconsistent(format!(
                "Hilbert function not yet polynomial: genus {g0} at k = {k0} but {g1} at k = {}",
                k0 + 1
            )));
        }
        Ok(g0)
    }
}

/// Memoized powers `L, L², …` with `L^{k+1} = L · L^k`.
///
/// Clones share the same store, so concurrent readers see every power any
/// of them has built.
#[derive(Clone, Debug)]
pub struct PowerCache {
    base: FormSpace,
    powers: Arc<RwLock<Vec<FormSpace>>>,
}

impl PowerCache {
    pub fn new(base: FormSpace) -> Self {
        let powers = Arc::new(RwLock::new(vec![base.clone()]));
        PowerCache { base, powers }
    }

    pub fn base(&self) -> &FormSpace {
        &self.base
    }

    pub fn get(&mut self, k: usize) -> Result<FormSpace> {
        if k == 0 {
            return invalid("powers start at k = 1");
        }
        if let Some(p) = self.powers.read().expect("power cache poisoned").get(k - 1) {
            return Ok(p.clone());
        }
        let mut w = self.powers.write().expect("power cache poisoned");
        while w.len() < k {
            let next = self.base.product(w.last().expect("base present"));
            w.push(next);
        }
        Ok(w[k - 1].clone())
    }
}

/// `L^k`, for callers without a cache.
pub fn space_power(l: &FormSpace, k: usize) -> Result<FormSpace> {
    l.power(k)
}

pub fn space_product(a: &FormSpace, b: &FormSpace) -> FormSpace {
    a.product(b)
}

pub fn space_contains(s: &FormSpace, f: &BinaryForm) -> Result<bool> {
    s.contains(f)
}

pub fn orders_at(s: &FormSpace, q: &ProjPoint) -> Vec<usize> {
    s.orders_at(q)
}

pub fn genus_of(l: &FormSpace) -> Result<i64> {
    l.genus()
}

pub fn basepoint_free(l: &FormSpace) -> bool {
    l.basepoint_free()
}

pub fn linear_power(q: &ProjPoint, m: usize) -> BinaryForm {
    BinaryForm::linear_power(q, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;

    fn quintic(f: &Field) -> FormSpace {
        let rows: Vec<BinaryForm> = [
            [1, -5, 0, 0, 0, -1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ]
        .iter()
        .map(|r| BinaryForm::from_ints(f, r).unwrap())
        .collect();
        FormSpace::from_basis(f, 5, &rows).unwrap()
    }

    #[test]
    fn quintic_powers() {
        let f = FieldDescriptor::rationals();
        let l = quintic(&f);
        let l2 = l.power(2).unwrap();
        assert_eq!(l2.dim(), 9);
        let mut first = vec![0i64; 11];
        first[0] = 1;
        first[1] = -10;
        first[10] = 1;
        assert_eq!(
            l2.rows()[0],
            BinaryForm::from_ints(&f, &first).unwrap().into_coeffs()
        );
        assert_eq!(l.power(3).unwrap().dim(), 14);
        assert!(l.power(0).is_err());
    }

    #[test]
    fn quintic_membership_and_orders() {
        let f = FieldDescriptor::rationals();
        let l = quintic(&f);
        let q11 = ProjPoint::from_ints(&f, 1, 1).unwrap();
        let q01 = ProjPoint::from_ints(&f, 0, 1).unwrap();
        assert!(l.contains(&linear_power(&q11, 5)).unwrap());
        assert!(!l.contains(&linear_power(&q01, 5)).unwrap());
        assert!(l.contains(&BinaryForm::zero(&f, 5)).unwrap());
        assert!(l.contains(&BinaryForm::zero(&f, 4)).is_err());
        assert_eq!(l.orders_at(&q01), vec![0, 1, 2, 3]);
        assert_eq!(l.orders_at(&q11), vec![0, 1, 2, 5]);
        assert_eq!(FormSpace::full(&f, 4).orders_at(&q11), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn genus_values() {
        let f = FieldDescriptor::rationals();
        assert_eq!(quintic(&f).genus().unwrap(), 2);
        assert_eq!(FormSpace::full(&f, 5).genus().unwrap(), 0);
        let g4: Vec<BinaryForm> = [
            [1, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
        ]
        .iter()
        .map(|r| BinaryForm::from_ints(&f, r).unwrap())
        .collect();
        // (1:0) and (0:1) share an image point, so the Hilbert function gives 6
        assert_eq!(
            FormSpace::from_basis(&f, 7, &g4).unwrap().genus().unwrap(),
            6
        );
    }

    #[test]
    fn basepoints() {
        let f = FieldDescriptor::rationals();
        assert!(quintic(&f).basepoint_free());
        let bad = [
            BinaryForm::from_ints(&f, &[1, 0, 0, 0, 0, 0]).unwrap(),
            BinaryForm::from_ints(&f, &[0, 1, 0, 0, 0, 0]).unwrap(),
        ];
        let s = FormSpace::from_basis(&f, 5, &bad).unwrap();
        assert!(!s.basepoint_free());
        assert_eq!(s.common_factor().0.degree(), Some(4));
        assert!(s.genus().is_err());
    }

    #[test]
    fn rejects_degenerate_bases() {
        let f = FieldDescriptor::rationals();
        let a = BinaryForm::from_ints(&f, &[1, 2, 3]).unwrap();
        let z = BinaryForm::zero(&f, 2);
        assert!(FormSpace::from_basis(&f, 2, &[a.clone(), z]).is_err());
        assert!(FormSpace::from_basis(
            &f,
            2,
            &[a.clone(), a.scale(&FieldElement::from_int(&f, 3))]
        )
        .is_err());
        assert!(FormSpace::from_basis(&f, 2, &[]).is_err());
    }
}
