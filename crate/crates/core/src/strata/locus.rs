use std::sync::Arc;

use crate::arith::{rat, resultant, MultiPoly, Rational};
use crate::error::{invalid, Result};

use super::StratumId;

/// Drops the last variable, which must not occur.
fn forget_last(p: &MultiPoly, names: &[&str]) -> MultiPoly {
    let vars: Arc<[String]> = MultiPoly::ring(names);
    let terms: Vec<(Vec<u32>, Rational)> = p
        .terms()
        .map(|(m, c)| {
            debug_assert_eq!(m.0.last(), Some(&0));
            (m.0[..names.len()].to_vec(), c.clone())
        })
        .collect();
    MultiPoly::from_terms(&vars, terms)
}

/// The polynomial in the parameters and in two roots of unity `u, v`
/// whose vanishing is necessary for a Khovanskii-finite point on the
/// triple-point or two-node family of degree `n + 2`.
pub fn locus_polynomial(id: StratumId, n: usize) -> Result<MultiPoly> {
    if n < 3 {
        return invalid(format!("n must be at least 3, got {n}"));
    }
    let d = (n + 2) as u32;
    match id {
        StratumId::OrdinaryTriplePoint => {
            let names = ["a", "b", "u", "v", "alpha"];
            let r = MultiPoly::ring(&names);
            let var = |s| MultiPoly::var(&r, s);
            let one = MultiPoly::constant(&r, rat(1));
            let (a, b, u, v, al) = (var("a"), var("b"), var("u"), var("v"), var("alpha"));
            let p = al.add(&one).pow(d).sub(&u.mul(&one.add(&b).add(&a)));
            let q = al.pow(d).sub(&v.mul(&a));
            let res = resultant(&p, &q, "alpha")?;
            Ok(forget_last(&res, &names[..4]).normalized())
        }
        StratumId::TwoNodes => {
            let names = ["a", "b", "c", "u", "v", "beta"];
            let r = MultiPoly::ring(&names);
            let var = |s| MultiPoly::var(&r, s);
            let one = MultiPoly::constant(&r, rat(1));
            let (a, b, c, u, v, be) = (
                var("a"),
                var("b"),
                var("c"),
                var("u"),
                var("v"),
                var("beta"),
            );
            let p = be.pow(d).sub(&a.mul(&u));
            let q = b.mul(&v).mul(&be.add(&one).pow(d)).sub(&be.add(&c).pow(d));
            let res = resultant(&p, &q, "beta")?;
            Ok(forget_last(&res, &names[..5]).normalized())
        }
        other => invalid(format!("no locus polynomial for {other}")),
    }
}
