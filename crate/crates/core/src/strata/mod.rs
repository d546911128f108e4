//! The eight representative families of genus-two rational curves of
//! degree `n + 2` in `P^n`, with closed forms for their powers, their
//! Khovanskii-finite points and the iteration bounds per family.

mod decide;
mod locus;
mod tables;

use std::fmt;
use std::str::FromStr;

use crate::arith::{Field, FieldElement};
use crate::error::{invalid, Error, Result};
use crate::forms::ProjPoint;
use crate::geometry::SingularityType;

pub use decide::stratum_decide;
pub use locus::locus_polynomial;
pub use tables::{
    stratum_bound, stratum_forms, stratum_kf_condition, stratum_power_basis, stratum_space,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StratumId {
    Tacnode,
    Cusp345,
    Cusp25,
    CuspWithSmoothBranch,
    OrdinaryTriplePoint,
    TwoCusps,
    CuspAndNode,
    TwoNodes,
}

impl StratumId {
    pub const ALL: [StratumId; 8] = [
        StratumId::Tacnode,
        StratumId::Cusp345,
        StratumId::Cusp25,
        StratumId::CuspWithSmoothBranch,
        StratumId::OrdinaryTriplePoint,
        StratumId::TwoCusps,
        StratumId::CuspAndNode,
        StratumId::TwoNodes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StratumId::Tacnode => "Tacnode",
            StratumId::Cusp345 => "Cusp345",
            StratumId::Cusp25 => "Cusp25",
            StratumId::CuspWithSmoothBranch => "CuspWithSmoothBranch",
            StratumId::OrdinaryTriplePoint => "OrdinaryTriplePoint",
            StratumId::TwoCusps => "TwoCusps",
            StratumId::CuspAndNode => "CuspAndNode",
            StratumId::TwoNodes => "TwoNodes",
        }
    }

    /// The singular points of the family and, for each, its preimages in `P^1`.
    pub fn singularities(self, params: &StratumParams) -> Vec<(SingularityType, Vec<ProjPoint>)> {
        let f = params.field();
        let pt = |a: i64, b: i64| ProjPoint::from_ints(f, a, b).expect("nonzero point");
        let inf = ProjPoint::infinity(f);
        use SingularityType as S;
        match self {
            StratumId::Tacnode => vec![(S::Tacnode, vec![inf, pt(0, 1)])],
            StratumId::Cusp345 => vec![(S::Cusp345, vec![inf])],
            StratumId::Cusp25 => vec![(S::Cusp25, vec![inf])],
            StratumId::CuspWithSmoothBranch => vec![(S::CuspWithSmoothBranch, vec![inf, pt(0, 1)])],
            StratumId::OrdinaryTriplePoint => {
                vec![(S::OrdinaryTriplePoint, vec![inf, pt(0, 1), pt(1, 1)])]
            }
            StratumId::TwoCusps => vec![(S::Cusp, vec![inf]), (S::Cusp, vec![pt(0, 1)])],
            StratumId::CuspAndNode => {
                vec![(S::Cusp, vec![inf]), (S::Node, vec![pt(0, 1), pt(1, 1)])]
            }
            StratumId::TwoNodes => {
                let c =
                    ProjPoint::new(FieldElement::one(f), params.c.clone()).expect("nonzero point");
                vec![(S::Node, vec![inf, pt(0, 1)]), (S::Node, vec![pt(1, 1), c])]
            }
        }
    }

    /// Rows of the family whose Khovanskii-finiteness does not depend on `k`.
    pub fn is_k_free(self) -> bool {
        matches!(
            self,
            StratumId::Cusp345 | StratumId::Cusp25 | StratumId::TwoCusps
        )
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let id = match key.as_str() {
            "tacnode" => StratumId::Tacnode,
            "cusp345" => StratumId::Cusp345,
            "cusp25" => StratumId::Cusp25,
            "cuspwithsmoothbranch" | "cwsb" => StratumId::CuspWithSmoothBranch,
            "ordinarytriplepoint" | "otp" => StratumId::OrdinaryTriplePoint,
            "twocusps" => StratumId::TwoCusps,
            "cuspandnode" => StratumId::CuspAndNode,
            "twonodes" => StratumId::TwoNodes,
            _ => return invalid(format!("unknown stratum {s:?}")),
        };
        Ok(id)
    }
}

/// Parameters of a representative curve; `c` only matters for two nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumParams {
    pub n: usize,
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

impl StratumParams {
    /// Checks the admissibility constraints of `id`.
    pub fn new(
        id: StratumId,
        n: usize,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
    ) -> Result<Self> {
        if n < 3 {
            return invalid(format!("n must be at least 3, got {n}"));
        }
        let f = a.field().clone();
        if b.field() != &f || c.field() != &f {
            return invalid("parameters must lie in one field");
        }
        let one = FieldElement::one(&f);
        let fail = |what: &str| invalid(format!("{id} needs {what}"));
        match id {
            StratumId::Tacnode if a.is_zero() => return fail("a != 0"),
            StratumId::OrdinaryTriplePoint if a.is_zero() => return fail("a != 0"),
            StratumId::OrdinaryTriplePoint if (&(&a + &b) + &one).is_zero() => {
                return fail("a + b != -1")
            }
            StratumId::CuspAndNode if (&b + &one).is_zero() => return fail("b + 1 != 0"),
            StratumId::TwoNodes if a.is_zero() => return fail("a != 0"),
            StratumId::TwoNodes if b.is_zero() => return fail("b != 0"),
            StratumId::TwoNodes if c.is_zero() || c.is_one() => return fail("c not in {0, 1}"),
            _ => {}
        }
        Ok(StratumParams { n, a, b, c })
    }

    /// Integer parameters in `field`.
    pub fn from_ints(
        field: &Field,
        id: StratumId,
        n: usize,
        a: i64,
        b: i64,
        c: i64,
    ) -> Result<Self> {
        let e = |v| FieldElement::from_int(field, v);
        Self::new(id, n, e(a), e(b), e(c))
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn degree(&self) -> usize {
        self.n + 2
    }
}
