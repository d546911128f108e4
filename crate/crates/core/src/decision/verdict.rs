use num_bigint::BigUint;

use crate::arith::UniPoly;
use crate::forms::ProjPoint;

/// Default iteration cap for the naive search.
pub const DEFAULT_CAP: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Khovanskii-finite; `k` is the least level at which a witness was found.
    Kf { k: u64 },
    /// Not Khovanskii-finite: the whole bound was exhausted.
    NotKf,
    /// The cap stopped the search before the bound was reached.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A point of `P^1` over the field of definition.
    Point { point: ProjPoint, k: u64 },
    /// The points `(t:1)` with `t` a root of `poly`, none of them in the field.
    Algebraic { poly: UniPoly, k: u64 },
}

impl Witness {
    pub fn k(&self) -> u64 {
        match self {
            Witness::Point { k, .. } | Witness::Algebraic { k, .. } => *k,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Witness::Point { point, .. } => point.to_string(),
            Witness::Algebraic { poly, .. } => format!("(t:1) with t a root of {}", poly),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
    /// The iteration bound that makes a negative answer conclusive, if any.
    pub bound: Option<BigUint>,
    pub cap: u64,
    /// The last level the search was allowed to reach: `min(bound, cap)`.
    pub bound_used: u64,
    /// Levels tested, with the answer at each.
    pub trace: Vec<(u64, bool)>,
}

impl Verdict {
    pub(crate) fn limits(bound: &Option<BigUint>, cap: u64) -> (u64, bool) {
        match bound {
            Some(b) if *b <= BigUint::from(cap) => {
                (u64::try_from(b).expect("fits below cap"), true)
            }
            _ => (cap, false),
        }
    }

    pub(crate) fn finish(
        witnesses: Vec<Witness>,
        bound: Option<BigUint>,
        cap: u64,
        trace: Vec<(u64, bool)>,
    ) -> Verdict {
        let (bound_used, conclusive) = Self::limits(&bound, cap);
        let outcome = match witnesses.iter().map(Witness::k).min() {
            Some(k) => Outcome::Kf { k },
            None if conclusive => Outcome::NotKf,
            None => Outcome::Undecided,
        };
        Verdict {
            outcome,
            witnesses,
            bound,
            cap,
            bound_used,
            trace,
        }
    }

    pub fn is_kf(&self) -> bool {
        matches!(self.outcome, Outcome::Kf { .. })
    }

    pub fn witness_k(&self) -> Option<u64> {
        match self.outcome {
            Outcome::Kf { k } => Some(k),
            _ => None,
        }
    }

    /// The first explicit witness point at the least level.
    pub fn point(&self) -> Option<&ProjPoint> {
        let k = self.witness_k()?;
        self.witnesses.iter().find_map(|w| match w {
            Witness::Point { point, k: wk } if *wk == k => Some(point),
            _ => None,
        })
    }

    pub fn outcome_name(&self) -> &'static str {
        match self.outcome {
            Outcome::Kf { .. } => "KF",
            Outcome::NotKf => "NotKF",
            Outcome::Undecided => "Undecided",
        }
    }
}
