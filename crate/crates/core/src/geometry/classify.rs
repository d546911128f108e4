use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::forms::ProjPoint;

use super::center::{lambda_prime, CenterLine};

/// The singularity types a degree `n + 2` rational curve in `P^n` can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    Cusp,
    Node,
    Cusp345,
    Cusp25,
    Tacnode,
    CuspWithSmoothBranch,
    OrdinaryTriplePoint,
}

impl SingularityType {
    pub fn delta(self) -> u32 {
        match self {
            SingularityType::Cusp | SingularityType::Node => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SingularityType::Cusp => "Cusp",
            SingularityType::Node => "Node",
            SingularityType::Cusp345 => "Cusp345",
            SingularityType::Cusp25 => "Cusp25",
            SingularityType::Tacnode => "Tacnode",
            SingularityType::CuspWithSmoothBranch => "CuspWithSmoothBranch",
            SingularityType::OrdinaryTriplePoint => "OrdinaryTriplePoint",
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Values of `λ′` queried at a fixed tuple of preimage points.
#[derive(Clone, Debug)]
pub struct LambdaProfile {
    pub points: Vec<ProjPoint>,
    pub values: BTreeMap<Vec<usize>, usize>,
}

impl LambdaProfile {
    fn new(points: &[ProjPoint]) -> Self {
        LambdaProfile {
            points: points.to_vec(),
            values: BTreeMap::new(),
        }
    }

    fn query(&mut self, u: &CenterLine, alpha: &[usize]) -> Result<usize> {
        if let Some(&v) = self.values.get(alpha) {
            return Ok(v);
        }
        let v = lambda_prime(u, &self.points, alpha)?;
        self.values.insert(alpha.to_vec(), v);
        Ok(v)
    }

    fn all(&mut self, u: &CenterLine, conds: &[(&[usize], usize)]) -> Result<bool> {
        for (alpha, want) in conds {
            if self.query(u, alpha)? != *want {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Matches the `λ′` values at the given preimages against the table of
/// singularity types and returns the matching row with the values queried.
pub fn classify_with_profile(
    u: &CenterLine,
    points: &[ProjPoint],
) -> Result<(SingularityType, LambdaProfile)> {
    use SingularityType::*;
    if points.is_empty() || points.len() > 3 {
        return invalid(format!(
            "a singular point has 1 to 3 preimages, got {}",
            points.len()
        ));
    }
    let d = u.degree();
    let need = match points.len() {
        1 => 5,
        2 => 4,
        _ => 2,
    };
    if d < need {
        return invalid(format!(
            "degree {d} is too small to evaluate the classification conditions"
        ));
    }
    let mut prof = LambdaProfile::new(points);
    let found = match points.len() {
        1 => {
            if prof.all(u, &[(&[2], 1), (&[4], 1)])? {
                Some(Cusp)
            } else if prof.all(u, &[(&[3], 2), (&[5], 2)])? {
                Some(Cusp345)
            } else if prof.all(u, &[(&[2], 1), (&[3], 1), (&[4], 2)])? {
                Some(Cusp25)
            } else {
                None
            }
        }
        2 => {
            if prof.all(u, &[(&[1, 1], 1), (&[2, 2], 1)])? {
                Some(Node)
            } else if prof.all(u, &[(&[1, 1], 1), (&[1, 2], 1), (&[2, 1], 1), (&[2, 2], 2)])? {
                Some(Tacnode)
            } else if prof.all(u, &[(&[2, 1], 2), (&[4, 2], 2)])?
                || prof.all(u, &[(&[1, 2], 2), (&[2, 4], 2)])?
            {
                Some(CuspWithSmoothBranch)
            } else {
                None
            }
        }
        _ => {
            if prof.all(u, &[(&[1, 1, 1], 2), (&[2, 2, 2], 2)])? {
                Some(OrdinaryTriplePoint)
            } else {
                None
            }
        }
    };
    match found {
        Some(t) => Ok((t, prof)),
        None => {
            let vals: Vec<String> = prof
                .values
                .iter()
                .map(|(a, v)| format!("λ'{a:?} = {v}"))
                .collect();
            Err(Error::Unclassified(format!(
                "no singularity type matches {} preimage(s) with {}",
                points.len(),
                vals.join(", ")
            )))
        }
    }
}

pub fn classify_profile(u: &CenterLine, points: &[ProjPoint]) -> Result<SingularityType> {
    classify_with_profile(u, points).map(|(t, _)| t)
}
