use std::collections::BTreeSet;

use crate::error::{precondition, Error, Result};
use crate::forms::{BinaryForm, FormSpace, PowerCache, ProjPoint};

/// Value semigroup of `R(L)` at `Q` up to a degree cap.
///
/// Elements are pairs `(dk, m)`: `m` is an order of vanishing at `Q` of some
/// form in `L^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupReport {
    pub degree: usize,
    pub k_max: usize,
    /// `orders[k-1]` lists the orders attained by `L^k`.
    pub orders: Vec<Vec<usize>>,
    pub generators: Vec<(usize, usize)>,
    /// Least `k` with `(dk, dk)` in the semigroup, if seen.
    pub kf_witness: Option<usize>,
    /// False once a witness `(dk₀, dk₀)` is present and the last `k₀`
    /// levels contributed no new generators.
    pub truncated: bool,
}

pub fn value_semigroup(l: &FormSpace, q: &ProjPoint, k_max: usize) -> Result<SemigroupReport> {
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be at least 1".into()));
    }
    let d = l.degree();
    let mut cache = PowerCache::new(l.clone());
    let mut orders: Vec<Vec<usize>> = Vec::with_capacity(k_max);
    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(k_max);
    let mut generators = Vec::new();
    let mut gen_levels = Vec::new();
    for k in 1..=k_max {
        let ord = cache.get(k)?.orders_at(q);
        let set: BTreeSet<usize> = ord.iter().copied().collect();
        for &m in &ord {
            let decomposable = (1..k).any(|k1| {
                sets[k1 - 1]
                    .iter()
                    .any(|&m1| m1 <= m && sets[k - k1 - 1].contains(&(m - m1)))
            });
            if !decomposable {
                generators.push((d * k, m));
                gen_levels.push(k);
            }
        }
        orders.push(ord);
        sets.push(set);
    }
    let kf_witness = (1..=k_max).find(|&k| sets[k - 1].contains(&(d * k)));
    let complete = match kf_witness {
        Some(k0) if k0 < k_max => gen_levels.iter().all(|&k| k + k0 <= k_max),
        _ => false,
    };
    Ok(SemigroupReport {
        degree: d,
        k_max,
        orders,
        generators,
        kf_witness,
        truncated: !complete,
    })
}

/// Criterion for unibranch points when `2g ≤ d`: KF iff `d ∈ Λ_1(Q)`.
pub fn unibranch_kf(l: &FormSpace, q: &ProjPoint) -> Result<bool> {
    let g = l.genus()?;
    let d = l.degree();
    if 2 * g > d as i64 {
        return precondition(format!(
            "the unibranch criterion needs 2g <= d, got g = {g}, d = {d}"
        ));
    }
    let n = l.dim() - 1;
    let ord = l.orders_at(q);
    let gaps = (d + 1) - ord.len();
    if gaps != d - n {
        return Err(Error::Inconsistent(format!(
            "L has {gaps} gaps at {q}, expected d - n = {}",
            d - n
        )));
    }
    l.contains(&BinaryForm::linear_power(q, d))
}
