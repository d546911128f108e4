//! Membership tests and the bounded searches built on them.

mod search;
mod semigroup;
mod verdict;

pub use search::{
    any_valuation, any_valuation_within, decide_point, decide_point_within, general_bound,
    membership, membership_cached,
};
pub use semigroup::{unibranch_kf, value_semigroup, SemigroupReport};
pub use verdict::{Outcome, Verdict, Witness, DEFAULT_CAP};
