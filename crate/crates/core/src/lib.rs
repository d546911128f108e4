//! Deciding Khovanskii-finiteness of valuations on linear series of
//! rational curves.

pub mod arith;
pub mod decision;
pub mod error;
pub mod forms;
pub mod geometry;
pub mod strata;

pub use error::{Error, Result};
