//! Binary forms, their linear spaces and graded powers.

mod form;
mod space;

pub use form::{BinaryForm, ProjPoint};
pub use space::{
    basepoint_free, genus_of, linear_power, orders_at, space_contains, space_power, space_product,
    FormSpace, PowerCache,
};
