//! Projection centers, osculating flags and singularities of the image curve.

mod center;
mod classify;
mod locus;

pub use center::{center_of, lambda_prime, osculating_basis, space_of, CenterLine};
pub use classify::{classify_profile, classify_with_profile, LambdaProfile, SingularityType};
pub use locus::{
    singular_parameter_locus, singular_points, SingularLocus, SingularPoint, SingularityReport,
};
