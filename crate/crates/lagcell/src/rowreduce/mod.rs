//! Exact row-echelon parameterizations of Schubert cells and the Jacobian
//! oracle.
//!
//! Everything in this module runs over exact arithmetic: rationals, Gaussian
//! rationals, and first-order jets of Gaussian rationals. The payoff is that
//! validating a sign or an exponent is an equality test, never a tolerance.
//!
//! The oracle path is: parameterize a cell by its echelon pattern
//! ([`RrefPattern`]), push the parameters through the explicit transition map
//! of a cover ([`transition_apply`]) with jets carrying one partial per active
//! real coordinate, and take the exact determinant of the resulting real
//! Jacobian ([`jacobian_oracle`]). An independent cross-check rebuilds the
//! transition by actual row reduction of matrices ([`transition_via_rref`]).

mod jet;
mod matrix;
mod oracle;
mod pattern;
mod sampling;
mod scalar;
mod transition;

pub use jet::Jet;
pub use matrix::{det_rational, identify, is_lagrangian, rref_trailing, GMatrix};
pub use oracle::jacobian_oracle;
pub use pattern::{materialize, pattern, RrefPattern, Slot};
pub use sampling::{random_membership_values, random_nonzero_rational, random_rational};
pub use scalar::{gaussian, rat, rational_pow, GaussianRational, Rational, Scalar};
pub use transition::{transition_apply, transition_via_rref};
