//! Independent numerical oracles: adaptive quadrature, finite and
//! complex-step differentiation, Numerov integration and shooting.
//!
//! Every routine takes plain closures so any potential or profile in the
//! crate can be checked without adapters.

mod diff;
mod numerov;
mod quadrature;
mod shooting;

pub use diff::{complex_step_derivative, derivative, Order};
pub use numerov::{numerov_zero_energy, scale_and_relative_error, OVERFLOW_LIMIT};
pub use quadrature::{integrate_adaptive, QuadratureResult, SUBDIVISION_BUDGET};
pub use shooting::{bound_state_count, shooting_bound_states, ShootingConfig};
