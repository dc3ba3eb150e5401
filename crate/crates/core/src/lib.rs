//! Supersymmetric (Darboux-Witten) treatment of the Demkov-Ostrovsky
//! zero-energy problem.
//!
//! * [`model`]: the focusing potential, quantized couplings, radial states and
//!   the particular superpotential with its two partner potentials.
//! * [`isospectral`]: the general Riccati solution and the strictly
//!   isospectral bosonic family.
//! * [`fisheye`]: the `kappa = 1` refractive-index family and figure tables.
//! * [`fullline`]: the Langer map to the Rosen-Morse problem on the full line.
//! * [`numerics`]: quadrature, differentiation, Numerov and shooting oracles.
//! * [`verify`]: the invariant suites behind `susy-fisheye verify`.

// NaN-rejecting guards are written as negated comparisons on purpose, and the
// Gauss-Kronrod nodes keep their published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod fisheye;
pub mod fullline;
pub mod isospectral;
pub mod model;
pub mod numerics;
pub mod profile;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use isospectral::{IsoFamily, SuperpotentialPair};
pub use model::{DoParams, KappaClass};
pub use profile::Profile;
