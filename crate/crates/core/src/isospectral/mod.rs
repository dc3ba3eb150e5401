//! The one-parameter strictly isospectral family of bosonic potentials.
//!
//! The general solution of the Riccati pair is
//!
//! ```text
//! V(rho) = (lambda + I0(rho)) / f^2(rho),    I0(rho) = int_0^rho f^2
//! ```
//!
//! giving the general superpotential `W + f^2 / (I0 + lambda)`, the family
//!
//! ```text
//! U_bos = U- - 4 f f' / (I0 + lambda) + 2 f^4 / (I0 + lambda)^2
//! ```
//!
//! and its damped zero mode `f / (I0 + lambda)`. Every member shares the
//! fermionic partner `W' + W^2`.
//!
//! `I0` has closed forms for `kappa = 1` and `kappa = 1/2` after the
//! substitution `rho^kappa = tan(beta)`: the integrand becomes
//! `(1/kappa) sin^((2l+3-kappa)/kappa) cos^((2l-1-kappa)/kappa)`, so
//!
//! * `kappa = 1`: `int_0^beta sin^(2l+2) cos^(2l-2)` (`tan(beta) - beta` at `l = 0`),
//! * `kappa = 1/2`: `2 int_0^beta sin^(4l+5) cos^(4l-3)`.

pub mod trig;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Result};
use crate::model::{
    check_rho, radial_factor_sq_generic, superpotential_generic, superpotential_w, superpotential_w_derivative, u_minus, DoParams,
    KappaClass, Scalar,
};
use crate::numerics::{complex_step_derivative, integrate_adaptive};

pub use trig::{integral_sin_pow_over_cos4, integral_sin_pow_over_cos_sq};

/// Absolute tolerance of the quadrature fallback used for general `kappa`.
pub const FALLBACK_TOL: f64 = 1e-12;

// The power series in rho^(2 kappa) is used below this value of rho^(2 kappa),
// where the closed forms lose relative accuracy to cancellation.
const SERIES_LIMIT: f64 = 0.05;
const SERIES_BUDGET: f64 = 7.0;

/// `beta = atan(rho^kappa)`.
pub fn beta_of_rho(rho: f64, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    if !(kappa > 0.0 && kappa.is_finite()) {
        return domain(format!("kappa must be positive and finite, got {kappa}"));
    }
    Ok(rho.powf(kappa).atan())
}

/// `I0(rho) = int_0^rho f^2` by adaptive quadrature to absolute `tol`.
pub fn i0_quadrature(rho: f64, l: u32, kappa: f64, tol: f64) -> Result<f64> {
    check_rho(rho)?;
    if !(kappa > 0.0 && kappa.is_finite()) {
        return domain(format!("kappa must be positive and finite, got {kappa}"));
    }
    // rho = u^3 lifts the fractional powers of rho^(2 kappa) at the origin
    let r = integrate_adaptive(
        |u| 3.0 * u * u * radial_factor_sq_generic(u * u * u, l, kappa),
        0.0,
        rho.cbrt(),
        tol,
    )?;
    Ok(r.value)
}

fn check_beta(beta: f64) -> Result<()> {
    if (0.0..FRAC_PI_2).contains(&beta) {
        Ok(())
    } else {
        domain(format!("beta must lie in [0, pi/2), got {beta}"))
    }
}

/// Closed-form `I0` for `kappa = 1` as a function of `beta = atan(rho)`.
pub fn i0_closed_one(beta: f64, l: u32) -> Result<f64> {
    check_beta(beta)?;
    Ok(closed_one(beta, l))
}

/// Closed-form `I0` for `kappa = 1/2` as a function of `beta = atan(sqrt(rho))`.
pub fn i0_closed_half(beta: f64, l: u32) -> Result<f64> {
    check_beta(beta)?;
    let (s, c) = beta.sin_cos();
    Ok(closed_half(s * s, c * c, l))
}

fn closed_one<T: Scalar>(beta: T, l: u32) -> T {
    if l == 0 {
        beta.tan() - beta
    } else {
        trig::sin_cos_even_integral(l + 1, l - 1, beta)
    }
}

// With t = rho / (1 + rho) = sin^2(beta), f^2 drho = t^(2l+2) (1-t)^(2l-2) dt.
fn closed_half<T: Scalar>(t: T, one_minus_t: T, l: u32) -> T {
    if l == 0 {
        t / one_minus_t + T::lift(2.0) * one_minus_t.ln() + t
    } else {
        trig::integer_incomplete_beta(2 * l + 3, 2 * l - 1, t, one_minus_t)
    }
}

// The alternating series loses about `s ln((1+x)/(1-x))` nats to cancellation.
fn use_series(rho: f64, l: u32, kappa: f64) -> bool {
    let x = rho.powf(2.0 * kappa);
    if x <= SERIES_LIMIT {
        return true;
    }
    let s = (2.0 * f64::from(l) + 1.0) / kappa;
    x <= 0.5 && s * ((1.0 + x) / (1.0 - x)).ln() <= SERIES_BUDGET
}

/// Power series of `I0` in `x = rho^(2 kappa)`:
/// `rho^(2l+3) sum_j C(-s, j) x^j / (2l + 3 + 2 kappa j)` with `s = (2l+1)/kappa`.
/// Converges for `rho < 1`; accurate to round-off when `x` is small.
pub fn i0_series(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    if !(kappa > 0.0 && rho.powf(2.0 * kappa) < 1.0) {
        return domain(format!("series for I0 needs kappa > 0 and rho < 1, got rho = {rho}"));
    }
    Ok(series(rho, l, kappa))
}

fn series<T: Scalar>(rho: T, l: u32, kappa: f64) -> T {
    let s = (2.0 * f64::from(l) + 1.0) / kappa;
    let lead = f64::from(2 * l + 3);
    let x = match KappaClass::of(kappa) {
        Some(KappaClass::One) => rho * rho,
        Some(KappaClass::Half) => rho,
        None => rho.powf(2.0 * kappa),
    };
    let mut coefficient = 1.0;
    let mut power = T::lift(1.0);
    let mut total = T::lift(1.0 / lead);
    for j in 1..400 {
        let jf = f64::from(j);
        coefficient *= -(s + jf - 1.0) / jf;
        power = power * x;
        let term = power * T::lift(coefficient / (lead + 2.0 * kappa * jf));
        total = total + term;
        if term.abs() <= 1e-18 * total.abs() {
            break;
        }
    }
    rho.powi(2 * l as i32 + 3) * total
}

/// How `I0` is evaluated for a family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum I0Method {
    ClosedForm(KappaClass),
    Quadrature { tol: f64 },
}

/// One member of the isospectral family, fixed by its [`DoParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsoFamily {
    params: DoParams,
    method: I0Method,
}

impl IsoFamily {
    /// Requires the radially nodeless sector. Picks the closed form for
    /// `kappa` in `{1/2, 1}` and adaptive quadrature otherwise.
    pub fn new(params: DoParams) -> Result<Self> {
        if !params.is_nodeless() {
            return domain(format!(
                "the isospectral family needs the nodeless sector N = 1 + l/kappa, got N = {}",
                params.total_n()
            ));
        }
        let method = match params.kappa_class() {
            Some(class) => I0Method::ClosedForm(class),
            None => I0Method::Quadrature { tol: FALLBACK_TOL },
        };
        Ok(Self { params, method })
    }

    /// Shorthand for the nodeless family with the given `kappa`, `l`, `lambda`.
    pub fn nodeless(kappa: f64, l: u32, lambda: f64) -> Result<Self> {
        Self::new(DoParams::nodeless(kappa, l, lambda)?)
    }

    pub fn params(&self) -> &DoParams {
        &self.params
    }

    pub fn method(&self) -> I0Method {
        self.method
    }

    fn l(&self) -> u32 {
        self.params.l()
    }

    fn kappa(&self) -> f64 {
        self.params.kappa()
    }

    fn lambda(&self) -> f64 {
        self.params.lambda()
    }

    /// `I0(rho)`; zero at the origin and non-decreasing.
    pub fn i0(&self, rho: f64) -> Result<f64> {
        check_rho(rho)?;
        let (l, kappa) = (self.l(), self.kappa());
        if use_series(rho, l, kappa) {
            return Ok(series(rho, l, kappa));
        }
        match self.method {
            I0Method::ClosedForm(KappaClass::One) => Ok(closed_one(rho.atan(), l)),
            I0Method::ClosedForm(KappaClass::Half) => Ok(closed_half(rho / (1.0 + rho), (1.0 + rho).recip(), l)),
            I0Method::Quadrature { tol } => i0_quadrature(rho, l, kappa, tol),
        }
    }

    // Analytic continuation of I0 to complex rho near the real axis.
    fn i0_complex(&self, rho: Complex64) -> Option<Complex64> {
        let (l, kappa) = (self.l(), self.kappa());
        if use_series(rho.re, l, kappa) {
            return Some(series(rho, l, kappa));
        }
        match self.method {
            I0Method::ClosedForm(KappaClass::One) => Some(closed_one(rho.arctan(), l)),
            I0Method::ClosedForm(KappaClass::Half) => {
                let inv = (Complex64::from(1.0) + rho).inv();
                Some(closed_half(rho * inv, inv, l))
            }
            I0Method::Quadrature { .. } => None,
        }
    }

    /// Damping denominator `I0 + lambda`.
    pub fn denominator(&self, rho: f64) -> Result<f64> {
        Ok(self.i0(rho)? + self.lambda())
    }

    /// General Riccati solution `(lambda + I0) / f^2`.
    pub fn v_general(&self, rho: f64) -> Result<f64> {
        let d = self.denominator(rho)?;
        Ok(d / radial_factor_sq_generic(rho, self.l(), self.kappa()))
    }

    /// `dV/drho`. Complex-step differentiation when `I0` has a closed form,
    /// Richardson central differences otherwise.
    pub fn v_general_slope(&self, rho: f64) -> Result<f64> {
        check_rho(rho)?;
        let (l, kappa) = (self.l(), self.kappa());
        let lambda = Complex64::from(self.lambda());
        if self.i0_complex(Complex64::from(rho)).is_some() {
            return Ok(complex_step_derivative(
                |z| (lambda + self.i0_complex(z).unwrap_or(Complex64::from(f64::NAN))) / radial_factor_sq_generic(z, l, kappa),
                rho,
            ));
        }
        crate::numerics::derivative(
            |r| self.v_general(r).unwrap_or(f64::NAN),
            rho,
            crate::numerics::Order::First,
            0.05 * rho,
        )
    }

    /// General superpotential `W + f^2 / (I0 + lambda)`.
    pub fn superpotential_general(&self, rho: f64) -> Result<f64> {
        let f2 = radial_factor_sq_generic(rho, self.l(), self.kappa());
        let d = self.denominator(rho)?;
        Ok(superpotential_w(rho, self.l(), self.kappa())? + f2 / d)
    }

    /// The `lambda`-dependent part of the family potential,
    /// `-4 f f' / D + 2 f^4 / D^2` with `D = I0 + lambda`.
    pub fn family_correction(&self, rho: f64) -> Result<f64> {
        let (l, kappa) = (self.l(), self.kappa());
        let w = superpotential_generic(rho, l, kappa);
        let f2 = radial_factor_sq_generic(rho, l, kappa);
        let d = self.denominator(rho)?;
        let ratio = f2 / d;
        // f f' = -W f^2
        Ok(4.0 * w * ratio + 2.0 * ratio * ratio)
    }

    /// Bosonic family member `U- + family_correction`.
    pub fn u_bosonic(&self, rho: f64) -> Result<f64> {
        Ok(u_minus(rho, self.l(), self.kappa())? + self.family_correction(rho)?)
    }

    /// Damped nodeless zero mode `f / (I0 + lambda)`.
    pub fn radial_factor_bosonic(&self, rho: f64) -> Result<f64> {
        let f = radial_factor_sq_generic(rho, self.l(), self.kappa()).sqrt();
        Ok(f / self.denominator(rho)?)
    }
}

/// `(lambda + I0) / f^2` for the family.
pub fn v_general(rho: f64, family: &IsoFamily) -> Result<f64> {
    family.v_general(rho)
}

/// `W + f^2 / (I0 + lambda)` for the family.
pub fn superpotential_general(rho: f64, family: &IsoFamily) -> Result<f64> {
    family.superpotential_general(rho)
}

/// The bosonic family potential.
pub fn u_bosonic_family(rho: f64, family: &IsoFamily) -> Result<f64> {
    family.u_bosonic(rho)
}

/// The damped radial factor `f / (I0 + lambda)`.
pub fn radial_factor_bosonic(rho: f64, family: &IsoFamily) -> Result<f64> {
    family.radial_factor_bosonic(rho)
}

/// The particular and general superpotentials of one family side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpotentialPair {
    family: IsoFamily,
}

impl SuperpotentialPair {
    pub fn new(family: IsoFamily) -> Self {
        Self { family }
    }

    pub fn family(&self) -> &IsoFamily {
        &self.family
    }

    pub fn particular(&self, rho: f64) -> Result<f64> {
        let p = self.family.params();
        superpotential_w(rho, p.l(), p.kappa())
    }

    pub fn general(&self, rho: f64) -> Result<f64> {
        self.family.superpotential_general(rho)
    }

    /// `W' + W^2` from the particular superpotential, with analytic `W'`.
    pub fn fermionic_partner(&self, rho: f64) -> Result<f64> {
        let p = self.family.params();
        let w = self.particular(rho)?;
        Ok(superpotential_w_derivative(rho, p.l(), p.kappa())? + w * w)
    }

    /// `1/V + W`, which must coincide with the general superpotential.
    pub fn general_from_v(&self, rho: f64) -> Result<f64> {
        Ok(1.0 / self.family.v_general(rho)? + self.particular(rho)?)
    }

    /// `-V' + 2 W V + 1`, zero for an exact general solution.
    pub fn riccati_residual(&self, rho: f64) -> Result<f64> {
        let v = self.family.v_general(rho)?;
        let slope = self.family.v_general_slope(rho)?;
        Ok(-slope + 2.0 * self.particular(rho)? * v + 1.0)
    }
}
