//! The Demkov-Ostrovsky zero-energy problem on the half line.
//!
//! With `rho = r / R` and the energy scale set to one, the focusing potential
//! is
//!
//! ```text
//! V(rho) = -w / (rho^2 (rho^-kappa + rho^kappa)^2)
//! ```
//!
//! and for the quantized couplings `w_{N,kappa}` it supports a zero-energy
//! regular state. In the radially nodeless sector (`n = l + 1`) the reduced
//! radial function is
//!
//! ```text
//! f(rho) = rho^(l+1) (1 + rho^(2 kappa))^(-(2l+1)/(2 kappa))
//! ```
//!
//! whose negative log-derivative is the particular superpotential `W`. The
//! bosonic partner `U- = W^2 - W'` is the effective potential
//! `l(l+1)/rho^2 + V`, and the fermionic partner is `U+ = W^2 + W'`.

use num_complex::{Complex64, ComplexFloat};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::specfun::{gegenbauer, GegenbauerArgs};

/// Smallest radius accepted by the half-line evaluators.
pub const RHO_MIN: f64 = 1e-12;

const INTEGRAL_SLACK: f64 = 1e-9;

/// The two values of `kappa` with closed-form integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KappaClass {
    /// `kappa = 1/2`, the atomic aufbau case.
    Half,
    /// `kappa = 1`, the Maxwell fish-eye case.
    One,
}

impl KappaClass {
    pub fn of(kappa: f64) -> Option<Self> {
        if kappa == 0.5 {
            Some(Self::Half)
        } else if kappa == 1.0 {
            Some(Self::One)
        } else {
            None
        }
    }

    pub fn kappa(self) -> f64 {
        match self {
            Self::Half => 0.5,
            Self::One => 1.0,
        }
    }
}

/// Parameters of one half-line problem: `kappa`, orbital number `l`, total
/// quantum number `N`, family parameter `lambda` and spatial scale `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoParams {
    kappa: f64,
    l: u32,
    total_n: f64,
    lambda: f64,
    radius: f64,
}

impl DoParams {
    /// General constructor. Rejects `(N, l, kappa)` for which the Gegenbauer
    /// degree `N - 1 - l/kappa` is negative or not an integer.
    pub fn new(kappa: f64, l: u32, total_n: f64, lambda: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive and finite, got {kappa}"));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return domain(format!("lambda must be positive and finite, got {lambda}"));
        }
        if !(total_n >= 1.0 && total_n.is_finite()) {
            return domain(format!("total quantum number must be >= 1, got {total_n}"));
        }
        let params = Self {
            kappa,
            l,
            total_n,
            lambda,
            radius: 1.0,
        };
        params.gegenbauer_degree()?;
        Ok(params)
    }

    /// Radially nodeless sector: `n = l + 1`, hence `N = 1 + l/kappa`.
    pub fn nodeless(kappa: f64, l: u32, lambda: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive and finite, got {kappa}"));
        }
        Self::new(kappa, l, 1.0 + f64::from(l) / kappa, lambda)
    }

    pub fn with_radius(mut self, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return domain(format!("radius must be positive and finite, got {radius}"));
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn total_n(&self) -> f64 {
        self.total_n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn kappa_class(&self) -> Option<KappaClass> {
        KappaClass::of(self.kappa)
    }

    /// Principal number `n = N - (1/kappa - 1) l`.
    pub fn principal_n(&self) -> f64 {
        self.total_n - (1.0 / self.kappa - 1.0) * f64::from(self.l)
    }

    /// Degree `N - 1 - l/kappa` of the Gegenbauer factor in the radial state.
    pub fn gegenbauer_degree(&self) -> Result<u32> {
        let degree = self.total_n - 1.0 - f64::from(self.l) / self.kappa;
        let rounded = degree.round();
        if rounded < 0.0 || (degree - rounded).abs() > INTEGRAL_SLACK * self.total_n.max(1.0) {
            return domain(format!(
                "Gegenbauer degree N - 1 - l/kappa = {degree} is not a non-negative integer \
                 (N = {}, l = {}, kappa = {})",
                self.total_n, self.l, self.kappa
            ));
        }
        Ok(rounded as u32)
    }

    pub fn is_nodeless(&self) -> bool {
        matches!(self.gegenbauer_degree(), Ok(0))
    }

    /// Quantized coupling `w_{N,kappa}` for these parameters.
    pub fn coupling(&self) -> f64 {
        quantized_coupling(self.total_n, self.kappa)
    }

    /// Replaces the family parameter.
    pub fn with_lambda(self, lambda: f64) -> Result<Self> {
        Self::new(self.kappa, self.l, self.total_n, lambda)?.with_radius(self.radius)
    }
}

/// Real or complex scalar on which the closed forms are evaluated. The
/// complex instance continues them off the real axis for complex-step
/// differentiation, so every operation must keep tiny imaginary parts.
pub trait Scalar: ComplexFloat<Real = f64> {
    fn lift(x: f64) -> Self;
    fn arctan(self) -> Self;
}

impl Scalar for f64 {
    fn lift(x: f64) -> Self {
        x
    }

    fn arctan(self) -> Self {
        self.atan()
    }
}

impl Scalar for Complex64 {
    fn lift(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }

    // The textbook log form rounds 1 + y to 1 for tiny y.
    fn arctan(self) -> Self {
        let (x, y) = (self.re, self.im);
        let re = 0.5 * (x.atan2(1.0 - y) + x.atan2(1.0 + y));
        let im = 0.25 * (4.0 * y / (x * x + (1.0 - y) * (1.0 - y))).ln_1p();
        Complex64::new(re, im)
    }
}

pub(crate) fn check_rho(rho: f64) -> Result<()> {
    if rho >= RHO_MIN && rho.is_finite() {
        Ok(())
    } else {
        domain(format!("rho must be finite and >= {RHO_MIN:e}, got {rho}"))
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa > 0.0 && kappa.is_finite() {
        Ok(())
    } else {
        domain(format!("kappa must be positive and finite, got {kappa}"))
    }
}

fn quantized_coupling(total_n: f64, kappa: f64) -> f64 {
    let shift = total_n + 1.0 / (2.0 * kappa);
    (2.0 * kappa).powi(2) * shift * (shift - 1.0)
}

/// Quantized coupling `w_{N,kappa} = (2 kappa)^2 [N + 1/(2 kappa)] [N + 1/(2 kappa) - 1]`.
pub fn coupling_w(total_n: f64, kappa: f64) -> Result<f64> {
    check_kappa(kappa)?;
    if !(total_n >= 1.0) {
        return domain(format!("total quantum number must be >= 1, got {total_n}"));
    }
    Ok(quantized_coupling(total_n, kappa))
}

/// Number of zero-energy states sharing the total quantum number `N`.
pub fn degeneracy(total_n: u64) -> u64 {
    total_n * total_n
}

/// The focusing potential `-w / (rho^2 (rho^-kappa + rho^kappa)^2)`.
pub fn potential_v(rho: f64, kappa: f64, w: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    let p = rho.powf(2.0 * kappa);
    // rho^2 (rho^-k + rho^k)^2 = rho^(2 - 2k) (1 + rho^2k)^2
    Ok(-w * rho.powf(2.0 * kappa - 2.0) / ((1.0 + p) * (1.0 + p)))
}

/// `xi = (1 - rho^(2 kappa)) / (1 + rho^(2 kappa))`.
pub fn xi_of_rho(rho: f64, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    let p = rho.powf(2.0 * kappa);
    Ok((1.0 - p) / (1.0 + p))
}

/// Unnormalized zero-energy radial state
/// `rho^l (1 + rho^(2 kappa))^(-(2l+1)/(2 kappa)) C_d^q(xi)` with
/// `d = N - 1 - l/kappa` and `q = (2l+1)/(2 kappa) + 1/2`.
pub fn radial_wavefunction(rho: f64, params: &DoParams) -> Result<f64> {
    check_rho(rho)?;
    let degree = params.gegenbauer_degree()?;
    let kappa = params.kappa;
    let l = f64::from(params.l);
    let order = (2.0 * l + 1.0) / (2.0 * kappa) + 0.5;
    let xi = xi_of_rho(rho, kappa)?;
    let envelope = rho.powi(params.l as i32) * (1.0 + rho.powf(2.0 * kappa)).powf(-(2.0 * l + 1.0) / (2.0 * kappa));
    let c = gegenbauer(GegenbauerArgs::new(i64::from(degree), order, xi))?;
    Ok(envelope * c)
}

// `1 + rho^(2 kappa)`, with integer powers for the closed-form cases.
fn one_plus_power<T: Scalar>(rho: T, kappa: f64) -> T {
    let one = T::lift(1.0);
    match KappaClass::of(kappa) {
        Some(KappaClass::One) => one + rho * rho,
        Some(KappaClass::Half) => one + rho,
        None => one + rho.powf(2.0 * kappa),
    }
}

/// `f^2`, generic so that it can be continued to complex `rho`.
pub(crate) fn radial_factor_sq_generic<T>(rho: T, l: u32, kappa: f64) -> T
where
    T: Scalar,
{
    let base = one_plus_power(rho, kappa);
    let lead = rho.powi(2 * l as i32 + 2);
    let exponent = -(2.0 * f64::from(l) + 1.0) / kappa;
    if exponent.fract() == 0.0 {
        lead * base.powi(exponent as i32)
    } else {
        lead * base.powf(exponent)
    }
}

/// `W = l/rho - (2l+1)/(rho (1 + rho^(2 kappa)))`, generic over real and
/// complex arguments.
pub(crate) fn superpotential_generic<T>(rho: T, l: u32, kappa: f64) -> T
where
    T: Scalar,
{
    let l = f64::from(l);
    T::lift(l) / rho - T::lift(2.0 * l + 1.0) / (rho * one_plus_power(rho, kappa))
}

/// Nodeless radial factor `f = rho^(l+1) (1 + rho^(2 kappa))^(-(2l+1)/(2 kappa))`.
pub fn radial_factor_f(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    Ok(radial_factor_sq_generic(rho, l, kappa).sqrt())
}

/// `f'`, from `f' = -W f`.
pub fn radial_factor_derivative(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    Ok(-superpotential_w(rho, l, kappa)? * radial_factor_f(rho, l, kappa)?)
}

/// Particular superpotential `W = -(ln f)'`.
pub fn superpotential_w(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    Ok(superpotential_generic(rho, l, kappa))
}

/// Analytic `dW/drho`.
pub fn superpotential_w_derivative(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    let l = f64::from(l);
    let p = rho.powf(2.0 * kappa);
    let base = 1.0 + p;
    // d/drho [rho (1 + p)] = 1 + (1 + 2 kappa) p
    Ok(-l / (rho * rho) + (2.0 * l + 1.0) * (1.0 + (1.0 + 2.0 * kappa) * p) / (rho * rho * base * base))
}

/// Bosonic effective potential `U- = l(l+1)/rho^2 + V(rho; w_{N,kappa})` of
/// the nodeless sector; equal to `W^2 - W'`.
pub fn u_minus(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    let lf = f64::from(l);
    let w = quantized_coupling(1.0 + lf / kappa, kappa);
    Ok(lf * (lf + 1.0) / (rho * rho) + potential_v(rho, kappa, w)?)
}

/// Two-term Frobenius expansion `rho^(l+1) (1 + a rho^(2 kappa))` of the
/// regular zero-energy solution of `-u'' + U- u = 0` near the origin, with
/// `a = -w / (2 kappa (2l + 1 + 2 kappa))` fixed by the leading terms of `U-`.
/// Used to seed Numerov marches.
pub fn regular_seed(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    check_rho(rho)?;
    check_kappa(kappa)?;
    let lf = f64::from(l);
    let w = quantized_coupling(1.0 + lf / kappa, kappa);
    let a = -w / (2.0 * kappa * (2.0 * lf + 1.0 + 2.0 * kappa));
    Ok(rho.powi(l as i32 + 1) * (1.0 + a * rho.powf(2.0 * kappa)))
}

/// Fermionic partner `U+ = W' + W^2`.
pub fn u_plus(rho: f64, l: u32, kappa: f64) -> Result<f64> {
    let w = superpotential_w(rho, l, kappa)?;
    Ok(superpotential_w_derivative(rho, l, kappa)? + w * w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{derivative, numerov_zero_energy, scale_and_relative_error, Order};
    use crate::profile::linspace;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn couplings() {
        assert_eq!(coupling_w(1.0, 1.0).unwrap(), 3.0);
        assert_eq!(coupling_w(1.0, 0.5).unwrap(), 2.0);
        assert_eq!(coupling_w(2.0, 1.0).unwrap(), 15.0);
        assert!(coupling_w(0.0, 1.0).is_err());
        assert!(coupling_w(1.0, 0.0).is_err());
        for l in 0..=10u64 {
            let exact = (2 * l + 1) * (2 * l + 3);
            assert_eq!(coupling_w((l + 1) as f64, 1.0).unwrap(), exact as f64);
        }
    }

    #[test]
    fn potential_values() {
        assert_relative_eq!(potential_v(1.0, 1.0, 3.0).unwrap(), -0.75);
        assert!(potential_v(1e6, 1.0, 3.0).unwrap().abs() < 1e-11);
        assert_relative_eq!(potential_v(1.0, 0.5, 2.0).unwrap(), -0.5);
        assert!(potential_v(0.0, 1.0, 3.0).is_err());
        assert!(potential_v(-1.0, 1.0, 3.0).is_err());
        // the two forms of the denominator agree
        let (rho, kappa, w) = (0.37, 0.8, 2.3);
        let direct = -w / (rho * rho * (rho.powf(-kappa) + rho.powf(kappa)).powi(2));
        assert_relative_eq!(potential_v(rho, kappa, w).unwrap(), direct, max_relative = 1e-14);
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_of_rho(1.0, 1.0).unwrap(), 0.0);
        assert_eq!(xi_of_rho(1.0, 0.5).unwrap(), 0.0);
        assert!((xi_of_rho(1e-8, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_relative_eq!(xi_of_rho(2.0, 1.0).unwrap(), -0.6, max_relative = 1e-15);
        assert!(xi_of_rho(0.0, 1.0).is_err());
    }

    #[test]
    fn radial_states() {
        let p = DoParams::new(1.0, 0, 1.0, 1.0).unwrap();
        assert_relative_eq!(radial_wavefunction(1.0, &p).unwrap(), SQRT_HALF, max_relative = 1e-15);
        let p = DoParams::new(1.0, 1, 2.0, 1.0).unwrap();
        assert_relative_eq!(radial_wavefunction(2.0, &p).unwrap(), 2.0 * 5f64.powf(-1.5), max_relative = 1e-14);
        assert!(radial_wavefunction(1e-8, &p).unwrap().abs() < 1e-7);
        let p = DoParams::new(0.5, 2, 5.0, 1.0).unwrap();
        assert!(radial_wavefunction(1e-8, &p).unwrap().abs() < 1e-15);
    }

    #[test]
    fn radial_state_is_rho_times_factor_in_nodeless_sector() {
        for &kappa in &[0.5, 1.0] {
            for l in 0..4 {
                let p = DoParams::nodeless(kappa, l, 1.0).unwrap();
                assert!(p.is_nodeless());
                assert_eq!(p.principal_n(), f64::from(l) + 1.0);
                for &rho in &[0.1, 0.9, 2.5] {
                    let r = radial_wavefunction(rho, &p).unwrap();
                    let f = radial_factor_f(rho, l, kappa).unwrap();
                    assert_relative_eq!(rho * r, f, max_relative = 1e-13);
                }
            }
        }
    }

    #[test]
    fn excited_sector_solves_zero_energy_equation() {
        // kappa = 1, l = 0, N = 2 (n_r = 1): Gegenbauer degree 1
        let p = DoParams::new(1.0, 0, 2.0, 1.0).unwrap();
        assert_eq!(p.gegenbauer_degree().unwrap(), 1);
        let w = p.coupling();
        let u = |rho: f64| rho * radial_wavefunction(rho, &p).unwrap();
        for &rho in &[0.3, 0.8, 1.7] {
            let upp = derivative(u, rho, Order::Second, 0.05).unwrap();
            let residual = -upp + potential_v(rho, 1.0, w).unwrap() * u(rho);
            assert!(residual.abs() < 1e-8, "{residual}");
        }
    }

    #[test]
    fn rejects_non_integral_degree() {
        assert!(DoParams::new(1.0, 1, 1.0, 1.0).is_err());
        assert!(DoParams::new(0.5, 1, 2.0, 1.0).is_err());
        assert!(DoParams::new(0.7, 1, 2.0, 1.0).is_err());
        assert!(DoParams::new(1.0, 0, 1.0, 0.0).is_err());
        assert!(DoParams::new(1.0, 0, 1.0, -1.0).is_err());
        assert!(DoParams::nodeless(0.0, 0, 1.0).is_err());
        assert!(DoParams::nodeless(1.0, 0, 1.0).unwrap().with_radius(0.0).is_err());
        // arbitrary kappa is fine in the nodeless sector
        assert!(DoParams::nodeless(0.7, 3, 1.0).unwrap().is_nodeless());
    }

    #[test]
    fn radial_factor_values() {
        assert_relative_eq!(radial_factor_f(1.0, 0, 1.0).unwrap(), SQRT_HALF, max_relative = 1e-15);
        assert!(radial_factor_f(1e-12, 2, 1.0).unwrap() < 1e-30);
        assert_relative_eq!(radial_factor_f(1.0, 1, 0.5).unwrap(), 0.125, max_relative = 1e-15);
        assert!(radial_factor_f(0.0, 0, 1.0).is_err());
        assert!(radial_factor_f(1e-13, 0, 1.0).is_err());
    }

    #[test]
    fn superpotential_values() {
        assert_relative_eq!(superpotential_w(1.0, 0, 1.0).unwrap(), -0.5);
        assert_relative_eq!(superpotential_w(1.0, 1, 1.0).unwrap(), -0.5);
        assert_relative_eq!(superpotential_w(2.0, 0, 1.0).unwrap(), -0.1, max_relative = 1e-15);
        let f = |r: f64| radial_factor_f(r, 0, 1.0).unwrap().ln();
        let dlog = derivative(f, 2.0, Order::First, 0.1).unwrap();
        assert!((dlog + superpotential_w(2.0, 0, 1.0).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn log_derivative_identity() {
        for &kappa in &[0.5, 1.0] {
            for l in 0..4 {
                for rho in linspace(0.05, 20.0, 40) {
                    let f = |r: f64| radial_factor_f(r, l, kappa).unwrap();
                    let fp = derivative(f, rho, Order::First, 0.02 * rho).unwrap();
                    let residual = superpotential_w(rho, l, kappa).unwrap() + fp / f(rho);
                    assert!(residual.abs() < 1e-8, "kappa={kappa} l={l} rho={rho}: {residual}");
                }
            }
        }
    }

    #[test]
    fn analytic_w_derivative_matches_finite_differences() {
        for &kappa in &[0.5, 0.8, 1.0] {
            for l in 0..3 {
                for &rho in &[0.2, 1.0, 3.3] {
                    let fd = derivative(|r| superpotential_w(r, l, kappa).unwrap(), rho, Order::First, 0.02 * rho).unwrap();
                    let exact = superpotential_w_derivative(rho, l, kappa).unwrap();
                    assert_relative_eq!(fd, exact, epsilon = 1e-8, max_relative = 1e-9);
                }
            }
        }
    }

    #[test]
    fn u_minus_values_and_riccati_route() {
        assert_relative_eq!(u_minus(1.0, 0, 1.0).unwrap(), -0.75, max_relative = 1e-15);
        assert_relative_eq!(u_minus(1.0, 1, 1.0).unwrap(), -1.75, max_relative = 1e-15);
        let far = u_minus(1e4, 2, 1.0).unwrap();
        assert_relative_eq!(far, 6.0 / 1e8, max_relative = 1e-6);
        for &kappa in &[0.5, 0.75, 1.0, 1.5] {
            for l in 0..4 {
                for &rho in &[0.05, 0.4, 1.0, 2.2, 9.0] {
                    let w = superpotential_w(rho, l, kappa).unwrap();
                    let riccati = w * w - superpotential_w_derivative(rho, l, kappa).unwrap();
                    let closed = u_minus(rho, l, kappa).unwrap();
                    assert_relative_eq!(riccati, closed, epsilon = 1e-10, max_relative = 1e-11);
                }
            }
        }
    }

    #[test]
    fn u_plus_values() {
        // W = -1/(rho(1+rho^2)) at l = 0: W(1) = -1/2, W'(1) = 1
        assert_relative_eq!(u_plus(1.0, 0, 1.0).unwrap(), 1.25, max_relative = 1e-15);
        assert!(u_plus(1e6, 0, 1.0).unwrap().abs() < 1e-11);
        let fd = derivative(|r| superpotential_w(r, 1, 1.0).unwrap(), 0.5, Order::First, 0.01).unwrap();
        let w = superpotential_w(0.5, 1, 1.0).unwrap();
        assert_relative_eq!(u_plus(0.5, 1, 1.0).unwrap(), fd + w * w, max_relative = 1e-10);
    }

    #[test]
    fn partner_difference_is_twice_w_prime() {
        for &kappa in &[0.5, 1.0] {
            for l in 0..3 {
                for &rho in &[0.3, 1.0, 4.0] {
                    let wp = derivative(|r| superpotential_w(r, l, kappa).unwrap(), rho, Order::First, 0.02 * rho).unwrap();
                    let diff = u_plus(rho, l, kappa).unwrap() - u_minus(rho, l, kappa).unwrap();
                    assert!((diff - 2.0 * wp).abs() < 1e-6);
                }
            }
        }
    }

    #[test]
    fn seed_matches_radial_factor_to_second_order() {
        for &kappa in &[0.5, 1.0, 1.5] {
            for l in 0..4 {
                let rho = 1e-3;
                let rel = regular_seed(rho, l, kappa).unwrap() / radial_factor_f(rho, l, kappa).unwrap() - 1.0;
                assert!(rel.abs() < 10.0 * rho.powf(4.0 * kappa) * f64::from(l + 1).powi(2) + 1e-14, "{rel}");
            }
        }
    }

    #[test]
    fn degeneracies() {
        assert_eq!(degeneracy(1), 1);
        assert_eq!(degeneracy(2), 4);
        assert_eq!(degeneracy(5), 25);
    }

    #[test]
    fn zero_mode_of_u_minus() {
        let grid = linspace(1e-3, 5.0, 5000);
        for &kappa in &[0.5, 1.0] {
            for l in 0..4 {
                let u = numerov_zero_energy(
                    |r| u_minus(r, l, kappa).unwrap(),
                    &grid,
                    regular_seed(grid[0], l, kappa).unwrap(),
                    regular_seed(grid[1], l, kappa).unwrap(),
                )
                .unwrap();
                let (_, err) = scale_and_relative_error(&u, |r| radial_factor_f(r, l, kappa).unwrap(), 0.1, 5.0);
                assert!(err < 1e-6, "kappa={kappa} l={l}: {err}");
            }
        }
    }

    #[test]
    fn numerov_converges_at_fourth_order() {
        // l = 0, kappa = 1: U- is regular at the origin, start from rho = 0
        let f = |r: f64| r / (1.0 + r * r).sqrt();
        let pot = |r: f64| -3.0 / (1.0 + r * r).powi(2);
        let residual = |n: usize| {
            let grid = linspace(0.0, 5.0, n);
            let u = numerov_zero_energy(pot, &grid, 0.0, f(grid[1])).unwrap();
            u.iter()
                .filter(|&(r, _)| r >= 0.1)
                .map(|(r, v)| ((v - f(r)) / f(r)).abs())
                .fold(0.0, f64::max)
        };
        // the asymptotic factor is exactly 16; allow the observed order to sit
        // slightly below 4 before the h^6 term has died out
        for n in [201, 401] {
            let ratio = residual(n) / residual(2 * n - 1);
            assert!(ratio.log2() >= 3.95, "n={n}: {ratio}");
        }
    }

    proptest! {
        #[test]
        fn xi_is_decreasing(a in 1e-6f64..50.0, b in 1e-6f64..50.0, kappa in 0.2f64..2.0) {
            prop_assume!(a < b);
            let (xa, xb) = (xi_of_rho(a, kappa).unwrap(), xi_of_rho(b, kappa).unwrap());
            prop_assert!(xa >= xb);
            prop_assert!(xa.abs() < 1.0 + 1e-15 && xb.abs() < 1.0 + 1e-15);
        }
    }
}
