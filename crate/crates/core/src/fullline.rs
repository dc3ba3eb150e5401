//! The Langer map `x = ln(rho)`, `phi = rho^(-1/2) u` and the Rosen-Morse
//! problem on the full line.
//!
//! For `kappa = 1` and `n = l + 1` the zero-energy radial equation becomes
//!
//! ```text
//! -phi'' + (n - 1/2)^2 phi - (n - 1/2)(n + 1/2) sech^2(x) phi = 0
//! ```
//!
//! Reflectionless wells `-m(m+1) sech^2(x)` carry bound states at `-k^2`,
//! `k = 1..m`. The one-state family `-2 sech^2(x + ln(1 + 1/lambda0) / 2)` is
//! a pure translation. For `kappa = 1/2` the image is the wider well
//! `-N(N+1) / (4 cosh^2(x/2))`, `N = 2l + 1`, with levels `-k^2/4`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::model::{check_rho, radial_factor_f, xi_of_rho};
use crate::numerics::{bound_state_count, shooting_bound_states, ShootingConfig};

fn sech2(x: f64) -> f64 {
    let c = x.cosh();
    1.0 / (c * c)
}

/// `x = ln(rho)`.
pub fn langer_x(rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(rho.ln())
}

/// `rho = e^x`.
pub fn langer_rho(x: f64) -> f64 {
    x.exp()
}

/// `phi = rho^(-1/2) u`.
pub fn langer_wavefunction(u_value: f64, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(u_value / rho.sqrt())
}

/// The nodeless `kappa = 1` radial factor carried to the full line,
/// `e^(-x/2) f(e^x)`.
pub fn transplanted_state(x: f64, l: u32) -> Result<f64> {
    let rho = langer_rho(x);
    langer_wavefunction(radial_factor_f(rho, l, 1.0)?, rho)
}

/// Full-line potential of the Langer-transformed zero-energy equation,
/// `(n - 1/2)^2 - (n - 1/2)(n + 1/2) sech^2(x)`.
pub fn langer_potential(x: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    (nf - 0.5) * (nf - 0.5) - (nf - 0.5) * (nf + 0.5) * sech2(x)
}

/// `-m(m+1) sech^2(x)` with `m` the integer part of the shifted number.
pub fn rm_potential(x: f64, n_b_int: u32) -> f64 {
    let m = f64::from(n_b_int);
    -m * (m + 1.0) * sech2(x)
}

/// Superpartner well `-m(m-1) sech^2(x)`, one state shallower.
pub fn rm_partner_potential(x: f64, n_b_int: u32) -> f64 {
    let m = f64::from(n_b_int);
    -m * (m - 1.0) * sech2(x)
}

/// Analytic levels `-k^2`, `k = m..1`, ascending.
pub fn rm_spectrum(n_b_int: u32) -> Vec<f64> {
    (1..=n_b_int).rev().map(|k| -f64::from(k * k)).collect()
}

/// `m tanh(x)`; `W^2 -+ W' = m^2 + (well, partner)`.
pub fn rm_superpotential(x: f64, n_b_int: u32) -> f64 {
    f64::from(n_b_int) * x.tanh()
}

/// Shift `ln(1 + 1/lambda0) / 2` of the one-state family. Real for
/// `lambda0 > 0` and, as a limit study, for `lambda0 < -1`.
pub fn rm_family_shift(lambda0: f64) -> Result<f64> {
    if lambda0.is_nan() || (-1.0..=0.0).contains(&lambda0) {
        return domain(format!("family parameter must satisfy lambda0 > 0 or lambda0 < -1, got {lambda0}"));
    }
    if lambda0 < -1.0 {
        log::warn!("lambda0 = {lambda0} lies outside the strictly isospectral branch");
    }
    Ok(0.5 * (1.0 / lambda0).ln_1p())
}

/// `-2 sech^2(x + ln(1 + 1/lambda0) / 2)`.
pub fn rm_family_single(x: f64, lambda0: f64) -> Result<f64> {
    Ok(-2.0 * sech2(x + rm_family_shift(lambda0)?))
}

/// Minimum of the one-state family, `-ln(1 + 1/lambda0) / 2`.
pub fn rm_family_argmin(lambda0: f64) -> Result<f64> {
    Ok(-rm_family_shift(lambda0)?)
}

fn check_lambda0_strict(lambda0: f64) -> Result<()> {
    if lambda0 > 0.0 {
        Ok(())
    } else {
        domain(format!("lambda0 must be positive, got {lambda0}"))
    }
}

/// Rescaled radius `R sqrt(lambda0 / (lambda0 + 1))`; `lambda0 = inf` gives `R`.
pub fn rescale_radius(radius: f64, lambda0: f64) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return domain(format!("radius must be positive and finite, got {radius}"));
    }
    check_lambda0_strict(lambda0)?;
    Ok(radius / (1.0 + 1.0 / lambda0).sqrt())
}

/// Companion coordinate map `rho_lambda0 = sqrt(1 + 1/lambda0) rho_inf`.
pub fn rescale_coordinate(rho_inf: f64, lambda0: f64) -> Result<f64> {
    check_rho(rho_inf)?;
    check_lambda0_strict(lambda0)?;
    Ok((1.0 + 1.0 / lambda0).sqrt() * rho_inf)
}

/// Half-line superpartner `l(l+1)/rho^2 - (2l+1)(2l-1)/(1+rho^2)^2`.
pub fn halfline_superpartner(rho: f64, l: u32) -> Result<f64> {
    check_rho(rho)?;
    let lf = f64::from(l);
    let s = 1.0 + rho * rho;
    Ok(lf * (lf + 1.0) / (rho * rho) - (2.0 * lf + 1.0) * (2.0 * lf - 1.0) / (s * s))
}

/// Half-line superpotential `(1/2 - n) xi(rho)` with `kappa = 1`.
pub fn halfline_superpotential(rho: f64, n: u32) -> Result<f64> {
    Ok((0.5 - f64::from(n)) * xi_of_rho(rho, 1.0)?)
}

fn check_aufbau(n_aufbau: u32) -> Result<()> {
    if n_aufbau % 2 == 1 {
        Ok(())
    } else {
        domain(format!("aufbau number must be a positive odd integer, got {n_aufbau}"))
    }
}

/// `-N(N+1) / (4 cosh^2(x/2))` for odd `N = 2l + 1`.
pub fn aufbau_rm_potential(x: f64, n_aufbau: u32) -> Result<f64> {
    check_aufbau(n_aufbau)?;
    let n = f64::from(n_aufbau);
    Ok(-n * (n + 1.0) * sech2(0.5 * x) / 4.0)
}

/// Analytic levels `-k^2/4`, `k = N..1`, ascending.
pub fn aufbau_spectrum(n_aufbau: u32) -> Result<Vec<f64>> {
    check_aufbau(n_aufbau)?;
    Ok((1..=n_aufbau).rev().map(|k| -f64::from(k * k) / 4.0).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Fisheye,
    Aufbau,
}

/// One full-line problem with its analytic spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RmProblem {
    variant: Variant,
    n_b: f64,
    n_aufbau: Option<u32>,
    lambda0: Option<f64>,
}

impl RmProblem {
    /// Fish-eye variant with `n_b = n + 1/2`. A family parameter translates
    /// the well and needs the single-state case `n = 1`.
    pub fn fisheye(n: u32, lambda0: Option<f64>) -> Result<Self> {
        if n == 0 {
            return domain("the integer part of n_b must be at least 1");
        }
        if let Some(l0) = lambda0 {
            rm_family_shift(l0)?;
            if n != 1 {
                return domain(format!("the translated family exists for the one-state well only, got [n_b] = {n}"));
            }
        }
        Ok(Self {
            variant: Variant::Fisheye,
            n_b: f64::from(n) + 0.5,
            n_aufbau: None,
            lambda0,
        })
    }

    /// Aufbau variant with `N = 2l + 1`.
    pub fn aufbau(l: u32) -> Self {
        Self {
            variant: Variant::Aufbau,
            n_b: f64::from(2 * l + 1) + 0.5,
            n_aufbau: Some(2 * l + 1),
            lambda0: None,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n_b(&self) -> f64 {
        self.n_b
    }

    pub fn lambda0(&self) -> Option<f64> {
        self.lambda0
    }

    /// `[n_b]` for the fish-eye variant, `N` for the aufbau one.
    pub fn n_b_int(&self) -> u32 {
        match self.variant {
            Variant::Fisheye => self.n_b.floor() as u32,
            Variant::Aufbau => self.n_aufbau.unwrap_or(1),
        }
    }

    pub fn potential(&self, x: f64) -> f64 {
        let m = self.n_b_int();
        match (self.variant, self.lambda0) {
            (Variant::Fisheye, Some(l0)) => rm_family_single(x, l0).unwrap_or(f64::NAN),
            (Variant::Fisheye, None) => rm_potential(x, m),
            (Variant::Aufbau, _) => aufbau_rm_potential(x, m).unwrap_or(f64::NAN),
        }
    }

    /// Shape-invariant partner with one state fewer.
    pub fn partner_potential(&self, x: f64) -> f64 {
        let m = self.n_b_int();
        match self.variant {
            Variant::Fisheye => rm_partner_potential(x, m),
            Variant::Aufbau => {
                let n = f64::from(m);
                -(n - 1.0) * n * sech2(0.5 * x) / 4.0
            }
        }
    }

    pub fn spectrum(&self) -> Vec<f64> {
        match self.variant {
            Variant::Fisheye => rm_spectrum(self.n_b_int()),
            Variant::Aufbau => aufbau_spectrum(self.n_b_int()).unwrap_or_default(),
        }
    }

    /// Shooting setup: `[-12, 12]` with 4001 points for sech^2(x) wells, twice
    /// as wide for the aufbau well, whose tails decay as `e^(-|x|)`.
    pub fn shooting_config(&self) -> ShootingConfig {
        let m = f64::from(self.n_b_int());
        match self.variant {
            Variant::Fisheye => ShootingConfig::full_line(-m * (m + 1.0) - 1.0, -1e-6),
            Variant::Aufbau => ShootingConfig {
                x_min: -30.0,
                x_max: 30.0,
                points: 10001,
                ..ShootingConfig::full_line(-m * (m + 1.0) / 4.0 - 1.0, -1e-6)
            },
        }
    }

    /// Bound states found by the shooting oracle, ascending.
    pub fn solve(&self) -> Result<Vec<f64>> {
        shooting_bound_states(|x| self.potential(x), &self.shooting_config(), self.n_b_int() as usize + 1)
    }

    /// Number of bound states of the partner well, by node counting.
    pub fn partner_state_count(&self) -> Result<usize> {
        bound_state_count(|x| self.partner_potential(x), &self.shooting_config())
    }
}
