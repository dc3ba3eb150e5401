//! Invariant suites: every closed form checked against an independent oracle.
//!
//! `measure_*` functions return the raw worst-case figure of one invariant;
//! [`run`] wraps them into [`Check`]s with tolerances scaled by a user factor.
//! A check whose measurement errors out is reported as failed, never skipped.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fisheye::{find_inflection, inflection_grid, relative_ratio, v_family_fisheye, FIGURE_RHO_MAX, FIGURE_RHO_MIN, FIGURE_SAMPLES};
use crate::fullline::{langer_potential, rescale_radius, rm_family_argmin, rm_family_single, transplanted_state, RmProblem};
use crate::isospectral::{beta_of_rho, i0_closed_half, i0_closed_one, i0_quadrature, u_bosonic_family, IsoFamily, SuperpotentialPair};
use crate::model::{coupling_w, radial_factor_derivative, radial_factor_f, regular_seed, superpotential_w, u_minus, u_plus};
use crate::numerics::{
    derivative, integrate_adaptive, numerov_zero_energy, scale_and_relative_error, shooting_bound_states, Order, ShootingConfig,
};
use crate::profile::{linspace, logspace};
use crate::specfun::{binomial, gegenbauer, GegenbauerArgs};

const KAPPAS: [f64; 2] = [0.5, 1.0];
const ORACLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Specfun,
    DoCore,
    Isospectral,
    Fisheye,
    Fullline,
    Numerics,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 6] = [
        Suite::Specfun,
        Suite::DoCore,
        Suite::Isospectral,
        Suite::Fisheye,
        Suite::Fullline,
        Suite::Numerics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::DoCore => "do-core",
            Suite::Isospectral => "isospectral",
            Suite::Fisheye => "fisheye",
            Suite::Fullline => "fullline",
            Suite::Numerics => "numerics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::MODULES
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// How a measurement is compared with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Relation {
    fn holds(self, measured: f64, tolerance: f64) -> bool {
        match self {
            Relation::AtMost => measured <= tolerance,
            Relation::Below => measured < tolerance,
            Relation::AtLeast => measured >= tolerance,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::Below => "<",
            Relation::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub measured: f64,
    pub relation: Relation,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    pub fn new(suite: Suite, name: impl Into<String>, measured: Result<f64>, relation: Relation, tolerance: f64) -> Self {
        let name = name.into();
        match measured {
            Ok(m) => Self {
                suite,
                name,
                measured: m,
                relation,
                tolerance,
                passed: relation.holds(m, tolerance),
                error: None,
            },
            Err(e) => Self {
                suite,
                name,
                measured: f64::NAN,
                relation,
                tolerance,
                passed: false,
                error: Some(e.to_string()),
            },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}/{}: {:.3e} {} {:.3e}",
            self.suite,
            self.name,
            self.measured,
            self.relation.symbol(),
            self.tolerance
        )?;
        if let Some(e) = &self.error {
            write!(f, " ({e})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs one suite, or all of them, with residual tolerances multiplied by
/// `tol_scale`. Counts, orders and stated bounds are not scaled.
pub fn run(suite: Suite, tol_scale: f64) -> Result<Report> {
    if !(tol_scale > 0.0 && tol_scale.is_finite()) {
        return Err(Error::Domain(format!(
            "tolerance scale must be positive and finite, got {tol_scale}"
        )));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::MODULES.to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        log::info!("running suite {s}");
        checks.extend(suite_checks(s, tol_scale));
    }
    Ok(Report { checks })
}

fn suite_checks(suite: Suite, k: f64) -> Vec<Check> {
    use Relation::*;
    let c = |name: &str, m: Result<f64>, rel: Relation, tol: f64| Check::new(suite, name, m, rel, tol);
    match suite {
        Suite::Specfun => vec![
            c("gegenbauer_recurrence", measure_gegenbauer_recurrence(), AtMost, 1e-12 * k),
            c("gegenbauer_parity", measure_gegenbauer_parity(), AtMost, 1e-12 * k),
            c("binomial_pascal_mismatches", measure_pascal_mismatches(), AtMost, 0.0),
        ],
        Suite::DoCore => vec![
            c("log_derivative_identity", measure_log_derivative(), Below, 1e-8 * k),
            c("zero_mode_u_minus", measure_zero_mode_u_minus(), Below, 1e-6 * k),
            c("partner_difference", measure_partner_difference(), Below, 1e-6 * k),
            c("coupling_mismatches", measure_coupling_mismatches(), AtMost, 0.0),
        ],
        Suite::Isospectral => vec![
            c("closed_form_vs_quadrature", measure_closed_forms(), AtMost, 1e-9 * k),
            c("riccati_general", measure_riccati_general(), Below, 1e-6 * k),
            c("shared_fermionic_partner", measure_shared_partner(), Below, 1e-6 * k),
            c("family_zero_modes", measure_family_zero_modes(), Below, 1e-5 * k),
            c("lambda_recovery_violations", measure_recovery_violations(), AtMost, 0.0),
        ],
        Suite::Fisheye => vec![
            c("centrifugal_subtraction", measure_centrifugal_subtraction(), AtMost, 1e-10 * k),
            c("several_percent_peak", measure_several_percent(), AtMost, 0.10),
            c("damping_in_l_peak_ratio", measure_damping_in_l(), Below, 1.0),
            c("surface_peaking_distance", measure_surface_peaking(), AtMost, 0.0),
            c("inflection_in_lens_max", measure_inflections(), AtMost, 1.0),
            c("maxwell_inflection_offset_steps", measure_maxwell_inflection(), AtMost, 2.0),
        ],
        Suite::Fullline => vec![
            c("langer_residual", measure_langer_residual(&[1, 2, 3]), Below, 1e-6 * k),
            c("rosen_morse_ladder", measure_rm_ladder(), Below, 1e-6 * k),
            c("partner_deficit_mismatches", measure_partner_deficit(), AtMost, 0.0),
            c("family_spectrum", measure_family_spectrum(), Below, 1e-6 * k),
            c("aufbau_ground_state", measure_aufbau_ground(), Below, 1e-5 * k),
            c("translation_law_steps", measure_translation_law(), AtMost, 1.0),
            c("rescale_radius", measure_rescaling(), AtMost, 1e-15 * k),
        ],
        Suite::Numerics => vec![
            c("quadrature_examples", measure_quadrature_examples(), AtMost, 1e-12 * k),
            c("quadrature_refinement_violations", measure_quadrature_refinement(), AtMost, 0.0),
            c("derivative_examples", measure_derivative_examples(), AtMost, 1e-8 * k),
            c("numerov_linear", measure_numerov_linear(), AtMost, 1e-12 * k),
            c("numerov_observed_order", measure_numerov_order(), AtLeast, 3.95),
            c("shooting_examples", measure_shooting_examples(), Below, 1e-6 * k),
        ],
        Suite::All => Vec::new(),
    }
}

fn worst<I: IntoIterator<Item = Result<f64>>>(values: I) -> Result<f64> {
    values.into_iter().try_fold(0.0, |acc, v| Ok(f64::max(acc, v?.abs())))
}

fn count(flags: impl IntoIterator<Item = bool>) -> f64 {
    flags.into_iter().filter(|&bad| bad).count() as f64
}

pub fn measure_gegenbauer_recurrence() -> Result<f64> {
    let mut out = Vec::new();
    for p in 1..10i64 {
        for &q in &[0.5, 1.5, 2.5] {
            for &xi in &[-1.0, -0.5, 0.0, 0.5, 1.0] {
                let c = |d| gegenbauer(GegenbauerArgs::new(d, q, xi));
                let pf = p as f64;
                out.push((|| {
                    let lhs = (pf + 1.0) * c(p + 1)?;
                    let rhs = 2.0 * (pf + q) * xi * c(p)? - (pf + 2.0 * q - 1.0) * c(p - 1)?;
                    Ok((lhs - rhs).abs() / lhs.abs().max(1.0))
                })());
            }
        }
    }
    worst(out)
}

pub fn measure_gegenbauer_parity() -> Result<f64> {
    let mut out = Vec::new();
    for p in 0..11i64 {
        for &q in &[0.5, 1.5, 2.5] {
            for xi in linspace(0.0, 1.0, 11) {
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                out.push((|| {
                    let a = gegenbauer(GegenbauerArgs::new(p, q, xi))?;
                    let b = gegenbauer(GegenbauerArgs::new(p, q, -xi))?;
                    Ok((b - sign * a).abs() / a.abs().max(1.0))
                })());
            }
        }
    }
    worst(out)
}

pub fn measure_pascal_mismatches() -> Result<f64> {
    let mut bad = 0.0;
    for n in 1..=40u64 {
        for k in 1..n {
            if binomial(n, k)? != binomial(n - 1, k - 1)? + binomial(n - 1, k)? {
                bad += 1.0;
            }
        }
    }
    Ok(bad)
}

pub fn measure_log_derivative() -> Result<f64> {
    let mut out = Vec::new();
    for &kappa in &KAPPAS {
        for l in 0..4 {
            for rho in linspace(0.05, 20.0, 40) {
                let f = |r: f64| radial_factor_f(r, l, kappa).unwrap_or(f64::NAN);
                out.push((|| {
                    let fp = derivative(f, rho, Order::First, 0.02 * rho)?;
                    Ok(superpotential_w(rho, l, kappa)? + fp / f(rho))
                })());
            }
        }
    }
    worst(out)
}

fn zero_mode_grid() -> Vec<f64> {
    linspace(1e-3, 5.0, 5000)
}

/// Largest relative deviation of the Numerov zero mode of `U-` from the
/// radial factor on `[0.1, 5]`, `l` in `0..4`, both `kappa`.
pub fn measure_zero_mode_u_minus() -> Result<f64> {
    let grid = zero_mode_grid();
    let mut out = Vec::new();
    for &kappa in &KAPPAS {
        for l in 0..4 {
            out.push((|| {
                let u = numerov_zero_energy(
                    |r| u_minus(r, l, kappa).unwrap_or(f64::NAN),
                    &grid,
                    regular_seed(grid[0], l, kappa)?,
                    regular_seed(grid[1], l, kappa)?,
                )?;
                Ok(scale_and_relative_error(&u, |r| radial_factor_f(r, l, kappa).unwrap_or(f64::NAN), 0.1, 5.0).1)
            })());
        }
    }
    worst(out)
}

pub fn measure_partner_difference() -> Result<f64> {
    let mut out = Vec::new();
    for &kappa in &KAPPAS {
        for l in 0..3 {
            for rho in linspace(0.1, 10.0, 25) {
                out.push((|| {
                    let wp = derivative(|r| superpotential_w(r, l, kappa).unwrap_or(f64::NAN), rho, Order::First, 0.02 * rho)?;
                    Ok(u_plus(rho, l, kappa)? - u_minus(rho, l, kappa)? - 2.0 * wp)
                })());
            }
        }
    }
    worst(out)
}

pub fn measure_coupling_mismatches() -> Result<f64> {
    let mut bad = 0.0;
    for l in 0..=10u32 {
        let exact = i64::from((2 * l + 1) * (2 * l + 3));
        let w = coupling_w(f64::from(l + 1), 1.0)?;
        if w.fract() != 0.0 || w as i64 != exact {
            bad += 1.0;
        }
    }
    Ok(bad)
}

/// Largest absolute gap between the closed forms and quadrature over 50
/// log-spaced `rho` in `[0.01, 50]`, `l` in `0..=5`, both `kappa`.
pub fn measure_closed_forms() -> Result<f64> {
    let mut out = Vec::new();
    for l in 0..=5 {
        for rho in logspace(0.01, 50.0, 50) {
            out.push((|| {
                let one = i0_closed_one(beta_of_rho(rho, 1.0)?, l)? - i0_quadrature(rho, l, 1.0, ORACLE_TOL)?;
                let half = i0_closed_half(beta_of_rho(rho, 0.5)?, l)? - i0_quadrature(rho, l, 0.5, ORACLE_TOL)?;
                Ok(one.abs().max(half.abs()))
            })());
        }
    }
    worst(out)
}

fn family_cases() -> impl Iterator<Item = (f64, u32, f64)> {
    KAPPAS
        .into_iter()
        .flat_map(|kappa| (0..3).flat_map(move |l| [0.5, 1.0, 10.0].into_iter().map(move |lambda| (kappa, l, lambda))))
}

/// `max |-V' + 2 W V + 1|` on `[0.1, 10]`.
pub fn measure_riccati_general() -> Result<f64> {
    let mut out = Vec::new();
    for (kappa, l, lambda) in family_cases() {
        let pair = SuperpotentialPair::new(IsoFamily::nodeless(kappa, l, lambda)?);
        out.extend(linspace(0.1, 10.0, 100).into_iter().map(|rho| pair.riccati_residual(rho)));
    }
    worst(out)
}

/// `max |(W_gen' + W_gen^2) - (W' + W^2)|` on `[0.1, 10]`.
pub fn measure_shared_partner() -> Result<f64> {
    let mut out = Vec::new();
    for (kappa, l, lambda) in family_cases() {
        let pair = SuperpotentialPair::new(IsoFamily::nodeless(kappa, l, lambda)?);
        for rho in linspace(0.1, 10.0, 25) {
            out.push((|| {
                let g = |r: f64| pair.general(r).unwrap_or(f64::NAN);
                let slope = derivative(g, rho, Order::First, 0.01 * rho)?;
                Ok(slope + g(rho).powi(2) - pair.fermionic_partner(rho)?)
            })());
        }
    }
    worst(out)
}

pub fn measure_family_zero_modes() -> Result<f64> {
    let grid = zero_mode_grid();
    let mut out = Vec::new();
    for &kappa in &KAPPAS {
        for l in 0..3 {
            for &lambda in &[1.0, 10.0] {
                out.push((|| {
                    let fam = IsoFamily::nodeless(kappa, l, lambda)?;
                    let u = numerov_zero_energy(
                        |r| fam.u_bosonic(r).unwrap_or(f64::NAN),
                        &grid,
                        regular_seed(grid[0], l, kappa)?,
                        regular_seed(grid[1], l, kappa)?,
                    )?;
                    Ok(scale_and_relative_error(&u, |r| fam.radial_factor_bosonic(r).unwrap_or(f64::NAN), 0.1, 5.0).1)
                })());
            }
        }
    }
    worst(out)
}

pub fn measure_recovery_violations() -> Result<f64> {
    let grid = linspace(0.1, 5.0, 200);
    let mut flags = Vec::new();
    for &kappa in &KAPPAS {
        for l in 0..3 {
            let mut last = f64::INFINITY;
            for &lambda in &[1.0, 10.0, 100.0, 1000.0] {
                let fam = IsoFamily::nodeless(kappa, l, lambda)?;
                let gap = worst(grid.iter().map(|&r| Ok(fam.u_bosonic(r)? - u_minus(r, l, kappa)?)))?;
                flags.push(gap >= last);
                last = gap;
            }
        }
    }
    Ok(count(flags))
}

pub fn measure_centrifugal_subtraction() -> Result<f64> {
    let mut out = Vec::new();
    for l in 0..4 {
        for &lambda in &[0.5, 1.0, 10.0] {
            let fam = IsoFamily::nodeless(1.0, l, lambda)?;
            for rho in logspace(0.05, 7.0, 20) {
                out.push((|| {
                    let lhs = v_family_fisheye(rho, l, lambda)? + f64::from(l * (l + 1)) / (rho * rho);
                    let rhs = u_bosonic_family(rho, &fam)?;
                    Ok((lhs - rhs) / rhs.abs().max(1.0))
                })());
            }
        }
    }
    worst(out)
}

fn figure_grid() -> Vec<f64> {
    linspace(FIGURE_RHO_MIN, FIGURE_RHO_MAX, FIGURE_SAMPLES)
}

/// `max |ratio|` over the figure grid on `(0, 3]`.
pub fn ratio_peak(l: u32, lambda: f64) -> Result<f64> {
    worst(figure_grid().into_iter().map(|r| relative_ratio(r, l, lambda)))
}

/// Largest peak `|ratio|` over `(l, lambda)` in `{1, 2} x {1, 10}`.
pub fn measure_several_percent() -> Result<f64> {
    let mut peaks = Vec::new();
    for l in 1..=2 {
        for &lambda in &[1.0, 10.0] {
            let p = ratio_peak(l, lambda)?;
            log::debug!("ratio peak l={l} lambda={lambda}: {p}");
            peaks.push(Ok(p));
        }
    }
    worst(peaks)
}

/// Largest `peak(l=2) / peak(l=1)` over `lambda` in `{1, 10}`; below one when
/// the deformation falls with `l`.
pub fn measure_damping_in_l() -> Result<f64> {
    worst([1.0, 10.0].map(|lambda| Ok(ratio_peak(2, lambda)? / ratio_peak(1, lambda)?)))
}

/// Distance of the argmax of `f_bos^2` from `[0.5, 1.5]`, worst over
/// `l` in `0..3`, `lambda` in `{1, 10}`; zero when every peak is inside.
pub fn measure_surface_peaking() -> Result<f64> {
    let grid = linspace(0.01, 3.0, 3000);
    let mut out = Vec::new();
    for l in 0..3 {
        for &lambda in &[1.0, 10.0] {
            let fam = IsoFamily::nodeless(1.0, l, lambda)?;
            let mut best = (0.0, f64::NEG_INFINITY);
            for &r in &grid {
                let v = fam.radial_factor_bosonic(r)?;
                if v > best.1 {
                    best = (r, v);
                }
            }
            log::debug!("f_bos peak l={l} lambda={lambda}: {}", best.0);
            out.push(Ok((0.5 - best.0).max(best.0 - 1.5).max(0.0)));
        }
    }
    worst(out)
}

/// Largest inflection point over `l` in `0..3`, `lambda` in `{1, 10}`;
/// infinite when one is missing.
pub fn measure_inflections() -> Result<f64> {
    let grid = inflection_grid();
    let mut out = Vec::new();
    for l in 0..3 {
        for &lambda in &[1.0, 10.0] {
            out.push(Ok(find_inflection(l, lambda, &grid)?.unwrap_or(f64::INFINITY)));
        }
    }
    worst(out)
}

/// Offset of the `lambda = 1e9`, `l = 0` inflection from `1/sqrt(3)`, in grid steps.
pub fn measure_maxwell_inflection() -> Result<f64> {
    let grid = inflection_grid();
    let h = grid[1] - grid[0];
    let star = find_inflection(0, 1e9, &grid)?.unwrap_or(f64::INFINITY);
    Ok((star - 1.0 / 3f64.sqrt()).abs() / h)
}

/// Residual of the transplanted nodeless state in the Langer equation on
/// `[-4, 4]`, normalised to `phi(0) = 1`.
pub fn measure_langer_residual(ns: &[u32]) -> Result<f64> {
    let mut out = Vec::new();
    for &n in ns {
        if n == 0 {
            return Err(Error::Domain("Langer check needs n >= 1".into()));
        }
        let l = n - 1;
        let scale = transplanted_state(0.0, l)?;
        let phi = |y: f64| transplanted_state(y, l).unwrap_or(f64::NAN) / scale;
        for x in linspace(-4.0, 4.0, 81) {
            out.push(derivative(phi, x, Order::Second, 0.1).map(|d2| -d2 + langer_potential(x, n) * phi(x)));
        }
    }
    worst(out)
}

fn spectrum_gap(found: &[f64], expected: &[f64]) -> f64 {
    if found.len() != expected.len() {
        return f64::INFINITY;
    }
    found.iter().zip(expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

/// Worst level error for `n_b` in `1..=4`; infinite on a wrong level count.
pub fn measure_rm_ladder() -> Result<f64> {
    worst((1..=4).map(|n| {
        let p = RmProblem::fisheye(n, None)?;
        Ok(spectrum_gap(&p.solve()?, &p.spectrum()))
    }))
}

pub fn measure_partner_deficit() -> Result<f64> {
    let mut flags = Vec::new();
    for n in 1..=4u32 {
        flags.push(RmProblem::fisheye(n, None)?.partner_state_count()? != n as usize - 1);
    }
    Ok(count(flags))
}

pub fn measure_family_spectrum() -> Result<f64> {
    worst([0.1, 1.0, 10.0].map(|l0| Ok(spectrum_gap(&RmProblem::fisheye(1, Some(l0))?.solve()?, &[-1.0]))))
}

/// Error of the deepest aufbau level against `-N^2/4` for `N` in `{1, 3}`.
pub fn measure_aufbau_ground() -> Result<f64> {
    worst((0..2).map(|l| {
        let p = RmProblem::aufbau(l);
        let found = p.solve()?;
        if found.len() != p.spectrum().len() {
            return Ok(f64::INFINITY);
        }
        let n = f64::from(2 * l + 1);
        Ok(found[0] + n * n / 4.0)
    }))
}

/// Offset of the sampled minimum of the translated well from the formula, in
/// grid steps of the shooting grid.
pub fn measure_translation_law() -> Result<f64> {
    let grid = linspace(-12.0, 12.0, 4001);
    let h = grid[1] - grid[0];
    let mut out = Vec::new();
    for &l0 in &[0.1, 1.0, 10.0] {
        let mut best = (0.0, f64::INFINITY);
        for &x in &grid {
            let v = rm_family_single(x, l0)?;
            if v < best.1 {
                best = (x, v);
            }
        }
        out.push(Ok((best.0 - rm_family_argmin(l0)?) / h));
    }
    worst(out)
}

/// `|rescale_radius(1, 1) - 1/sqrt(2)|` together with the `lambda0 = inf` limit.
pub fn measure_rescaling() -> Result<f64> {
    let finite = (rescale_radius(1.0, 1.0)? - std::f64::consts::FRAC_1_SQRT_2).abs();
    let limit = (rescale_radius(1.0, f64::INFINITY)? - 1.0).abs();
    Ok(finite.max(limit))
}

type Integrand = fn(f64) -> f64;

fn quadrature_cases() -> [(Integrand, f64, f64); 3] {
    [
        (|x| x * x, 1.0, 1.0 / 3.0),
        (|r| r * r / (1.0 + r * r), 1.0, 1.0 - std::f64::consts::FRAC_PI_4),
        (|x| x.sin(), 0.0, 0.0),
    ]
}

pub fn measure_quadrature_examples() -> Result<f64> {
    worst(quadrature_cases().map(|(f, b, exact)| Ok(integrate_adaptive(f, 0.0, b, ORACLE_TOL)?.value - exact)))
}

pub fn measure_quadrature_refinement() -> Result<f64> {
    let mut flags = Vec::new();
    for (f, b, exact) in quadrature_cases() {
        let mut last = f64::INFINITY;
        for tol in [1e-6, 1e-8, 1e-10, 1e-12] {
            let err = (integrate_adaptive(f, 0.0, b, tol)?.value - exact).abs();
            flags.push(err > last);
            last = err;
        }
    }
    Ok(count(flags))
}

pub fn measure_derivative_examples() -> Result<f64> {
    let sine = derivative(f64::sin, 0.0, Order::First, 0.1)? - 1.0;
    let cubic = derivative(|x| x * x * x, 2.0, Order::Second, 0.1)? - 12.0;
    let radial =
        derivative(|r| radial_factor_f(r, 0, 1.0).unwrap_or(f64::NAN), 1.0, Order::First, 0.02)? - radial_factor_derivative(1.0, 0, 1.0)?;
    worst([Ok(sine), Ok(cubic), Ok(radial)])
}

pub fn measure_numerov_linear() -> Result<f64> {
    let grid = linspace(0.0, 5.0, 501);
    let u = numerov_zero_energy(|_| 0.0, &grid, 0.0, grid[1])?;
    worst(u.iter().map(|(r, v)| Ok(v - r)))
}

/// Observed order `log2(e(n) / e(2n-1))` of the `kappa = 1`, `l = 0` zero mode,
/// the smaller of the `n = 201` and `n = 401` doublings.
pub fn measure_numerov_order() -> Result<f64> {
    let f = |r: f64| r / (1.0 + r * r).sqrt();
    let residual = |n: usize| -> Result<f64> {
        let grid = linspace(0.0, 5.0, n);
        let u = numerov_zero_energy(|r| -3.0 / (1.0 + r * r).powi(2), &grid, 0.0, f(grid[1]))?;
        worst(u.iter().filter(|&(r, _)| r >= 0.1).map(|(r, v)| Ok((v - f(r)) / f(r))))
    };
    let mut order = f64::INFINITY;
    for n in [201, 401] {
        order = order.min((residual(n)? / residual(2 * n - 1)?).log2());
    }
    Ok(order)
}

pub fn measure_shooting_examples() -> Result<f64> {
    let sech2 = |x: f64| 1.0 / x.cosh().powi(2);
    let single = shooting_bound_states(|x| -2.0 * sech2(x), &ShootingConfig::full_line(-3.0, -1e-6), 10)?;
    let double = shooting_bound_states(|x| -6.0 * sech2(x), &ShootingConfig::full_line(-7.0, -1e-6), 10)?;
    let wide = ShootingConfig {
        x_min: -30.0,
        x_max: 30.0,
        points: 10001,
        ..ShootingConfig::full_line(-1.5, -1e-6)
    };
    let aufbau = shooting_bound_states(|x| -0.5 * sech2(0.5 * x), &wide, 10)?;
    Ok(spectrum_gap(&single, &[-1.0])
        .max(spectrum_gap(&double, &[-4.0, -1.0]))
        .max(spectrum_gap(&aufbau, &[-0.25])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::MODULES.iter().chain(&[Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn relations() {
        assert!(Relation::AtMost.holds(1.0, 1.0));
        assert!(!Relation::Below.holds(1.0, 1.0));
        assert!(Relation::AtLeast.holds(4.0, 3.95));
        let failed = Check::new(Suite::Numerics, "x", Err(Error::Domain("boom".into())), Relation::AtMost, 1.0);
        assert!(!failed.passed && failed.measured.is_nan());
        assert!(failed.to_string().starts_with("FAIL numerics/x"));
    }

    #[test]
    fn rejects_bad_scale() {
        assert!(run(Suite::Specfun, 0.0).is_err());
        assert!(run(Suite::Specfun, f64::NAN).is_err());
    }

    #[test]
    fn module_suites_report_every_check() {
        for (suite, n) in [(Suite::Specfun, 3), (Suite::DoCore, 4), (Suite::Numerics, 6)] {
            let report = run(suite, 1.0).unwrap();
            assert_eq!(report.checks.len(), n);
            assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn fisheye_suite_reports_the_known_failures() {
        let report = run(Suite::Fisheye, 1.0).unwrap();
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["several_percent_peak", "surface_peaking_distance"]);
        let peak = &report.checks[1];
        assert!((peak.measured - 0.2219).abs() < 1e-3, "{}", peak.measured);
    }

    #[test]
    fn scale_loosens_residual_checks_only() {
        let strict = run(Suite::Specfun, 1.0).unwrap();
        let loose = run(Suite::Specfun, 10.0).unwrap();
        assert_eq!(loose.checks[0].tolerance, 10.0 * strict.checks[0].tolerance);
        assert_eq!(loose.checks[2].tolerance, 0.0);
    }
}
