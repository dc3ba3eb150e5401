//! The `kappa = 1` optical application: Maxwell fish-eye potentials, their
//! isospectral deformations, and the corresponding refractive indices.
//!
//! The family potential without the centrifugal term is
//!
//! ```text
//! V1 = -(2l+1)(2l+3)/(1+rho^2)^2 - 4 f f'/(I0 + lambda) + 2 f^4/(I0 + lambda)^2
//! ```
//!
//! Indices are normalized by `l + 1/2`, so the Maxwell profile is
//! `n_M = sqrt((2l+1)(2l+3)) / ((l + 1/2)(1 + rho^2))` with `n_M(0) -> 2` as
//! `l` grows. To first order in the deformation `n_iso / n_M = 1 + V_lambda / (2 V_M)`
//! with `V_M` and `V_lambda` the negatives of the two parts of `V1`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::isospectral::IsoFamily;
use crate::model::check_rho;
use crate::profile::{check_grid, linspace, uniform_step};

/// Default figure grid: 300 points on `[0.01, 3]`.
pub const FIGURE_RHO_MIN: f64 = 0.01;
pub const FIGURE_RHO_MAX: f64 = 3.0;
pub const FIGURE_SAMPLES: usize = 300;

/// Minimum grid size accepted by [`find_inflection`].
pub const INFLECTION_MIN_POINTS: usize = 100;

const HYSTERESIS: f64 = 1e-12;

/// CSV header of [`FigureTable::to_csv`].
pub const CSV_HEADER: &str = "rho,n_maxwell,n_iso,ratio_minus_1,f_bos_sq";

/// How the deformed index is obtained from the family potential.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexMode {
    /// `n_M (1 + ratio)`, linear in the deformation.
    #[default]
    FirstOrder,
    /// `sqrt(-V1) / (l + 1/2)`.
    Exact,
}

fn maxwell_strength(l: u32) -> f64 {
    let lf = f64::from(l);
    (2.0 * lf + 1.0) * (2.0 * lf + 3.0)
}

fn family(l: u32, lambda: f64) -> Result<IsoFamily> {
    IsoFamily::nodeless(1.0, l, lambda)
}

/// `V_M = (2l+1)(2l+3)/(1+rho^2)^2`, the depth of the Maxwell term.
fn maxwell_depth(rho: f64, l: u32) -> f64 {
    let s = 1.0 + rho * rho;
    maxwell_strength(l) / (s * s)
}

/// Family member of the fish-eye potentials, without the centrifugal term.
pub fn v_family_fisheye(rho: f64, l: u32, lambda: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(-maxwell_depth(rho, l) + family(l, lambda)?.family_correction(rho)?)
}

/// Maxwell index `sqrt((2l+1)(2l+3)) / ((l + 1/2)(1 + rho^2))`.
pub fn index_maxwell(rho: f64, l: u32) -> Result<f64> {
    if !(rho >= 0.0 && rho.is_finite()) {
        return domain(format!("rho must be finite and non-negative, got {rho}"));
    }
    Ok(maxwell_strength(l).sqrt() / ((f64::from(l) + 0.5) * (1.0 + rho * rho)))
}

/// `V_lambda / (2 V_M)`; negative where the deformation makes the well shallower.
pub fn relative_ratio(rho: f64, l: u32, lambda: f64) -> Result<f64> {
    check_rho(rho)?;
    let v_lambda = -family(l, lambda)?.family_correction(rho)?;
    Ok(0.5 * v_lambda / maxwell_depth(rho, l))
}

/// Deformed index in the chosen mode. The exact mode fails where the family
/// potential is not attractive.
pub fn index_iso(rho: f64, l: u32, lambda: f64, mode: IndexMode) -> Result<f64> {
    match mode {
        IndexMode::FirstOrder => Ok(index_maxwell(rho, l)? * (1.0 + relative_ratio(rho, l, lambda)?)),
        IndexMode::Exact => {
            let v1 = v_family_fisheye(rho, l, lambda)?;
            if v1 >= 0.0 {
                return domain(format!("family potential is not attractive at rho = {rho} (V1 = {v1:e})"));
            }
            Ok((-v1).sqrt() / (f64::from(l) + 0.5))
        }
    }
}

/// Default grid for inflection searches: 1000 points on `[1e-3, 1]`.
pub fn inflection_grid() -> Vec<f64> {
    linspace(1e-3, 1.0, 1000)
}

/// Smallest `rho*` in `(0, 1]` where the second derivative of the first-order
/// deformed index changes sign, from a five-point stencil on a uniform grid.
/// `None` when the curvature keeps its sign.
pub fn find_inflection(l: u32, lambda: f64, grid: &[f64]) -> Result<Option<f64>> {
    if grid.len() < INFLECTION_MIN_POINTS {
        return Err(Error::GridTooCoarse {
            got: grid.len(),
            need: INFLECTION_MIN_POINTS,
        });
    }
    check_grid(grid)?;
    let h = uniform_step(grid)?;
    if !(grid[0] > 0.0 && grid[grid.len() - 1] >= 1.0 - 1e-12) {
        return Err(Error::InvalidGrid(format!(
            "inflection grid must cover (0, 1], got [{}, {}]",
            grid[0],
            grid[grid.len() - 1]
        )));
    }
    let n: Vec<f64> = grid
        .iter()
        .map(|&r| index_iso(r, l, lambda, IndexMode::FirstOrder))
        .collect::<Result<_>>()?;

    let mut last: Option<(f64, f64)> = None;
    for i in 2..grid.len() - 2 {
        if grid[i] > 1.0 {
            break;
        }
        let d2 = (-n[i - 2] + 16.0 * n[i - 1] - 30.0 * n[i] + 16.0 * n[i + 1] - n[i + 2]) / (12.0 * h * h);
        if d2.abs() <= HYSTERESIS {
            continue;
        }
        if let Some((r0, c0)) = last {
            if c0.signum() != d2.signum() {
                let root = r0 + (grid[i] - r0) * c0 / (c0 - d2);
                return Ok((root <= 1.0).then_some(root));
            }
        }
        last = Some((grid[i], d2));
    }
    Ok(None)
}

/// The four curves behind the figures, sampled on one grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureTable {
    pub l: u32,
    pub lambda: f64,
    pub mode: IndexMode,
    pub grid: Vec<f64>,
    pub n_maxwell: Vec<f64>,
    pub n_iso: Vec<f64>,
    pub ratio_minus_one: Vec<f64>,
    pub f_bos_squared: Vec<f64>,
}

/// Assembles the figure table. Fails if either index is not positive on the
/// grid.
pub fn figure_table(l: u32, lambda: f64, grid: &[f64], mode: IndexMode) -> Result<FigureTable> {
    check_grid(grid)?;
    let fam = family(l, lambda)?;
    let mut table = FigureTable {
        l,
        lambda,
        mode,
        grid: grid.to_vec(),
        n_maxwell: Vec::with_capacity(grid.len()),
        n_iso: Vec::with_capacity(grid.len()),
        ratio_minus_one: Vec::with_capacity(grid.len()),
        f_bos_squared: Vec::with_capacity(grid.len()),
    };
    for &rho in grid {
        let n_m = index_maxwell(rho, l)?;
        let ratio = relative_ratio(rho, l, lambda)?;
        let n_iso = index_iso(rho, l, lambda, mode)?;
        if !(n_iso > 0.0) {
            return domain(format!(
                "deformed index is not positive at rho = {rho} (l = {l}, lambda = {lambda}); \
                 the deformation exceeds the Maxwell depth there"
            ));
        }
        table.n_maxwell.push(n_m);
        table.n_iso.push(n_iso);
        table.ratio_minus_one.push(ratio);
        table.f_bos_squared.push(fam.radial_factor_bosonic(rho)?.powi(2));
    }
    Ok(table)
}

/// [`figure_table`] on the default grid.
pub fn default_figure_table(l: u32, lambda: f64, mode: IndexMode) -> Result<FigureTable> {
    figure_table(l, lambda, &linspace(FIGURE_RHO_MIN, FIGURE_RHO_MAX, FIGURE_SAMPLES), mode)
}

impl FigureTable {
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Largest `|ratio - 1|` on the grid.
    pub fn peak_abs_ratio(&self) -> f64 {
        self.ratio_minus_one.iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    /// Grid point where `f_bos^2` is largest.
    pub fn f_bos_peak(&self) -> f64 {
        let (i, _) = self
            .f_bos_squared
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, &v)| if v > bv { (i, v) } else { (bi, bv) });
        self.grid[i]
    }

    /// CSV with [`CSV_HEADER`] and 17 significant digits per value.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(96 * (self.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for i in 0..self.len() {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
                self.grid[i], self.n_maxwell[i], self.n_iso[i], self.ratio_minus_one[i], self.f_bos_squared[i]
            ));
        }
        out
    }
}
