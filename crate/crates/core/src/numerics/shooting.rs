//! Bound states of `-u'' + V(x) u = E u` on a finite interval.
//!
//! Each level is first isolated by Sturm node counting on the Dirichlet
//! problem, then refined by two-sided Numerov integration with decaying
//! boundary seeds, matched through the discrete Wronskian at the midpoint.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::profile::linspace;

const RESCALE_AT: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShootingConfig {
    pub x_min: f64,
    pub x_max: f64,
    /// Number of grid points, odd so that the midpoint is a grid point.
    pub points: usize,
    pub e_lo: f64,
    pub e_hi: f64,
    pub tol: f64,
}

impl ShootingConfig {
    /// Full-line default: `x` in `[-12, 12]`, 4001 points, eigenvalues to `1e-8`.
    pub fn full_line(e_lo: f64, e_hi: f64) -> Self {
        Self {
            x_min: -12.0,
            x_max: 12.0,
            points: 4001,
            e_lo,
            e_hi,
            tol: 1e-8,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max) {
            return domain(format!("shooting domain [{}, {}] is empty", self.x_min, self.x_max));
        }
        if self.points < 3 || self.points.is_multiple_of(2) {
            return domain(format!("shooting needs an odd point count >= 3, got {}", self.points));
        }
        if !(self.e_lo < self.e_hi && self.e_hi < 0.0) {
            return domain(format!(
                "bound-state bracket must satisfy e_lo < e_hi < 0, got [{}, {}]",
                self.e_lo, self.e_hi
            ));
        }
        if !(self.tol > 0.0) {
            return domain("shooting tolerance must be positive");
        }
        Ok(())
    }
}

struct Shooter {
    h: f64,
    potential: Vec<f64>,
    tol: f64,
}

impl Shooter {
    fn g(&self, energy: f64) -> Vec<f64> {
        self.potential.iter().map(|v| v - energy).collect()
    }

    /// Number of interior zeros of the Dirichlet solution started at `x_min`.
    fn nodes(&self, energy: f64) -> usize {
        let u = march_renormalised(&self.g(energy), self.h, 0.0, self.h);
        let interior = &u[1..u.len() - 1];
        let mut count = 0;
        let mut last_sign = 0.0;
        for &v in interior {
            if v == 0.0 {
                continue;
            }
            let sign = v.signum();
            if last_sign != 0.0 && sign != last_sign {
                count += 1;
            }
            last_sign = sign;
        }
        count
    }

    /// Lowest energy in `[lo, hi]` at which the node count exceeds `k`.
    fn dirichlet_level(&self, k: usize, mut lo: f64, mut hi: f64) -> (f64, f64) {
        while hi - lo > self.tol {
            let mid = 0.5 * (lo + hi);
            if self.nodes(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo, hi)
    }

    /// Normalised discrete Wronskian of the left- and right-decaying
    /// solutions at the midpoint; changes sign at each eigenvalue.
    fn mismatch(&self, energy: f64) -> f64 {
        let g = self.g(energy);
        let n = g.len();
        let m = n / 2;

        let left_decay = (g[0].max(0.0)).sqrt();
        let right_decay = (g[n - 1].max(0.0)).sqrt();

        let left = march_renormalised(&g[..=m + 1], self.h, 1.0, (left_decay * self.h).exp());
        let mut g_rev: Vec<f64> = g[m..].to_vec();
        g_rev.reverse();
        let right_rev = march_renormalised(&g_rev, self.h, 1.0, (right_decay * self.h).exp());
        let right_m = right_rev[right_rev.len() - 1];
        let right_m1 = right_rev[right_rev.len() - 2];

        let (l0, l1) = (left[m], left[m + 1]);
        let ln = l0.hypot(l1);
        let rn = right_m.hypot(right_m1);
        (l0 * right_m1 - l1 * right_m) / (ln * rn)
    }
}

// Numerov march that rescales the whole history whenever it grows past
// `RESCALE_AT`; only ratios and signs are used downstream.
fn march_renormalised(g: &[f64], h: f64, u0: f64, u1: f64) -> Vec<f64> {
    let h2 = h * h / 12.0;
    let mut u = Vec::with_capacity(g.len());
    u.push(u0);
    u.push(u1);
    for i in 1..g.len() - 1 {
        let next = (2.0 * (1.0 + 5.0 * h2 * g[i]) * u[i] - (1.0 - h2 * g[i - 1]) * u[i - 1]) / (1.0 - h2 * g[i + 1]);
        u.push(next);
        if next.abs() > RESCALE_AT {
            u.iter_mut().for_each(|v| *v /= RESCALE_AT);
        }
    }
    u
}

fn shooter<V: Fn(f64) -> f64>(potential: V, config: &ShootingConfig) -> Result<Shooter> {
    config.validate()?;
    let grid = linspace(config.x_min, config.x_max, config.points);
    let values: Vec<f64> = grid.iter().map(|&x| potential(x)).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return domain("potential is not finite on the shooting grid");
    }
    Ok(Shooter {
        h: grid[1] - grid[0],
        potential: values,
        tol: config.tol,
    })
}

/// Number of bound states with energies in `[e_lo, e_hi]`, by Sturm node
/// counting.
pub fn bound_state_count<V>(potential: V, config: &ShootingConfig) -> Result<usize>
where
    V: Fn(f64) -> f64,
{
    let shooter = shooter(potential, config)?;
    Ok(shooter.nodes(config.e_hi).saturating_sub(shooter.nodes(config.e_lo)))
}

/// Finds the bound states of `-u'' + V u = E u` with energies in
/// `[e_lo, e_hi]`, ascending, at most `max_states` of them.
pub fn shooting_bound_states<V>(potential: V, config: &ShootingConfig, max_states: usize) -> Result<Vec<f64>>
where
    V: Fn(f64) -> f64,
{
    let shooter = shooter(potential, config)?;
    let n_lo = shooter.nodes(config.e_lo);
    let n_hi = shooter.nodes(config.e_hi);
    if n_hi <= n_lo {
        if max_states > 0 {
            return Err(Error::BracketExhausted {
                lo: config.e_lo,
                hi: config.e_hi,
            });
        }
        return Ok(Vec::new());
    }

    let count = (n_hi - n_lo).min(max_states);
    let mut levels = Vec::with_capacity(count);
    let mut floor = config.e_lo;
    for k in n_lo..n_lo + count {
        let (dir_lo, dir_hi) = shooter.dirichlet_level(k, floor, config.e_hi);
        let level = refine(&shooter, floor, dir_hi).unwrap_or(0.5 * (dir_lo + dir_hi));
        levels.push(level);
        floor = dir_hi;
    }
    Ok(levels)
}

// Bisection on the matching function over (lo, hi]; the Dirichlet level sits
// above the decaying-boundary level, so the root lies below `hi`.
fn refine(shooter: &Shooter, lo: f64, hi: f64) -> Option<f64> {
    let (mut a, mut b) = (lo, hi);
    let mut fa = shooter.mismatch(a);
    let fb = shooter.mismatch(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if (fa < 0.0) == (fb < 0.0) {
        return None;
    }
    while b - a > shooter.tol {
        let mid = 0.5 * (a + b);
        let fm = shooter.mismatch(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}
