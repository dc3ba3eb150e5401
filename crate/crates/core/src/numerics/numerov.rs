//! Numerov integration of `u'' = g(x) u`.

use crate::error::{Error, Result};
use crate::profile::{uniform_step, Profile};

/// Magnitude beyond which a march is declared divergent.
pub const OVERFLOW_LIMIT: f64 = 1e300;

/// Marches `u'' = g u` over equally spaced samples `g[i]` from the seeds
/// `u[0] = u0`, `u[1] = u1`. Stops with `Err(index)` at the first sample whose
/// magnitude exceeds [`OVERFLOW_LIMIT`].
pub(crate) fn march(g: &[f64], h: f64, u0: f64, u1: f64) -> std::result::Result<Vec<f64>, usize> {
    let h2 = h * h / 12.0;
    let mut u = Vec::with_capacity(g.len());
    u.push(u0);
    if g.len() > 1 {
        u.push(u1);
    }
    for i in 1..g.len().saturating_sub(1) {
        let next = (2.0 * (1.0 + 5.0 * h2 * g[i]) * u[i] - (1.0 - h2 * g[i - 1]) * u[i - 1]) / (1.0 - h2 * g[i + 1]);
        if !(next.abs() <= OVERFLOW_LIMIT) {
            return Err(i + 1);
        }
        u.push(next);
    }
    Ok(u)
}

/// Integrates the zero-energy equation `-u'' + U(x) u = 0` on a uniform grid
/// from the seed values at the first two grid points.
///
/// Local truncation error is `O(h^6)`, global `O(h^4)`.
pub fn numerov_zero_energy<U>(potential: U, grid: &[f64], u0: f64, u1: f64) -> Result<Profile>
where
    U: Fn(f64) -> f64,
{
    let h = uniform_step(grid)?;
    let g: Vec<f64> = grid.iter().map(|&x| potential(x)).collect();
    if let Some(i) = g.iter().position(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("potential is not finite at {}", grid[i])));
    }
    match march(&g, h, u0, u1) {
        Ok(u) => Profile::new(grid.to_vec(), u),
        Err(i) => Err(Error::Overflow { at: grid[i] }),
    }
}

/// Best single scale `s` minimising `sum (u - s f)^2` over points inside
/// `[lo, hi]`, and the largest pointwise relative deviation `|u/s - f| / |f|`
/// there.
pub fn scale_and_relative_error(solution: &Profile, reference: impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let window: Vec<(f64, f64, f64)> = solution
        .iter()
        .filter(|&(x, _)| x >= lo && x <= hi)
        .map(|(x, u)| (x, u, reference(x)))
        .collect();
    let num: f64 = window.iter().map(|&(_, u, f)| u * f).sum();
    let den: f64 = window.iter().map(|&(_, _, f)| f * f).sum();
    let scale = num / den;
    let worst = window.iter().map(|&(_, u, f)| ((u / scale - f) / f).abs()).fold(0.0, f64::max);
    (scale, worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::linspace;

    #[test]
    fn free_particle_is_linear() {
        let grid = linspace(0.0, 5.0, 501);
        let h = grid[1];
        let p = numerov_zero_energy(|_| 0.0, &grid, 0.0, h).unwrap();
        for (x, u) in p.iter() {
            assert!((u - x).abs() < 1e-12);
        }
    }

    #[test]
    fn exponential_growth() {
        // u'' = u with u = e^x
        let grid = linspace(0.0, 2.0, 2001);
        let h = grid[1];
        let p = numerov_zero_energy(|_| 1.0, &grid, 1.0, h.exp()).unwrap();
        let (_, err) = scale_and_relative_error(&p, f64::exp, 0.0, 2.0);
        assert!(err < 1e-9, "{err}");
    }

    #[test]
    fn overflow_is_reported() {
        let grid = linspace(0.0, 100.0, 1001);
        let r = numerov_zero_energy(|_| 100.0, &grid, 1.0, 2.0);
        assert!(matches!(r, Err(Error::Overflow { .. })));
    }

    #[test]
    fn needs_uniform_grid() {
        let r = numerov_zero_energy(|_| 0.0, &[0.0, 1.0, 3.0], 0.0, 1.0);
        assert!(r.is_err());
    }
}
