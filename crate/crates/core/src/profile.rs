//! Sampled radial functions and grid construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A function sampled on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl Profile {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_grid(&grid)?;
        if grid.len() != values.len() {
            return Err(Error::InvalidGrid(format!(
                "grid has {} points but {} values were given",
                grid.len(),
                values.len()
            )));
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` on `grid`, propagating the first evaluation error.
    pub fn sample<F>(grid: &[f64], mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let values = grid.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Self::new(grid.to_vec(), values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.iter().copied().zip(self.values.iter().copied())
    }

    /// Multiplies every value by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.grid, self.values)
    }
}

/// Checks that `grid` is finite, strictly increasing and has at least two points.
pub fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::InvalidGrid(format!("need at least 2 points, got {}", grid.len())));
    }
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidGrid("grid contains non-finite values".into()));
    }
    if let Some(w) = grid.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!("grid not strictly increasing at {} -> {}", w[0], w[1])));
    }
    Ok(())
}

/// Uniform spacing of `grid`, or an error if the spacing varies by more than
/// `1e-9` relative.
pub fn uniform_step(grid: &[f64]) -> Result<f64> {
    check_grid(grid)?;
    let n = grid.len();
    let h = (grid[n - 1] - grid[0]) / (n - 1) as f64;
    let scale = grid[0].abs().max(grid[n - 1].abs()).max(h);
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-9 * scale {
            return Err(Error::InvalidGrid("grid spacing is not uniform".into()));
        }
    }
    Ok(h)
}

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let h = (b - a) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { b } else { a + h * i as f64 }).collect()
        }
    }
}

/// `n` logarithmically spaced points from `a` to `b` inclusive (`0 < a < b`).
pub fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    linspace(a.ln(), b.ln(), n)
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            if i == 0 {
                a
            } else if i + 1 == n {
                b
            } else {
                t.exp()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_profiles() {
        assert!(Profile::new(vec![0.0], vec![1.0]).is_err());
        assert!(Profile::new(vec![0.0, 0.0], vec![1.0, 2.0]).is_err());
        assert!(Profile::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(Profile::new(vec![0.0, f64::NAN], vec![1.0, 1.0]).is_err());
        assert!(Profile::new(vec![0.0, 1.0], vec![1.0, 2.0]).is_ok());
    }

    #[test]
    fn grids() {
        let g = linspace(0.01, 3.0, 300);
        assert_eq!(g.len(), 300);
        assert_eq!(g[0], 0.01);
        assert_eq!(g[299], 3.0);
        assert!((uniform_step(&g).unwrap() - 0.01).abs() < 1e-15);

        let l = logspace(0.01, 50.0, 50);
        assert_eq!(l[0], 0.01);
        assert_eq!(l[49], 50.0);
        assert!(check_grid(&l).is_ok());
        assert!(uniform_step(&l).is_err());
    }
}
