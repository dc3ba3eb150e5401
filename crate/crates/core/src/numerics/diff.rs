//! Numerical differentiation oracles.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

const MAX_LEVELS: usize = 10;

/// Derivative order supported by [`derivative`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    First,
    Second,
}

fn central<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64, order: Order, fx: f64) -> f64 {
    match order {
        Order::First => (f(x + h) - f(x - h)) / (2.0 * h),
        Order::Second => (f(x + h) - 2.0 * fx + f(x - h)) / (h * h),
    }
}

/// Central-difference derivative of `f` at `x` with Richardson extrapolation
/// over successively halved steps starting from `h0`.
///
/// Both stencils have error expansions in even powers of `h`, so each tableau
/// column removes one more power of `h^2`. Iteration stops once the error
/// estimate starts to grow (round-off takes over).
pub fn derivative<F>(f: F, x: f64, order: Order, h0: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let floor = 1e-10 * x.abs().max(1.0);
    if !(h0 >= floor) {
        return Err(Error::StepUnderflow { step: h0, x });
    }
    let fx = f(x);
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(MAX_LEVELS);
    let mut best = central(&f, x, h0, order, fx);
    let mut best_err = f64::INFINITY;
    let mut h = h0;

    table.push(vec![best]);
    for i in 1..MAX_LEVELS {
        h *= 0.5;
        if h < floor {
            break;
        }
        let mut row = Vec::with_capacity(i + 1);
        row.push(central(&f, x, h, order, fx));
        let mut factor = 1.0;
        for j in 1..=i {
            factor *= 4.0;
            let prev = row[j - 1];
            let extrapolated = prev + (prev - table[i - 1][j - 1]) / (factor - 1.0);
            let err = (extrapolated - prev).abs().max((extrapolated - table[i - 1][j - 1]).abs());
            if err <= best_err {
                best_err = err;
                best = extrapolated;
            }
            row.push(extrapolated);
        }
        let diag_change = (row[i] - table[i - 1][i - 1]).abs();
        table.push(row);
        if diag_change >= 2.0 * best_err {
            break;
        }
    }
    if !best.is_finite() {
        return domain(format!("derivative at {x} is not finite"));
    }
    Ok(best)
}

/// First derivative via a complex step: `Im f(x + i h) / h`.
///
/// There is no subtractive cancellation, so for a real-analytic `f` the result
/// is accurate to round-off in `f` itself.
pub fn complex_step_derivative<F>(f: F, x: f64) -> f64
where
    F: Fn(Complex64) -> Complex64,
{
    let h = 1e-30 * x.abs().max(1.0);
    f(Complex64::new(x, h)).im / h
}
