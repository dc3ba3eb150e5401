//! Definite trigonometric integrals with integer exponents.

use crate::model::Scalar;
use crate::specfun::binomial_i128;

/// `int_0^beta sin^(2a) t cos^(2b) t dt`, from the exact Fourier expansion
/// of the integrand.
///
/// With `s = e^(it)`, `sin^(2a) cos^(2b) = (-1)^a 4^-(a+b) sum_m c_m s^(2m)`
/// where `c_m = sum_j (-1)^j C(2a, j) C(2b, a+b-m-j)` and `c_m = c_-m`.
pub fn sin_cos_even_integral<T>(a: u32, b: u32, beta: T) -> T
where
    T: Scalar,
{
    let (a, b) = (i64::from(a), i64::from(b));
    let coefficient = |m: i64| -> f64 {
        (0..=2 * a)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binomial_i128(2 * a, j) * binomial_i128(2 * b, a + b - m - j)
            })
            .sum::<i128>() as f64
    };
    let mut total = beta * T::lift(coefficient(0));
    for m in 1..=a + b {
        let c = coefficient(m);
        if c != 0.0 {
            let mf = m as f64;
            total = total + T::lift(c / mf) * (beta * T::lift(2.0 * mf)).sin();
        }
    }
    let sign = if a % 2 == 0 { 1.0 } else { -1.0 };
    total * T::lift(sign / 4f64.powi((a + b) as i32))
}

/// Antiderivative in `c = cos t` of `sin^(2m+1) t cos^p t`:
/// `-sum_k (-1)^k C(m, k) c^e / e` with `e = 2k + p + 1`, and `ln c` in place
/// of `c^e / e` when `e = 0`.
pub fn odd_sine_antiderivative<T>(m: u32, p: i32, c: T) -> T
where
    T: Scalar,
{
    let mut total = T::lift(0.0);
    for k in 0..=m {
        let weight = binomial_i128(i64::from(m), i64::from(k)) as f64;
        let weight = if k % 2 == 0 { -weight } else { weight };
        let e = 2 * k as i32 + p + 1;
        let term = if e == 0 { c.ln() } else { c.powi(e) / T::lift(f64::from(e)) };
        total = total + T::lift(weight) * term;
    }
    total
}

/// `int_0^beta sin^(2m+1) t cos^p t dt`.
pub fn odd_sine_integral<T>(m: u32, p: i32, cos_beta: T) -> T
where
    T: Scalar,
{
    odd_sine_antiderivative(m, p, cos_beta) - odd_sine_antiderivative(m, p, T::lift(1.0))
}

/// `int_0^t s^(a-1) (1-s)^(b-1) ds` for integer `a, b >= 1`, written as
/// `B(a, b)` times a binomial tail. Every term of the tail is positive, so
/// the sum keeps full relative precision; past the mean the complementary
/// tail is subtracted from one instead.
pub fn integer_incomplete_beta<T>(a: u32, b: u32, t: T, one_minus_t: T) -> T
where
    T: Scalar,
{
    let n = i64::from(a + b - 1);
    let a = i64::from(a);
    let beta_ab = 1.0 / (n as f64 * binomial_i128(n - 1, a - 1) as f64);
    let term = |j: i64| T::lift(binomial_i128(n, j) as f64) * t.powi(j as i32) * one_minus_t.powi((n - j) as i32);
    let fraction = if (n as f64) * t.re() < a as f64 {
        (a..=n).fold(T::lift(0.0), |acc, j| acc + term(j))
    } else {
        T::lift(1.0) - (0..a).fold(T::lift(0.0), |acc, j| acc + term(j))
    };
    T::lift(beta_ab) * fraction
}

/// `int_0^beta sin^(2l+2) t / cos^2 t dt` via the classical reduction
/// `sin^(2l+1)/cos - (2l+1) int sin^(2l)`.
pub fn integral_sin_pow_over_cos_sq(beta: f64, l: u32) -> f64 {
    let lf = f64::from(l);
    let li = i64::from(l);
    let quarter = 4f64.powi(-(l as i32));
    let central = binomial_i128(2 * li, li) as f64;
    let mut sum = 0.0;
    for k in 0..li {
        let freq = (2 * li - 2 * k) as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binomial_i128(2 * li, k) as f64 * (freq * beta).sin() / freq;
    }
    let parity = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
    beta.sin().powi(2 * l as i32 + 1) / beta.cos()
        - (2.0 * lf + 1.0) * quarter * central * beta
        - 2.0 * (2.0 * lf + 1.0) * parity * quarter * sum
}

/// `int_0^beta 2 sin^(4l+5) t / cos^4 t dt` as the difference of the
/// antiderivative `2 sum_k (-1)^(k+1) C(2l+2, k) cos^(2k-3) / (2k-3)`.
pub fn integral_sin_pow_over_cos4(beta: f64, l: u32) -> f64 {
    let antiderivative = |c: f64| -> f64 {
        let m = 2 * i64::from(l) + 2;
        (0..=m)
            .map(|k| {
                let e = 2 * k as i32 - 3;
                let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
                2.0 * sign * binomial_i128(m, k) as f64 * c.powi(e) / f64::from(e)
            })
            .sum()
    };
    antiderivative(beta.cos()) - antiderivative(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate_adaptive;
    use std::f64::consts::FRAC_PI_4;

    fn quad(f: impl Fn(f64) -> f64, beta: f64) -> f64 {
        integrate_adaptive(f, 0.0, beta, 1e-13).unwrap().value
    }

    #[test]
    fn even_powers_match_quadrature() {
        for a in 0..6 {
            for b in 0..6 {
                for &beta in &[0.1, FRAC_PI_4, 1.3] {
                    let exact = quad(|t: f64| t.sin().powi(2 * a as i32) * t.cos().powi(2 * b as i32), beta);
                    let closed = sin_cos_even_integral(a, b, beta);
                    assert!((closed - exact).abs() < 1e-13, "a={a} b={b} beta={beta}: {closed} vs {exact}");
                }
            }
        }
        assert_eq!(sin_cos_even_integral(0, 0, 0.7), 0.7);
    }

    #[test]
    fn odd_sine_matches_quadrature() {
        for m in 0..5 {
            for p in -3..4 {
                let beta = 1.1f64;
                let exact = quad(|t: f64| t.sin().powi(2 * m as i32 + 1) * t.cos().powi(p), beta);
                let closed = odd_sine_integral(m, p, beta.cos());
                assert!((closed - exact).abs() < 1e-12, "m={m} p={p}: {closed} vs {exact}");
            }
        }
    }

    #[test]
    fn incomplete_beta_matches_quadrature() {
        for a in 1..8 {
            for b in 1..8 {
                for &t in &[1e-3, 0.2, 0.5, 0.9, 0.999] {
                    let exact = integrate_adaptive(|s: f64| s.powi(a as i32 - 1) * (1.0 - s).powi(b as i32 - 1), 0.0, t, 1e-15)
                        .unwrap()
                        .value;
                    let closed = integer_incomplete_beta(a, b, t, 1.0 - t);
                    assert!((closed - exact).abs() <= 1e-13 * exact, "a={a} b={b} t={t}: {closed} vs {exact}");
                }
            }
        }
    }

    #[test]
    fn reduction_formula_matches_quadrature() {
        for l in 0..5 {
            for &beta in &[0.3, 1.0, 1.4] {
                let exact = quad(|t: f64| t.sin().powi(2 * l as i32 + 2) / t.cos().powi(2), beta);
                let closed = integral_sin_pow_over_cos_sq(beta, l);
                assert!((closed - exact).abs() < 1e-11 * exact.max(1.0), "l={l}: {closed} vs {exact}");
            }
            assert_eq!(integral_sin_pow_over_cos_sq(0.0, l), 0.0);
        }
    }

    #[test]
    fn cos4_form_matches_quadrature() {
        for l in 0..3 {
            let beta = 1.2;
            let exact = quad(|t: f64| 2.0 * t.sin().powi(4 * l as i32 + 5) / t.cos().powi(4), beta);
            let closed = integral_sin_pow_over_cos4(beta, l);
            assert!((closed - exact).abs() < 1e-10 * exact.max(1.0), "l={l}: {closed} vs {exact}");
            assert!(integral_sin_pow_over_cos4(0.0, l).abs() < 1e-12);
        }
    }
}
