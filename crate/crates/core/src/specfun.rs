//! Gegenbauer polynomials and exact binomial coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Arguments of the Gegenbauer polynomial `C_p^q(xi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GegenbauerArgs {
    pub degree: i64,
    pub order: f64,
    pub xi: f64,
}

impl GegenbauerArgs {
    pub fn new(degree: i64, order: f64, xi: f64) -> Self {
        Self { degree, order, xi }
    }
}

/// Evaluates `C_p^q(xi)` by forward recurrence in the degree:
///
/// ```text
/// C_0 = 1,  C_1 = 2 q xi
/// (p + 1) C_{p+1} = 2 (p + q) xi C_p - (p + 2q - 1) C_{p-1}
/// ```
pub fn gegenbauer(args: GegenbauerArgs) -> Result<f64> {
    let GegenbauerArgs { degree, order, xi } = args;
    if degree < 0 {
        return domain(format!("gegenbauer degree must be non-negative, got {degree}"));
    }
    if !(xi.abs() <= 1.0) {
        return domain(format!("gegenbauer argument must satisfy |xi| <= 1, got {xi}"));
    }
    if !(order > -0.5) {
        return domain(format!("gegenbauer order must exceed -1/2, got {order}"));
    }

    let mut prev = 1.0;
    if degree == 0 {
        return Ok(prev);
    }
    let mut curr = 2.0 * order * xi;
    for p in 1..degree {
        let p = p as f64;
        let next = (2.0 * (p + order) * xi * curr - (p + 2.0 * order - 1.0) * prev) / (p + 1.0);
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Exact binomial coefficient `n choose k`, multiplicative form.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return domain(format!("binomial requires k <= n, got ({n}, {k})"));
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).or_else(|_| domain(format!("binomial({n}, {k}) overflows u64")))
}

/// Signed binomial as `i128`, zero outside `0 <= k <= n`. Used by the
/// closed-form coefficient sums.
pub(crate) fn binomial_i128(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * i128::from(n - i) / i128::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Explicit series `sum_k (-1)^k (q)_{p-k} / (k! (p-2k)!) (2 xi)^{p-2k}`.
    fn gegenbauer_series(p: i64, q: f64, xi: f64) -> f64 {
        let pochhammer = |a: f64, n: i64| (0..n).fold(1.0, |acc, i| acc * (a + i as f64));
        let factorial = |n: i64| (1..=n).fold(1.0, |acc, i| acc * i as f64);
        (0..=p / 2)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * pochhammer(q, p - k) / (factorial(k) * factorial(p - 2 * k)) * (2.0 * xi).powi((p - 2 * k) as i32)
            })
            .sum()
    }

    #[test]
    fn low_degrees() {
        assert_eq!(gegenbauer(GegenbauerArgs::new(0, 3.7, 0.7)).unwrap(), 1.0);
        assert_relative_eq!(gegenbauer(GegenbauerArgs::new(1, 1.5, 0.2)).unwrap(), 0.6, epsilon = 1e-15);
        assert_relative_eq!(gegenbauer_series(1, 1.5, 0.2), 0.6, epsilon = 1e-15);
        assert_relative_eq!(gegenbauer(GegenbauerArgs::new(2, 1.5, 0.5)).unwrap(), 0.375, epsilon = 1e-15);
        assert_relative_eq!(gegenbauer_series(2, 1.5, 0.5), 0.375, epsilon = 1e-15);
    }

    #[test]
    fn matches_series_oracle() {
        for p in 0..=10 {
            for &q in &[0.5, 1.5, 2.5, 3.25] {
                for &xi in &[-1.0, -0.5, 0.0, 0.3, 0.5, 1.0] {
                    let rec = gegenbauer(GegenbauerArgs::new(p, q, xi)).unwrap();
                    let ser = gegenbauer_series(p, q, xi);
                    assert_relative_eq!(rec, ser, epsilon = 1e-10, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn recurrence_consistency() {
        for p in 1..10 {
            for &q in &[0.5, 1.5, 2.5] {
                for &xi in &[-1.0, -0.5, 0.0, 0.5, 1.0] {
                    let c = |d| gegenbauer(GegenbauerArgs::new(d, q, xi)).unwrap();
                    let lhs = (p as f64 + 1.0) * c(p + 1);
                    let rhs = 2.0 * (p as f64 + q) * xi * c(p) - (p as f64 + 2.0 * q - 1.0) * c(p - 1);
                    assert_relative_eq!(lhs, rhs, epsilon = 1e-12, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gegenbauer(GegenbauerArgs::new(-1, 1.0, 0.0)).is_err());
        assert!(gegenbauer(GegenbauerArgs::new(2, 1.0, 1.5)).is_err());
        assert!(gegenbauer(GegenbauerArgs::new(2, -0.75, 0.1)).is_err());
        assert!(gegenbauer(GegenbauerArgs::new(2, 1.0, f64::NAN)).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(9, 0).unwrap(), 1);
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(22, 11).unwrap(), 705_432);
        assert_eq!(binomial(60, 30).unwrap(), 118_264_581_564_861_424);
        assert!(binomial(3, 4).is_err());
        assert_eq!(binomial_i128(5, 7), 0);
        assert_eq!(binomial_i128(5, -1), 0);
    }

    proptest! {
        #[test]
        fn parity(p in 0i64..12, q in 0.1f64..4.0, xi in -1.0f64..=1.0) {
            let even = gegenbauer(GegenbauerArgs::new(p, q, xi)).unwrap();
            let odd = gegenbauer(GegenbauerArgs::new(p, q, -xi)).unwrap();
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((odd - sign * even).abs() <= 1e-12 * (1.0 + even.abs()));
        }

        #[test]
        fn pascal_rule(n in 1u64..50, k in 1u64..50) {
            prop_assume!(k < n);
            prop_assert_eq!(binomial(n, k).unwrap(), binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
        }
    }
}
