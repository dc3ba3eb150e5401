//! Globally adaptive Gauss-Kronrod (G7/K15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Maximum number of interval bisections before giving up.
pub const SUBDIVISION_BUDGET: usize = 4000;

// Kronrod abscissae on [-1, 1], positive half, descending.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Integrates `f` over `[a, b]` to an estimated absolute error of at most `tol`.
///
/// The interval with the largest local error estimate (|K15 - G7|) is bisected
/// until the summed estimate drops below `tol`.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0) {
        return domain(format!("quadrature tolerance must be positive, got {tol}"));
    }
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return domain(format!("quadrature needs finite a <= b, got [{a}, {b}]"));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 1,
        });
    }

    let first = kronrod15(&mut f, a, b);
    let mut error = first.error;
    let mut heap = BinaryHeap::from([first]);
    let mut frozen = Vec::new();
    let mut subdivisions = 1;

    while error > tol && subdivisions < SUBDIVISION_BUDGET {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // too narrow to split further; keep its contribution as is
            frozen.push(worst);
            continue;
        }
        let left = kronrod15(&mut f, worst.a, mid);
        let right = kronrod15(&mut f, mid, worst.b);
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }

    let segments = || heap.iter().chain(frozen.iter());
    let value: f64 = segments().map(|s| s.value).sum();
    let error_estimate: f64 = segments().map(|s| s.error).sum();
    if !value.is_finite() {
        return domain("integrand produced a non-finite value");
    }
    if error_estimate > tol {
        return Err(Error::Convergence {
            tol,
            estimate: error_estimate,
            subdivisions,
        });
    }
    Ok(QuadratureResult {
        value,
        error_estimate,
        subdivisions,
    })
}
