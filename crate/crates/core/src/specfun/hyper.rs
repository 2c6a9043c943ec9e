//! The hypergeometric series 3F2(1/2, 1/2, 3/2; 5/4, 7/4; x) on [0, 1].
//!
//! Written as (3 / (4 sqrt(2 pi))) * sum_n t_n x^n with
//! t_n = Gamma(n+1/2)^2 Gamma(n+3/2) / (Gamma(n+5/4) Gamma(n+7/4) n!),
//! the terms obey a two-term recurrence and, at x = 1, decay like n^(-3/2).
//! The unit-argument sum therefore needs tail acceleration: the partial sum
//! over the term budget is completed with a fitted asymptotic tail
//! t_n ~ A n^(-3/2) + c1 n^(-5/2) + c2 n^(-7/2) summed by Hurwitz-zeta
//! values, which brings the truncation error far below 1e-12.

use super::gamma::gamma_fn;
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Default term budget for the series.
pub const HYP3F2_DEFAULT_BUDGET: usize = 1_000_000;

/// 3F2(1/2, 1/2, 3/2; 5/4, 7/4; x) with the default term budget.
pub fn hyp3f2_paper(x: f64) -> Result<f64> {
    hyp3f2_paper_budget(x, HYP3F2_DEFAULT_BUDGET)
}

/// Same series with an explicit term budget (must be at least 10^4 so the
/// x = 1 tail fit happens in the asymptotic regime).
pub fn hyp3f2_paper_budget(x: f64, budget: usize) -> Result<f64> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "hyp3f2_paper requires 0 <= x <= 1, got {x}"
        )));
    }
    if budget < 10_000 {
        return Err(Error::Precondition(format!(
            "hyp3f2_paper budget must be >= 10000, got {budget}"
        )));
    }
    let prefactor = 3.0 / (4.0 * (2.0 * PI).sqrt());
    let t0 = gamma_fn(0.5)? * gamma_fn(0.5)? * gamma_fn(1.5)? / (gamma_fn(1.25)? * gamma_fn(1.75)?);

    let ratio = |n: f64| (n + 0.5) * (n + 0.5) * (n + 1.5) / ((n + 1.25) * (n + 1.75) * (n + 1.0));

    if x < 1.0 {
        let mut term = t0;
        let mut sum = t0;
        let mut comp = 0.0;
        for n in 0..budget {
            term *= ratio(n as f64) * x;
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            // Remaining terms are bounded by a geometric series with ratio
            // slightly above x; the 2/(1-x) factor covers the excess.
            if term * 2.0 / (1.0 - x) <= 1e-16 * sum {
                return Ok(prefactor * sum);
            }
        }
        return Err(Error::NonConvergence(format!(
            "hyp3f2_paper series at x = {x} after {budget} terms"
        )));
    }

    // x == 1: sum the budget, then fit and add the asymptotic tail.
    let n_total = budget;
    let checkpoints = [n_total / 4, n_total / 2, n_total - 1];
    let mut u = [0.0_f64; 3];
    let mut term = t0;
    let mut sum = t0;
    let mut comp = 0.0;
    for n in 1..n_total {
        term *= ratio((n - 1) as f64);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        for (i, &cp) in checkpoints.iter().enumerate() {
            if n == cp {
                u[i] = term * (n as f64).powf(1.5);
            }
        }
    }
    let (a, c1, c2) = fit_tail(&checkpoints, &u);
    let start = n_total as f64;
    let tail = a * hurwitz_zeta(1.5, start) + c1 * hurwitz_zeta(2.5, start)
        + c2 * hurwitz_zeta(3.5, start);
    Ok(prefactor * (sum + tail))
}

/// Solve u_i = A + c1/n_i + c2/n_i^2 for (A, c1, c2).
fn fit_tail(ns: &[usize; 3], u: &[f64; 3]) -> (f64, f64, f64) {
    let r: Vec<f64> = ns.iter().map(|&n| 1.0 / n as f64).collect();
    // Cramer on the 3x3 Vandermonde in r.
    let det = |a: [f64; 9]| -> f64 {
        a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6])
    };
    let m = [
        1.0,
        r[0],
        r[0] * r[0],
        1.0,
        r[1],
        r[1] * r[1],
        1.0,
        r[2],
        r[2] * r[2],
    ];
    let d = det(m);
    let col = |j: usize| {
        let mut mm = m;
        for i in 0..3 {
            mm[3 * i + j] = u[i];
        }
        det(mm) / d
    };
    (col(0), col(1), col(2))
}

/// Hurwitz zeta sum_{k>=0} (a+k)^(-s) by Euler-Maclaurin, for large a.
fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    debug_assert!(a >= 1000.0);
    a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s) + s * a.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * a.powf(-s - 3.0) / 720.0
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * a.powf(-s - 5.0) / 30240.0
}
