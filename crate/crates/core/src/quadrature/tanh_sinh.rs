//! Tanh-sinh (double-exponential) quadrature for endpoint singularities.
//!
//! The substitution x = c + d tanh((pi/2) sinh t) pushes the endpoints to
//! infinity with double-exponentially decaying weights, so inverse-square-root
//! and logarithmic endpoint singularities integrate at nearly full precision.
//!
//! Node positions are generated as exact distances from the endpoints and the
//! integrand receives those distances alongside x. Arguments closer to an
//! endpoint than one ulp of x are unavoidable in fixed precision; integrands
//! that blow up there can use the distances instead of x and keep full
//! accuracy (the plain single-argument entry points simply ignore them, at
//! the cost of an O(sqrt(ulp)) floor for inverse-square-root walls).
//! Evaluations that still overflow within that last-ulp collar are dropped;
//! their weights are negligible.

use super::{IntegrationSpec, QuadratureResult};
use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

const MAX_LEVEL: u32 = 12;
/// Nodes further out than this in t have underflowed endpoint distances.
const T_CUTOFF: f64 = 6.8;
/// A non-finite integrand value at relative endpoint distance above this is
/// a genuine interior blow-up and is reported as an error instead of skipped.
const INTERIOR_FRACTION: f64 = 1e-4;

struct LevelSum {
    value: f64,
    hit_budget: bool,
}

/// Sum of weighted integrand values at level `level` (odd indices only for
/// level > 0, everything including j = 0 for level 0).
fn level_sum(
    f: &dyn Fn(f64, f64, f64) -> f64,
    a: f64,
    b: f64,
    level: u32,
    evaluations: &mut u64,
    max_evaluations: u64,
) -> Result<LevelSum> {
    let d = 0.5 * (b - a);
    let h = 0.5_f64.powi(level as i32);
    let width = b - a;

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut hit_budget = false;
    let mut negligible_streak = 0;

    let start_j: u64 = if level == 0 { 0 } else { 1 };
    let step: u64 = if level == 0 { 1 } else { 2 };
    let mut j = start_j;
    loop {
        let t = j as f64 * h;
        if t > T_CUTOFF {
            break;
        }

        let (weight, dist) = if j == 0 {
            (FRAC_PI_2, d)
        } else {
            let u = FRAC_PI_2 * t.sinh();
            // sech(u) and 1 - tanh(u), both via exp(-u) to avoid overflow.
            let em = (-u).exp();
            let sech = 2.0 * em / (1.0 + em * em);
            let one_minus_tanh = em * sech;
            (FRAC_PI_2 * t.cosh() * sech * sech, d * one_minus_tanh)
        };
        if dist == 0.0 || weight == 0.0 {
            break;
        }
        let far = width - dist; // distance from the opposite endpoint

        // (x, dist to lower endpoint, dist to upper endpoint) per node; the
        // j = 0 node is its own mirror image.
        let nodes: [(f64, f64, f64); 2] = [(a + dist, dist, far), (b - dist, far, dist)];
        let node_count = if j == 0 { 1 } else { 2 };

        let mut contrib = 0.0;
        for &(x, dl, du) in nodes.iter().take(node_count) {
            if *evaluations >= max_evaluations {
                hit_budget = true;
                break;
            }
            *evaluations += 1;
            let v = f(x, dl, du);
            if v.is_finite() {
                contrib += v;
            } else if dist > INTERIOR_FRACTION * width {
                return Err(Error::NonFinite(x));
            }
        }
        let term = weight * contrib;
        let y = term - comp;
        let tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;

        if hit_budget {
            break;
        }
        // The double-exponential decay makes every later term smaller still;
        // two consecutive negligible terms end the sweep.
        if j > 0 && term.abs() <= 0.25 * f64::EPSILON * sum.abs() {
            negligible_streak += 1;
            if negligible_streak >= 2 {
                break;
            }
        } else {
            negligible_streak = 0;
        }
        j += step;
    }
    Ok(LevelSum {
        value: sum * d,
        hit_budget,
    })
}

pub(super) fn tanh_sinh(
    f: &dyn Fn(f64, f64, f64) -> f64,
    a: f64,
    b: f64,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    let mut evaluations: u64 = 0;
    let first = level_sum(f, a, b, 0, &mut evaluations, spec.max_evaluations)?;
    let mut raw_sum = first.value;
    let mut hit_budget = first.hit_budget;
    let mut estimate = raw_sum; // h = 1 at level 0
    let mut error = f64::INFINITY;

    for level in 1..=MAX_LEVEL {
        let h = 0.5_f64.powi(level as i32);
        let refinement = level_sum(f, a, b, level, &mut evaluations, spec.max_evaluations)?;
        raw_sum += refinement.value;
        hit_budget |= refinement.hit_budget;
        let new_estimate = raw_sum * h;
        error = (new_estimate - estimate).abs();
        estimate = new_estimate;
        let tol = spec
            .absolute_tolerance
            .max(spec.relative_tolerance * estimate.abs());
        if level >= 3 && error <= tol {
            return Ok(QuadratureResult {
                value: estimate,
                error_estimate: error,
                evaluations,
                converged: true,
            });
        }
        if hit_budget {
            break;
        }
    }
    Ok(QuadratureResult {
        value: estimate,
        error_estimate: error,
        evaluations,
        converged: false,
    })
}
