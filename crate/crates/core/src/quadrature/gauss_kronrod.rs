//! 21-point Gauss-Kronrod rule with globally adaptive bisection.

use super::{IntegrationSpec, QuadratureResult};
use crate::error::{Error, Result};

// Abscissae and weights of the 21-point Kronrod rule with the embedded
// 10-point Gauss rule (QUADPACK dqk21 values).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// One Kronrod panel: returns (value, error estimate).
fn qk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(x))
        }
    };

    let f_center = eval(center)?;
    let mut kronrod = f_center * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv = [0.0_f64; 21];
    fv[10] = f_center;

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[j] = f1;
        fv[20 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[20 - j] - mean).abs());
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * 1.0_f64.min((200.0 * err / res_asc).powf(1.5));
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((value, err))
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    splittable: bool,
}

/// Globally adaptive integration: repeatedly bisect the segment with the
/// largest error estimate. Selection scans in insertion order, so the
/// subdivision sequence (and the result bits) are deterministic.
pub(super) fn adaptive_gk(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    fn segment(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, evals: &mut u64) -> Result<Segment> {
        let (value, error) = qk21(f, lo, hi)?;
        *evals += 21;
        let mid = 0.5 * (lo + hi);
        Ok(Segment {
            a: lo,
            b: hi,
            value,
            error,
            splittable: mid > lo && mid < hi,
        })
    }

    let mut evaluations: u64 = 0;
    let mut segments = vec![segment(f, a, b, &mut evaluations)?];
    loop {
        let mut total = 0.0;
        let mut comp = 0.0;
        let mut total_err = 0.0;
        for s in &segments {
            let y = s.value - comp;
            let t = total + y;
            comp = (t - total) - y;
            total = t;
            total_err += s.error;
        }
        let tol = spec.absolute_tolerance.max(spec.relative_tolerance * total.abs());
        if total_err <= tol {
            return Ok(QuadratureResult {
                value: total,
                error_estimate: total_err,
                evaluations,
                converged: true,
            });
        }

        let worst = segments
            .iter()
            .enumerate()
            .filter(|(_, s)| s.splittable)
            .max_by(|(i, x), (j, y)| {
                x.error.partial_cmp(&y.error).unwrap().then(j.cmp(i))
            })
            .map(|(i, _)| i);
        let (worst, budget_left) = match worst {
            Some(i) if evaluations + 42 <= spec.max_evaluations => (i, true),
            Some(i) => (i, false),
            None => (0, false),
        };
        if !budget_left {
            return Ok(QuadratureResult {
                value: total,
                error_estimate: total_err,
                evaluations,
                converged: false,
            });
        }

        let Segment { a: lo, b: hi, .. } = segments[worst];
        let mid = 0.5 * (lo + hi);
        segments[worst] = segment(f, lo, mid, &mut evaluations)?;
        let right = segment(f, mid, hi, &mut evaluations)?;
        segments.push(right);
    }
}
