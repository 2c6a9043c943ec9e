//! Real dilogarithm Li2(x) for x <= 1.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Power series sum_{k>=1} x^k / k^2, for |x| <= 1/2 where it converges
/// geometrically (about fifty terms at the interval ends).
fn li2_series(x: f64) -> f64 {
    debug_assert!(x.abs() <= 0.5);
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0;
    for _ in 0..200 {
        term *= x;
        k += 1.0;
        let add = term / (k * k);
        sum += add;
        if add.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

/// Li2(x) for x <= 1, extended to x < -1 by the inversion identity
/// Li2(x) = -Li2(1/x) - pi^2/6 - ln^2(-x)/2.
pub fn dilog(x: f64) -> Result<f64> {
    if !x.is_finite() || x > 1.0 {
        return Err(Error::Domain(format!("dilog requires x <= 1, got {x}")));
    }
    if x == 1.0 {
        return Ok(PI * PI / 6.0);
    }
    if x < -1.0 {
        let inner = transform_negative(1.0 / x);
        let l = (-x).ln();
        return Ok(-inner - PI * PI / 6.0 - 0.5 * l * l);
    }
    if x < 0.0 {
        return Ok(transform_negative(x));
    }
    Ok(transform_unit(x))
}

/// Li2 on [-1, 0) via Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, whose argument
/// lies in (0, 1/2].
fn transform_negative(x: f64) -> f64 {
    debug_assert!((-1.0..0.0).contains(&x));
    let l = (1.0 - x).ln();
    -li2_series(x / (x - 1.0)) - 0.5 * l * l
}

/// Li2 on [0, 1) with the reflection Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x)
/// applied above 1/2.
fn transform_unit(x: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&x));
    if x <= 0.5 {
        li2_series(x)
    } else {
        PI * PI / 6.0 - x.ln() * (1.0 - x).ln() - li2_series(1.0 - x)
    }
}
