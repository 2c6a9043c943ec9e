//! Gamma function via a Lanczos rational approximation, plus the regularized
//! upper incomplete gamma needed for chi-square tail probabilities.

use crate::error::{Error, Result};

// Lanczos coefficients with g = 6.024680040776729583740234375, 13 terms.
// Certified at ulp-level relative error for f64 over the positive real
// axis, far inside the 1e-13 budget used here.
#[allow(clippy::excessive_precision)]
const LANCZOS_G: f64 = 6.024680040776729583740234375;
#[allow(clippy::excessive_precision)]
const LANCZOS_NUM: [f64; 13] = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
];
// Denominator x(x+1)(x+2)...(x+11), expanded.
const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39_916_800.0,
    120_543_840.0,
    150_917_976.0,
    105_258_076.0,
    45_995_730.0,
    13_339_535.0,
    2_637_558.0,
    357_423.0,
    32_670.0,
    1_925.0,
    66.0,
    1.0,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for i in (0..13).rev() {
        num = num * x + LANCZOS_NUM[i];
        den = den * x + LANCZOS_DEN[i];
    }
    num / den
}

/// Gamma(x) for x > 0.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("gamma_fn requires x > 0, got {x}")));
    }
    let t = x + LANCZOS_G - 0.5;
    Ok(lanczos_sum(x) * t.powf(x - 0.5) * (-t).exp())
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    let t = x + LANCZOS_G - 0.5;
    Ok(lanczos_sum(x).ln() + (x - 0.5) * t.ln() - t)
}

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
///
/// Series expansion below the a+1 crossover, Lentz continued fraction above.
pub fn gamma_q(a: f64, x: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 || !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "gamma_q requires a > 0 and x >= 0, got a = {a}, x = {x}"
        )));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let log_scale = a * x.ln() - x - ln_gamma(a)?;
    if x < a + 1.0 {
        // P(a, x) by series, then Q = 1 - P.
        let mut term = 1.0 / a;
        let mut sum = term;
        let mut k = a;
        for _ in 0..1000 {
            k += 1.0;
            term *= x / k;
            sum += term;
            if term.abs() < sum.abs() * 1e-17 {
                return Ok(1.0 - sum * log_scale.exp());
            }
        }
        Err(Error::NonConvergence("gamma_q series".into()))
    } else {
        // Q(a, x) by continued fraction (modified Lentz).
        const TINY: f64 = 1e-300;
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..1000 {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let delta = d * c;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                return Ok(h * log_scale.exp());
            }
        }
        Err(Error::NonConvergence("gamma_q continued fraction".into()))
    }
}
