//! Univariate (marginal) densities with closed forms, plus the m6 side
//! marginal built from incomplete elliptic integrals.

use super::{density, m6_normalizer, ModelId, Variable};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_1d, IntegrationSpec};
use crate::specfun::{ellip_f_mc, ellip_k_mc};
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

const SQRT_2_3: f64 = 0.816_496_580_927_726_1; // sqrt(2/3)
const SQRT_1_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Support interval of a univariate density.
pub fn variable_support(model: ModelId, variable: Variable) -> Result<(f64, f64)> {
    match variable {
        Variable::AngleAlpha => Ok((0.0, PI)),
        Variable::SideA => Ok(match model {
            ModelId::M1Perimeter => (0.0, 0.5),
            ModelId::M2QuadraticStick | ModelId::M6EighthSphere => (0.0, SQRT_2_3),
            _ => (0.0, 1.0),
        }),
        Variable::SideC => match model {
            ModelId::M3TwoPiece => Ok((0.0, 1.0)),
            ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => Ok((0.0, SQRT_2)),
            _ => Err(Error::Unsupported(format!(
                "side_c density is not defined for {}",
                model.key()
            ))),
        },
    }
}

/// ω(a) on (0, sqrt(2/3)): the arcsine argument of the m6 side marginal.
pub fn omega(a: f64) -> Result<f64> {
    if !(a.is_finite() && a > 0.0 && a < SQRT_2_3) {
        return Err(Error::Domain(format!(
            "omega requires 0 < a < sqrt(2/3), got {a}"
        )));
    }
    Ok(omega_expr(a))
}

/// The same expression extended over (-sqrt(2/3), sqrt(2/3)); the marginal
/// evaluates it at both +a and -a. The argument of the arcsine is <= 1
/// algebraically (equality exactly at a = sqrt(1/2)); clamp the few ulps of
/// rounding excess.
fn omega_expr(t: f64) -> f64 {
    let s = (2.0 - 3.0 * t * t).sqrt();
    let num = t + s;
    let den = ((1.0 - t * t).sqrt()) * (4.0 * t * t + num * num).sqrt();
    (num / den).clamp(-1.0, 1.0).asin()
}

/// Univariate density of `variable` at `v`.
///
/// m1/m2/m6 define marginals for side a; m3/m4/m5 for sides a and c; each
/// model has an angle marginal, but m6's has no closed form and is computed
/// by integrating the bivariate angle density over the second angle.
pub fn univariate_density(model: ModelId, variable: Variable, v: f64) -> Result<f64> {
    if !v.is_finite() {
        return Ok(0.0);
    }
    let (lo, hi) = variable_support(model, variable)?;
    if !(v > lo && v < hi) {
        return Ok(0.0);
    }
    match (model, variable) {
        (ModelId::M1Perimeter, Variable::SideA) => Ok(8.0 * v),
        (ModelId::M2QuadraticStick, Variable::SideA) => {
            Ok(12.0 * 3.0_f64.sqrt() / PI * v * v * (2.0 - 3.0 * v * v).sqrt())
        }
        (ModelId::M3TwoPiece, Variable::SideA) => Ok(1.0),
        (ModelId::M4QuadraticTwoPiece, Variable::SideA) => Ok(2.0 * v),
        (ModelId::M5QuarterCircle, Variable::SideA) => {
            Ok(2.0 / PI / ((1.0 - v) * (1.0 + v)).sqrt())
        }
        (ModelId::M6EighthSphere, Variable::SideA) => m6_side_marginal(v),

        (ModelId::M3TwoPiece, Variable::SideC) => {
            Ok(v / ((1.0 - v) * (1.0 + v)).sqrt())
        }
        (ModelId::M4QuadraticTwoPiece, Variable::SideC) => Ok(v),
        (ModelId::M5QuarterCircle, Variable::SideC) => {
            // (4c/pi^2) K(c sqrt(2-c^2)); the complementary parameter is
            // (1-c^2)^2, exact through the interior singularity at c = 1.
            let w = (1.0 - v) * (1.0 + v);
            let mc = w * w;
            if mc == 0.0 {
                return Ok(f64::INFINITY);
            }
            Ok(4.0 * v / (PI * PI) * ellip_k_mc(mc)?)
        }

        (ModelId::M1Perimeter, Variable::AngleAlpha) => Ok(m1_angle_marginal(v)),
        (ModelId::M2QuadraticStick, Variable::AngleAlpha) => Ok(m2_angle_marginal(v)),
        (ModelId::M3TwoPiece, Variable::AngleAlpha) => Ok(m3_angle_marginal(v)),
        (ModelId::M4QuadraticTwoPiece, Variable::AngleAlpha) => Ok(m4_angle_marginal(v)),
        (ModelId::M5QuarterCircle, Variable::AngleAlpha) => Ok(m5_angle_marginal(v)),
        (ModelId::M6EighthSphere, Variable::AngleAlpha) => {
            let spec = IntegrationSpec::with_tolerances(1e-11, 1e-11).singular(true, true);
            let r = integrate_1d(
                |y| density::angle_density(model, v, y),
                0.0,
                PI - v,
                &spec,
            )?;
            Ok(r.value)
        }

        (m, var) => Err(Error::Unsupported(format!(
            "no univariate density for ({}, {})",
            m.key(),
            var.key()
        ))),
    }
}

/// m6 side marginal: C [F(ω(a), k) − F(|ω(−a)|, k)] with k² = 1 − a².
///
/// This is the piecewise two-branch form written as one expression: below
/// a = sqrt(1/2) the second argument ω(−a) is positive and subtracts, above
/// it is negative and the branch flips the sign of its F term, which is the
/// same as subtracting F at |ω(−a)|.
fn m6_side_marginal(a: f64) -> Result<f64> {
    let mc = a * a; // complementary parameter of k = sqrt(1 - a^2)
    let f_pos = ellip_f_mc(omega_expr(a), mc)?;
    let f_neg = ellip_f_mc(omega_expr(-a).abs(), mc)?;
    Ok(m6_normalizer() * (f_pos - f_neg))
}

/// m1 angle marginal:
/// −8 (3−cos α) sin α ln(sin(α/2)) / (1+cos α)³ − 8 sin α / (1+cos α)².
///
/// Both terms blow up like (π−α)^{−3} near α = π while their sum vanishes
/// linearly, so within a band of π the cancellation is replaced by the Taylor
/// series of the sum in u = π − α (odd, coefficients 1/6, 1/72, 1/2880,
/// −1/30240, −47/8709120). Band and order chosen so both representations
/// overlap at full accuracy.
fn m1_angle_marginal(alpha: f64) -> f64 {
    let u = PI - alpha;
    if u < 0.05 {
        let u2 = u * u;
        return u
            * (1.0 / 6.0
                + u2 * (1.0 / 72.0
                    + u2 * (1.0 / 2880.0 + u2 * (-1.0 / 30240.0 + u2 * (-47.0 / 8709120.0)))));
    }
    let c = alpha.cos();
    let s = alpha.sin();
    // 1 + cos α = 2 cos²(α/2), stable down the whole range.
    let half_cos = (0.5 * alpha).cos();
    let opc = 2.0 * half_cos * half_cos;
    -8.0 * (3.0 - c) * s * (0.5 * alpha).sin().ln() / (opc * opc * opc) - 8.0 * s / (opc * opc)
}

/// m2 angle marginal:
/// (6√3/π)(2+cos²α) sin α (π/2 + arcsin(cos α / 2)) / (4−cos²α)^{5/2}
/// + (9√3/π) cos α sin α / (4−cos²α)².
fn m2_angle_marginal(alpha: f64) -> f64 {
    let c = alpha.cos();
    let s = alpha.sin();
    let d = 4.0 - c * c;
    let sqrt3 = 3.0_f64.sqrt();
    6.0 * sqrt3 / PI * (2.0 + c * c) * s / (d * d * d.sqrt()) * (FRAC_PI_2 + (c / 2.0).asin())
        + 9.0 * sqrt3 / PI * c * s / (d * d)
}

/// m3 angle marginal:
/// −(1/π)(2 ln(sin(α/2)) + ln 2)/cos²α − (1/π)/cos α.
///
/// The 0/0 point at α = π/2 is removable; a Taylor series in t = α − π/2
/// (coefficients 1/(2π), −1/(3π), 1/(4π), −13/(90π), 1/(12π), −23/(504π),
/// 1/(40π), −1033/(75600π), 19/(2520π)) covers a band around it.
fn m3_angle_marginal(alpha: f64) -> f64 {
    let t = alpha - FRAC_PI_2;
    if t.abs() < 0.02 {
        let c = [
            1.0 / (2.0 * PI),
            -1.0 / (3.0 * PI),
            1.0 / (4.0 * PI),
            -13.0 / (90.0 * PI),
            1.0 / (12.0 * PI),
            -23.0 / (504.0 * PI),
            1.0 / (40.0 * PI),
            -1033.0 / (75600.0 * PI),
            19.0 / (2520.0 * PI),
        ];
        return c.iter().rev().fold(0.0, |acc, &ck| acc * t + ck);
    }
    let c = alpha.cos();
    -(2.0 * (0.5 * alpha).sin().ln() + std::f64::consts::LN_2) / (PI * c * c) - 1.0 / (PI * c)
}

/// m4 angle marginal:
/// (1/π) cos α (π/2 + arcsin(cos α/√2)) / (2−cos²α)^{3/2} + (1/π)/(2−cos²α).
fn m4_angle_marginal(alpha: f64) -> f64 {
    let c = alpha.cos();
    let d = 2.0 - c * c;
    c / (PI * d * d.sqrt()) * (FRAC_PI_2 + (c / SQRT_2).asin()) + 1.0 / (PI * d)
}

/// m5 angle marginal:
/// 1/(2π) + (1/π²) cos α / √(2−cos²α) · ln((2−cos α+r)/(2−cos α−r)),
/// r = √(2−cos²α). The log denominator 2−cos α−r cancels catastrophically
/// near α = 0; it equals 2(1−cos α)²/(2−cos α+r) with 1−cos α = 2 sin²(α/2),
/// which the rewritten form uses directly.
fn m5_angle_marginal(alpha: f64) -> f64 {
    let c = alpha.cos();
    let r = (2.0 - c * c).sqrt();
    let plus = 2.0 - c + r;
    let one_minus_c = 2.0 * (0.5 * alpha).sin().powi(2);
    // ln(plus/minus) with minus = 2 (1-c)^2 / plus.
    let log_ratio = 2.0 * plus.ln() - std::f64::consts::LN_2 - 2.0 * one_minus_c.ln();
    1.0 / (2.0 * PI) + c / (PI * PI * r) * log_ratio
}
