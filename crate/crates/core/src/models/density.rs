//! Bivariate densities, their supports, and the integration regions they
//! induce.
//!
//! Each support predicate tests the sign of the same radicand the density
//! divides by, so `side_density(x, y) > 0` holds exactly when
//! `side_support(x, y)` does, ulp for ulp.

use super::{m6_normalizer, ModelId, Variable};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_1d_aware, IntegrationSpec, Region};
use std::f64::consts::{FRAC_PI_2, PI};

const SQRT_2_3: f64 = 0.816_496_580_927_726_1; // sqrt(2/3)
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// m3 radicand 4x(1-x) - (1-y*y); positive exactly on the open support.
#[inline]
fn radicand_m3(x: f64, y: f64) -> f64 {
    4.0 * x * (1.0 - x) - (1.0 - y * y)
}

/// m4/m5 radicand 4x^2(1-x^2) - (1-y^2)^2.
#[inline]
fn radicand_m45(x: f64, y: f64) -> f64 {
    let w = 1.0 - y * y;
    4.0 * x * x * (1.0 - x * x) - w * w
}

pub(super) fn side_support(model: ModelId, x: f64, y: f64) -> bool {
    if !(x.is_finite() && y.is_finite()) {
        return false;
    }
    match model {
        ModelId::M1Perimeter => x > 0.0 && y > 0.0 && x < 0.5 && y < 0.5 && x + y > 0.5,
        ModelId::M2QuadraticStick | ModelId::M6EighthSphere => {
            if !(x > 0.0 && y > 0.0) {
                return false;
            }
            let r = 1.0 - x * x - y * y;
            if r <= 0.0 {
                return false;
            }
            let s = r.sqrt();
            (x - y).abs() < s && s < x + y
        }
        ModelId::M3TwoPiece => x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0 && radicand_m3(x, y) > 0.0,
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
            x > 0.0 && x < 1.0 && y > 0.0 && radicand_m45(x, y) > 0.0
        }
    }
}

pub(super) fn side_density(model: ModelId, x: f64, y: f64) -> f64 {
    if !side_support(model, x, y) {
        return 0.0;
    }
    match model {
        ModelId::M1Perimeter => 8.0,
        ModelId::M2QuadraticStick => 24.0 * 3.0_f64.sqrt() / PI * x * y,
        ModelId::M3TwoPiece => {
            2.0 / PI * y / (((1.0 - y) * (1.0 + y)).sqrt() * radicand_m3(x, y).sqrt())
        }
        ModelId::M4QuadraticTwoPiece => 4.0 / PI * x * y / radicand_m45(x, y).sqrt(),
        ModelId::M5QuarterCircle => {
            4.0 / (PI * PI) * y
                / (((1.0 - x) * (1.0 + x)).sqrt() * radicand_m45(x, y).sqrt())
        }
        ModelId::M6EighthSphere => {
            m6_normalizer() / ((x * x + y * y).sqrt() * (1.0 - x * x - y * y).sqrt())
        }
    }
}

/// Distance-aware side density along y at fixed x, for use under tanh-sinh
/// with the exact inner limits of [`side_region`]: `dist_lo` and `dist_hi`
/// are the distances to the support walls. For m3/m4/m5 the radicand factors
/// into those distances, which preserves the inverse-square-root walls
/// through the last ulp next to the limits. For m1/m2/m6 the densities carry
/// no wall in y, so the distances are ignored.
pub fn side_density_aware(model: ModelId, x: f64, y: f64, dist_lo: f64, dist_hi: f64) -> f64 {
    match model {
        ModelId::M1Perimeter | ModelId::M2QuadraticStick | ModelId::M6EighthSphere => {
            side_density(model, x, y)
        }
        ModelId::M3TwoPiece => {
            // radicand = (y - b_lo)(y + b_lo), 1 - y^2 = (1 - y)(1 + y)
            // with b_lo = |2x - 1| and upper wall at 1.
            let b_lo = (2.0 * x - 1.0).abs();
            let radicand = dist_lo * (y + b_lo);
            let one_minus_y2 = dist_hi * (1.0 + y);
            if !(radicand > 0.0 && one_minus_y2 > 0.0) {
                return 0.0;
            }
            2.0 / PI * y / (one_minus_y2.sqrt() * radicand.sqrt())
        }
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
            let s = ((1.0 - x) * (1.0 + x)).sqrt();
            let b_lo = (x - s).abs();
            let b_hi = x + s;
            // radicand = (y^2 - b_lo^2)(b_hi^2 - y^2), factored through the
            // exact wall distances.
            let radicand = dist_lo * (y + b_lo) * dist_hi * (b_hi + y);
            if !(radicand > 0.0) {
                return 0.0;
            }
            match model {
                ModelId::M4QuadraticTwoPiece => 4.0 / PI * x * y / radicand.sqrt(),
                _ => 4.0 / (PI * PI) * y / (((1.0 - x) * (1.0 + x)).sqrt() * radicand.sqrt()),
            }
        }
    }
}

pub(super) fn angle_density(model: ModelId, x: f64, y: f64) -> f64 {
    if !(x.is_finite() && y.is_finite() && x > 0.0 && y > 0.0 && x + y < PI) {
        return 0.0;
    }
    let sa = x.sin();
    let sb = y.sin();
    let sc = (x + y).sin();
    match model {
        ModelId::M1Perimeter => {
            let d = sa + sb + sc;
            8.0 * sa * sb * sc / (d * d * d)
        }
        ModelId::M2QuadraticStick => {
            let d = sa * sa + sb * sb + sc * sc;
            24.0 * 3.0_f64.sqrt() / PI * (sa * sb * sc).powi(2) / (d * d * d)
        }
        ModelId::M3TwoPiece => {
            let d = sa + sb;
            sc / (PI * d * d)
        }
        ModelId::M4QuadraticTwoPiece => {
            let d = sa * sa + sb * sb;
            2.0 / PI * sa * sb * sc / (d * d)
        }
        ModelId::M5QuarterCircle => 2.0 / (PI * PI) * sc / (sa * sa + sb * sb),
        ModelId::M6EighthSphere => {
            let q = sa * sa + sb * sb;
            m6_normalizer() * sa * sb * sc / ((q + sc * sc) * q.sqrt())
        }
    }
}

/// Inner y-interval of the side support at fixed x (the same limits
/// [`side_region`] integrates over), or `None` outside the marginal support.
fn side_y_bounds(model: ModelId, x: f64) -> Option<(f64, f64)> {
    match model {
        ModelId::M1Perimeter => {
            if x > 0.0 && x < 0.5 {
                Some((0.5 - x, 0.5))
            } else {
                None
            }
        }
        ModelId::M2QuadraticStick | ModelId::M6EighthSphere => {
            if x > 0.0 && x < SQRT_2_3 {
                let s = (2.0 - 3.0 * x * x).sqrt();
                Some(((x - s).abs() / 2.0, (x + s) / 2.0))
            } else {
                None
            }
        }
        ModelId::M3TwoPiece => {
            if x > 0.0 && x < 1.0 {
                Some(((2.0 * x - 1.0).abs(), 1.0))
            } else {
                None
            }
        }
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
            if x > 0.0 && x < 1.0 {
                let s = ((1.0 - x) * (1.0 + x)).sqrt();
                Some(((x - s).abs(), x + s))
            } else {
                None
            }
        }
    }
}

/// The side-density support as an integration region over (x, y).
///
/// m6 splits the outer integral at x = sqrt(1/2): its marginal has a cusp
/// there (the inner slice grazes the unit circle where the density blows
/// up), and the split restores tanh-sinh convergence on both sides.
pub fn side_region(model: ModelId) -> Region {
    let (x_hi, splits): (f64, &[f64]) = match model {
        ModelId::M1Perimeter => (0.5, &[]),
        ModelId::M2QuadraticStick => (SQRT_2_3, &[]),
        ModelId::M6EighthSphere => (SQRT_2_3, &[FRAC_1_SQRT_2]),
        _ => (1.0, &[]),
    };
    Region::new(0.0, x_hi, move |x| side_y_bounds(model, x)).with_splits(splits)
}

/// The angle simplex {α > 0, β > 0, α + β < π} as an integration region.
pub fn angle_region() -> Region {
    Region::new(0.0, PI, |x| Some((0.0, PI - x)))
}

/// The obtuse part of the angle simplex as three disjoint regions:
/// α > π/2, β > π/2, and α + β < π/2 (γ > π/2).
pub fn obtuse_angle_regions() -> [Region; 3] {
    [
        Region::new(FRAC_PI_2, PI, |x| Some((0.0, PI - x))),
        Region::new(0.0, FRAC_PI_2, |x| {
            let hi = PI - x;
            if hi > FRAC_PI_2 {
                Some((FRAC_PI_2, hi))
            } else {
                None
            }
        }),
        Region::new(0.0, FRAC_PI_2, |x| {
            let hi = FRAC_PI_2 - x;
            if hi > 0.0 {
                Some((0.0, hi))
            } else {
                None
            }
        }),
    ]
}

/// Tight bounding box of the side support, for density grids.
pub fn side_bounding_box(model: ModelId) -> ((f64, f64), (f64, f64)) {
    match model {
        ModelId::M1Perimeter => ((0.0, 0.5), (0.0, 0.5)),
        ModelId::M2QuadraticStick | ModelId::M6EighthSphere => {
            ((0.0, SQRT_2_3), (0.0, SQRT_2_3))
        }
        ModelId::M3TwoPiece => ((0.0, 1.0), (0.0, 1.0)),
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
            ((0.0, 1.0), (0.0, std::f64::consts::SQRT_2))
        }
    }
}

/// Integration interval of the conjugate variable at a fixed value of
/// `variable`, or `None` outside the marginal support. Used to compute
/// marginal densities by integrating the bivariate density.
pub fn marginal_bounds(model: ModelId, variable: Variable, v: f64) -> Result<Option<(f64, f64)>> {
    match variable {
        Variable::SideA => Ok(side_y_bounds(model, v)),
        Variable::AngleAlpha => Ok(if v > 0.0 && v < PI {
            Some((0.0, PI - v))
        } else {
            None
        }),
        Variable::SideC => match model {
            ModelId::M3TwoPiece => Ok(if v > 0.0 && v < 1.0 {
                Some(((1.0 - v) / 2.0, (1.0 + v) / 2.0))
            } else {
                None
            }),
            ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
                if v > 0.0 && v < std::f64::consts::SQRT_2 {
                    // 4x^2(1-x^2) > (1-v^2)^2 puts x^2 between (1 -+ s)/2
                    // with s = v sqrt(2-v^2); 1 - s = (1-v^2)^2/(1+s).
                    let s = v * (2.0 - v * v).sqrt();
                    let w = 1.0 - v * v;
                    let lo2 = w * w / (1.0 + s) / 2.0;
                    let hi2 = (1.0 + s) / 2.0;
                    Ok(Some((lo2.sqrt(), hi2.sqrt())))
                } else {
                    Ok(None)
                }
            }
            _ => Err(Error::Unsupported(format!(
                "side_c marginal is not defined for {}",
                model.key()
            ))),
        },
    }
}

/// Marginal density of `variable` at `v`, computed by integrating the
/// bivariate density over the conjugate variable with wall-aware integrands.
pub fn marginal_by_quadrature(
    model: ModelId,
    variable: Variable,
    v: f64,
    tolerance: f64,
) -> Result<f64> {
    let Some((lo, hi)) = marginal_bounds(model, variable, v)? else {
        return Ok(0.0);
    };
    if !(lo < hi) {
        return Ok(0.0);
    }
    let spec = IntegrationSpec::with_tolerances(tolerance, tolerance).singular(true, true);
    let r = match variable {
        Variable::SideA => integrate_1d_aware(
            |y, dl, du| side_density_aware(model, v, y, dl, du),
            lo,
            hi,
            &spec,
        )?,
        Variable::AngleAlpha => {
            integrate_1d_aware(|y, _, _| angle_density(model, v, y), lo, hi, &spec)?
        }
        Variable::SideC => integrate_1d_aware(
            |x, dl, du| side_density_c_slice(model, x, v, dl, du),
            lo,
            hi,
            &spec,
        )?,
    };
    if !r.converged {
        return Err(Error::NonConvergence(format!(
            "marginal of {} for {} at {v}",
            variable.key(),
            model.key()
        )));
    }
    Ok(r.value)
}

/// Distance-aware side density along x at fixed y = c (m3/m4/m5 only), with
/// the radicand factored through the exact x-wall distances.
fn side_density_c_slice(model: ModelId, x: f64, c: f64, dist_lo: f64, dist_hi: f64) -> f64 {
    match model {
        ModelId::M3TwoPiece => {
            // radicand(x) = 4 (x - x_lo)(x_hi - x), walls at (1 -+ c)/2.
            let radicand = 4.0 * dist_lo * dist_hi;
            let one_minus_c2 = (1.0 - c) * (1.0 + c);
            if !(radicand > 0.0 && one_minus_c2 > 0.0) {
                return 0.0;
            }
            2.0 / PI * c / (one_minus_c2.sqrt() * radicand.sqrt())
        }
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => {
            // radicand(x) = 4 (x - x_lo)(x + x_lo)(x_hi - x)(x_hi + x).
            let s = c * (2.0 - c * c).sqrt();
            let w = 1.0 - c * c;
            let x_lo = (w * w / (1.0 + s) / 2.0).sqrt();
            let x_hi = ((1.0 + s) / 2.0).sqrt();
            let radicand = 4.0 * dist_lo * (x + x_lo) * dist_hi * (x_hi + x);
            if !(radicand > 0.0) {
                return 0.0;
            }
            match model {
                ModelId::M4QuadraticTwoPiece => 4.0 / PI * x * c / radicand.sqrt(),
                _ => 4.0 / (PI * PI) * c / (((1.0 - x) * (1.0 + x)).sqrt() * radicand.sqrt()),
            }
        }
        _ => 0.0,
    }
}
