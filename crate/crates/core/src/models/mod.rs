//! The six constrained-triangle models: samplers, closed-form densities,
//! support predicates, and side/angle conversions.
//!
//! | id | constraint        | mechanism                               |
//! |----|-------------------|-----------------------------------------|
//! | m1 | a + b + c = 1     | stick broken at two uniform points      |
//! | m2 | a² + b² + c² = 1  | stick pieces are the squared sides      |
//! | m3 | a + b = 1         | one break, γ uniform on [0, π]          |
//! | m4 | a² + b² = 1       | one break into squared sides, uniform γ |
//! | m5 | a² + b² = 1       | uniform point on the quarter circle     |
//! | m6 | a² + b² + c² = 1  | uniform (φ, ψ) angles on the octant     |
//!
//! Densities follow the variable conventions of the defining constructions:
//! m1/m2/m6 bivariate densities are over the sides (a, b), m3/m4/m5 over
//! (a, c). Sides stay in each model's natural unit; nothing is renormalized.
//!
//! All density, support, and conversion operations are pure and thread-safe.
//! [`sample`] takes an explicit RNG handle; use one RNG per thread.

mod density;
mod univariate;

pub use density::{
    angle_region, marginal_by_quadrature, marginal_bounds, obtuse_angle_regions, side_bounding_box,
    side_density_aware, side_region,
};
pub use univariate::{omega, univariate_density, variable_support};

use crate::constants;
use crate::error::{Error, Result};
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Which of the six constraint models governs sampling and densities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelId {
    M1Perimeter,
    M2QuadraticStick,
    M3TwoPiece,
    M4QuadraticTwoPiece,
    M5QuarterCircle,
    M6EighthSphere,
}

impl ModelId {
    pub const ALL: [ModelId; 6] = [
        ModelId::M1Perimeter,
        ModelId::M2QuadraticStick,
        ModelId::M3TwoPiece,
        ModelId::M4QuadraticTwoPiece,
        ModelId::M5QuarterCircle,
        ModelId::M6EighthSphere,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m1" => Ok(ModelId::M1Perimeter),
            "m2" => Ok(ModelId::M2QuadraticStick),
            "m3" => Ok(ModelId::M3TwoPiece),
            "m4" => Ok(ModelId::M4QuadraticTwoPiece),
            "m5" => Ok(ModelId::M5QuarterCircle),
            "m6" => Ok(ModelId::M6EighthSphere),
            other => Err(Error::Precondition(format!(
                "unknown model `{other}` (expected m1..m6)"
            ))),
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            ModelId::M1Perimeter => "m1",
            ModelId::M2QuadraticStick => "m2",
            ModelId::M3TwoPiece => "m3",
            ModelId::M4QuadraticTwoPiece => "m4",
            ModelId::M5QuarterCircle => "m5",
            ModelId::M6EighthSphere => "m6",
        }
    }

    /// Human-readable constraint, used by the CLI and the constants table.
    pub fn constraint(self) -> &'static str {
        match self {
            ModelId::M1Perimeter => "a+b+c=1 (broken stick)",
            ModelId::M2QuadraticStick => "a^2+b^2+c^2=1 (stick pieces squared)",
            ModelId::M3TwoPiece => "a+b=1, uniform gamma",
            ModelId::M4QuadraticTwoPiece => "a^2+b^2=1 (stick), uniform gamma",
            ModelId::M5QuarterCircle => "a^2+b^2=1 (quarter circle), uniform gamma",
            ModelId::M6EighthSphere => "a^2+b^2+c^2=1 (eighth sphere)",
        }
    }
}

/// One realized triangle: sides and the opposite angles (radians).
#[derive(Clone, Copy, Debug)]
pub struct TriangleSample {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// The two independent uniform variates feeding one realization attempt.
///
/// Meaning per model: m1/m2 — the two break points; m3/m4 — break point and
/// γ/π; m5 — θ/(π/2) and γ/π; m6 — φ/(π/2) and ψ/(π/2).
#[derive(Clone, Copy, Debug)]
pub struct LatentDraw {
    pub model: ModelId,
    pub u1: f64,
    pub u2: f64,
}

impl LatentDraw {
    pub fn new(model: ModelId, u1: f64, u2: f64) -> Result<Self> {
        if !(u1 > 0.0 && u1 < 1.0 && u2 > 0.0 && u2 < 1.0) {
            return Err(Error::Precondition(format!(
                "latent variates must lie in (0, 1), got ({u1}, {u2})"
            )));
        }
        Ok(Self { model, u1, u2 })
    }
}

/// Turn a latent draw into a triangle, or `None` when the draw violates the
/// triangle inequalities (a normal outcome of rejection sampling).
pub fn realize(draw: &LatentDraw) -> Result<Option<TriangleSample>> {
    let LatentDraw { model, u1, u2 } = *draw;
    if !(u1 > 0.0 && u1 < 1.0 && u2 > 0.0 && u2 < 1.0) {
        return Err(Error::Precondition(format!(
            "latent variates must lie in (0, 1), got ({u1}, {u2})"
        )));
    }
    let (a, b, c) = match model {
        ModelId::M1Perimeter => {
            let (lo, hi) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
            (lo, hi - lo, 1.0 - hi)
        }
        ModelId::M2QuadraticStick => {
            let (lo, hi) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
            (lo.sqrt(), (hi - lo).sqrt(), (1.0 - hi).sqrt())
        }
        ModelId::M3TwoPiece => {
            let (a, b) = (u1, 1.0 - u1);
            (a, b, law_of_cosines_c(a, b, PI * u2))
        }
        ModelId::M4QuadraticTwoPiece => {
            let (a, b) = (u1.sqrt(), (1.0 - u1).sqrt());
            (a, b, law_of_cosines_c(a, b, PI * u2))
        }
        ModelId::M5QuarterCircle => {
            let theta = FRAC_PI_2 * u1;
            let (a, b) = (theta.cos(), theta.sin());
            (a, b, law_of_cosines_c(a, b, PI * u2))
        }
        ModelId::M6EighthSphere => {
            let (phi, psi) = (FRAC_PI_2 * u1, FRAC_PI_2 * u2);
            (phi.sin() * psi.cos(), phi.sin() * psi.sin(), phi.cos())
        }
    };
    match angles_from_sides(a, b, c) {
        Ok((alpha, beta, gamma)) => Ok(Some(TriangleSample {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })),
        // Triangle inequality failed (or a degenerate zero-length piece):
        // rejection, not an error.
        Err(Error::Domain(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn law_of_cosines_c(a: f64, b: f64, gamma: f64) -> f64 {
    (a * a + b * b - 2.0 * a * b * gamma.cos()).sqrt()
}

/// Hard cap on rejection trials. Expected trial counts are at most four
/// (m1); exceeding the cap indicates a broken RNG and is an internal error.
const MAX_REJECTION_TRIALS: u32 = 10_000;

/// Uniform variate on the open interval (0, 1).
fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}

/// Rejection-sample one triangle from the model.
pub fn sample<R: Rng + ?Sized>(model: ModelId, rng: &mut R) -> Result<TriangleSample> {
    for _ in 0..MAX_REJECTION_TRIALS {
        let draw = LatentDraw {
            model,
            u1: open_unit(rng),
            u2: open_unit(rng),
        };
        if let Some(sample) = realize(&draw)? {
            return Ok(sample);
        }
    }
    Err(Error::Internal(format!(
        "no acceptance within {MAX_REJECTION_TRIALS} trials for {}",
        model.key()
    )))
}

/// a + b with the rounding error captured (TwoSum).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Angles opposite the given sides, via the half-angle form of the Law of
/// Cosines: tan(α/2) = sqrt((a−b+c)(a+b−c) / ((a+b+c)(−a+b+c))).
///
/// The linear factors are assembled with compensated sums, so each angle is
/// accurate in a relative sense even for needle-shaped triangles — which a
/// plain arccos of the cosine ratio cannot deliver once the ratio sits
/// within one ulp of ±1. Each angle lies in (0, π) and the three sum to π
/// at working precision.
pub fn angles_from_sides(a: f64, b: f64, c: f64) -> Result<(f64, f64, f64)> {
    if !(a.is_finite() && b.is_finite() && c.is_finite() && a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain(format!(
            "sides must be positive and finite, got ({a}, {b}, {c})"
        )));
    }
    let q_a = {
        let (s, e) = two_sum(b, c);
        (s - a) + e
    };
    let q_b = {
        let (s, e) = two_sum(a, c);
        (s - b) + e
    };
    let q_c = {
        let (s, e) = two_sum(a, b);
        (s - c) + e
    };
    if !(q_a > 0.0 && q_b > 0.0 && q_c > 0.0) {
        return Err(Error::Domain(format!(
            "triangle inequality violated for sides ({a}, {b}, {c})"
        )));
    }
    let p = {
        let (s, e) = two_sum(a, b);
        (s + c) + e
    };
    let alpha = 2.0 * (q_b * q_c).sqrt().atan2((p * q_a).sqrt());
    let beta = 2.0 * (q_a * q_c).sqrt().atan2((p * q_b).sqrt());
    let gamma = 2.0 * (q_a * q_b).sqrt().atan2((p * q_c).sqrt());
    Ok((alpha, beta, gamma))
}

/// The unique triangle with angles (α, β) on the model's constraint surface.
pub fn sides_from_angles(model: ModelId, alpha: f64, beta: f64) -> Result<(f64, f64, f64)> {
    if !(alpha.is_finite() && beta.is_finite() && alpha > 0.0 && beta > 0.0 && alpha + beta < PI) {
        return Err(Error::Domain(format!(
            "angles must satisfy 0 < alpha, 0 < beta, alpha + beta < pi, got ({alpha}, {beta})"
        )));
    }
    let sa = alpha.sin();
    let sb = beta.sin();
    let sc = (alpha + beta).sin();
    let denom = match model {
        ModelId::M1Perimeter => sa + sb + sc,
        ModelId::M2QuadraticStick | ModelId::M6EighthSphere => {
            (sa * sa + sb * sb + sc * sc).sqrt()
        }
        ModelId::M3TwoPiece => sa + sb,
        ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => (sa * sa + sb * sb).sqrt(),
    };
    Ok((sa / denom, sb / denom, sc / denom))
}

/// True iff the largest angle exceeds π/2.
pub fn is_obtuse(sample: &TriangleSample) -> bool {
    sample.alpha.max(sample.beta).max(sample.gamma) > FRAC_PI_2
}

/// Probability that one latent draw realizes a triangle.
pub fn acceptance_probability(model: ModelId) -> f64 {
    match model {
        ModelId::M1Perimeter => 0.25,
        ModelId::M2QuadraticStick => 3.0_f64.sqrt() * PI / 9.0,
        ModelId::M3TwoPiece | ModelId::M4QuadraticTwoPiece | ModelId::M5QuarterCircle => 1.0,
        ModelId::M6EighthSphere => m6_acceptance(),
    }
}

/// The m6 side-density normalizer C, computed once from its defining
/// integral.
pub(crate) fn m6_normalizer() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| constants::c_normalizer_m6().expect("m6 normalizer integral must converge"))
}

/// The m6 acceptance probability, computed once from its defining integrals.
fn m6_acceptance() -> f64 {
    static DELTA: OnceLock<f64> = OnceLock::new();
    *DELTA.get_or_init(|| constants::delta_m6().expect("m6 acceptance integral must converge"))
}

/// Bivariate side density. Variable convention: (x, y) = (a, b) for
/// m1/m2/m6 and (a, c) for m3/m4/m5. Zero outside the support.
pub fn side_density(model: ModelId, x: f64, y: f64) -> f64 {
    density::side_density(model, x, y)
}

/// Bivariate angle density for (α, β) = (x, y) on the simplex
/// {x > 0, y > 0, x + y < π}. Zero outside.
pub fn angle_density(model: ModelId, x: f64, y: f64) -> f64 {
    density::angle_density(model, x, y)
}

/// True iff (x, y) lies strictly inside the model's side support.
pub fn side_support(model: ModelId, x: f64, y: f64) -> bool {
    density::side_support(model, x, y)
}

/// Univariate density selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    SideA,
    SideC,
    AngleAlpha,
}

impl Variable {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "side_a" => Ok(Variable::SideA),
            "c" | "side_c" => Ok(Variable::SideC),
            "alpha" | "angle_alpha" => Ok(Variable::AngleAlpha),
            other => Err(Error::Precondition(format!(
                "unknown variable `{other}` (expected a, c, or alpha)"
            ))),
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Variable::SideA => "side_a",
            Variable::SideC => "side_c",
            Variable::AngleAlpha => "angle_alpha",
        }
    }
}

#[cfg(test)]
mod tests;
