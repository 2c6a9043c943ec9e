//! Adaptive 1D and 2D numerical integration.
//!
//! The default 1D rule is globally adaptive 21-point Gauss-Kronrod
//! bisection. When an [`IntegrationSpec`] flags a singular endpoint the
//! whole interval is handled by a tanh-sinh (double-exponential) rule
//! instead, which absorbs inverse-square-root and logarithmic walls at
//! either end. Interior singular points must be split by the caller
//! ([`integrate_split`]); indicator-function masking of 2D regions is not
//! supported — [`integrate_2d`] takes exact inner limits per outer abscissa
//! ([`Region`]), because masking destroys the convergence order.
//!
//! Integrands come in two forms. The plain form `f(x)` is enough whenever
//! the integrand can be evaluated from x alone. Integrands with walls that
//! need resolution finer than one ulp of x — for example an inverse square
//! root vanishing exactly at an endpoint — can take the distance-aware form
//! `f(x, dist_lower, dist_upper)`, where the tanh-sinh rule supplies exact
//! endpoint distances far below the ulp floor (the `_aware` entry points).
//!
//! Everything here is deterministic: identical inputs produce bit-identical
//! results, with no dependence on thread count (the routines are pure and
//! single-threaded; callers may run many integrations concurrently).

mod gauss_kronrod;
mod tanh_sinh;

use crate::error::{Error, Result};

/// Tolerances and budget for one integration.
#[derive(Clone, Copy, Debug)]
pub struct IntegrationSpec {
    pub absolute_tolerance: f64,
    pub relative_tolerance: f64,
    pub max_evaluations: u64,
    /// Integrable singularity at the lower endpoint.
    pub singular_lower: bool,
    /// Integrable singularity at the upper endpoint.
    pub singular_upper: bool,
}

impl Default for IntegrationSpec {
    fn default() -> Self {
        Self {
            absolute_tolerance: 1e-10,
            relative_tolerance: 1e-10,
            max_evaluations: 10_000_000,
            singular_lower: false,
            singular_upper: false,
        }
    }
}

impl IntegrationSpec {
    pub fn with_tolerances(absolute: f64, relative: f64) -> Self {
        Self {
            absolute_tolerance: absolute,
            relative_tolerance: relative,
            ..Self::default()
        }
    }

    pub fn singular(mut self, lower: bool, upper: bool) -> Self {
        self.singular_lower = lower;
        self.singular_upper = upper;
        self
    }

    pub fn max_evaluations(mut self, n: u64) -> Self {
        self.max_evaluations = n;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.absolute_tolerance > 0.0) || !(self.relative_tolerance > 0.0) {
            return Err(Error::Precondition(
                "integration tolerances must be positive".into(),
            ));
        }
        if self.max_evaluations < 100 {
            return Err(Error::Precondition(
                "max_evaluations must be at least 100".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of one integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    /// When set, `error_estimate` is at or below the requested tolerance.
    pub converged: bool,
}

fn validate_interval(lower: f64, upper: f64) -> Result<()> {
    if !lower.is_finite() || !upper.is_finite() || lower >= upper {
        return Err(Error::Precondition(format!(
            "integration interval must satisfy lower < upper, got [{lower}, {upper}]"
        )));
    }
    Ok(())
}

/// Integrate `f` over the finite interval `[lower, upper]`.
pub fn integrate_1d(
    f: impl Fn(f64) -> f64,
    lower: f64,
    upper: f64,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    integrate_1d_aware(|x, _, _| f(x), lower, upper, spec)
}

/// Distance-aware variant: the integrand receives
/// `(x, x - lower, upper - x)` with endpoint distances exact to far below
/// the ulp resolution of x when a singular flag routes to tanh-sinh.
pub fn integrate_1d_aware(
    f: impl Fn(f64, f64, f64) -> f64,
    lower: f64,
    upper: f64,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    spec.validate()?;
    validate_interval(lower, upper)?;
    if spec.singular_lower || spec.singular_upper {
        tanh_sinh::tanh_sinh(&f, lower, upper, spec)
    } else {
        gauss_kronrod::adaptive_gk(&|x| f(x, x - lower, upper - x), lower, upper, spec)
    }
}

/// Integrate `f` over `[points[0], points[last]]`, splitting at the interior
/// entries (known singular abscissae). Every sub-interval is integrated with
/// both endpoints treated as singular.
pub fn integrate_split(
    f: impl Fn(f64) -> f64,
    points: &[f64],
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    integrate_split_aware(|x, _, _| f(x), points, spec)
}

/// Distance-aware variant of [`integrate_split`]; distances are measured to
/// the endpoints of the enclosing sub-interval.
pub fn integrate_split_aware(
    f: impl Fn(f64, f64, f64) -> f64,
    points: &[f64],
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    if points.len() < 2 || points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Precondition(
            "integrate_split requires at least two strictly increasing points".into(),
        ));
    }
    let piece_spec = (*spec).singular(true, true);
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    let mut converged = true;
    for w in points.windows(2) {
        let r = integrate_1d_aware(&f, w[0], w[1], &piece_spec)?;
        value += r.value;
        error += r.error_estimate;
        evaluations += r.evaluations;
        converged &= r.converged;
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
        converged,
    })
}

/// A plane region described by an outer interval in x and exact inner
/// y-limits per x. `y_bounds` returns `None` where the slice is empty.
/// `x_splits` marks interior abscissae where the inner geometry is not
/// smooth (cusps of the marginal), so the outer integral splits there.
pub struct Region {
    pub x_lo: f64,
    pub x_hi: f64,
    pub x_splits: Vec<f64>,
    pub y_bounds: Box<dyn Fn(f64) -> Option<(f64, f64)> + Send + Sync>,
}

impl Region {
    pub fn new(
        x_lo: f64,
        x_hi: f64,
        y_bounds: impl Fn(f64) -> Option<(f64, f64)> + Send + Sync + 'static,
    ) -> Self {
        Self {
            x_lo,
            x_hi,
            x_splits: Vec::new(),
            y_bounds: Box::new(y_bounds),
        }
    }

    pub fn with_splits(mut self, splits: &[f64]) -> Self {
        self.x_splits = splits.to_vec();
        self
    }

    /// Membership test derived from the same inner limits the integrator
    /// uses.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        if !(x > self.x_lo && x < self.x_hi) {
            return false;
        }
        match (self.y_bounds)(x) {
            Some((lo, hi)) => y > lo && y < hi,
            None => false,
        }
    }
}

/// Iterated adaptive integration of `f(x, y)` over a [`Region`].
pub fn integrate_2d(
    f: impl Fn(f64, f64) -> f64,
    region: &Region,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    integrate_2d_aware(|x, y, _, _| f(x, y), region, spec)
}

/// Iterated adaptive integration with a distance-aware inner integrand
/// `f(x, y, y_dist_lower, y_dist_upper)`.
///
/// Inner integrals run tanh-sinh with both endpoints treated as singular
/// (the supports in this crate have inverse-square-root walls), at a
/// tolerance two decades tighter than the outer request. The outer integral
/// is tanh-sinh per split piece. The returned evaluation count is the total
/// number of `f` calls.
pub fn integrate_2d_aware(
    f: impl Fn(f64, f64, f64, f64) -> f64,
    region: &Region,
    spec: &IntegrationSpec,
) -> Result<QuadratureResult> {
    spec.validate()?;
    if !(region.x_lo < region.x_hi) {
        return Err(Error::Precondition(
            "region must have a non-empty x interval".into(),
        ));
    }
    let inner_spec = IntegrationSpec {
        absolute_tolerance: (spec.absolute_tolerance * 1e-2).max(1e-14),
        relative_tolerance: (spec.relative_tolerance * 1e-2).max(1e-14),
        max_evaluations: 1_000_000,
        singular_lower: true,
        singular_upper: true,
    };

    use std::cell::Cell;
    let inner_evals = Cell::new(0_u64);
    let inner_failure = Cell::new(false);
    let inner_error: Cell<Option<Error>> = Cell::new(None);

    let outer_integrand = |x: f64| -> f64 {
        let (y_lo, y_hi) = match (region.y_bounds)(x) {
            Some(b) => b,
            None => return 0.0,
        };
        if !(y_lo < y_hi) {
            return 0.0;
        }
        match integrate_1d_aware(|y, dl, du| f(x, y, dl, du), y_lo, y_hi, &inner_spec) {
            Ok(r) => {
                inner_evals.set(inner_evals.get() + r.evaluations);
                if !r.converged {
                    inner_failure.set(true);
                }
                r.value
            }
            Err(e) => {
                if inner_error.take().is_none() {
                    inner_error.set(Some(e));
                }
                inner_failure.set(true);
                0.0
            }
        }
    };

    let mut cut_points = vec![region.x_lo];
    cut_points.extend(
        region
            .x_splits
            .iter()
            .copied()
            .filter(|s| *s > region.x_lo && *s < region.x_hi),
    );
    cut_points.push(region.x_hi);

    let outer_spec = (*spec).singular(true, true);
    let mut value = 0.0;
    let mut error = 0.0;
    let mut outer_evals = 0;
    let mut converged = true;
    for w in cut_points.windows(2) {
        let r = integrate_1d(&outer_integrand, w[0], w[1], &outer_spec)?;
        value += r.value;
        error += r.error_estimate;
        outer_evals += r.evaluations;
        converged &= r.converged;
    }
    if let Some(e) = inner_error.take() {
        return Err(e);
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations: outer_evals + inner_evals.get(),
        converged: converged && !inner_failure.get(),
    })
}

#[cfg(test)]
mod tests;
