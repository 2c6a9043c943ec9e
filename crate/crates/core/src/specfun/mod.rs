//! Special functions backing the closed-form densities and constants:
//! complete/incomplete elliptic integrals (modulus convention), the real
//! dilogarithm, the Gamma function, and one specific ₃F₂ series.
//!
//! All operations are pure functions of their arguments; there is no shared
//! mutable state, so everything here is safe to call concurrently.

mod carlson;
mod dilog;
mod gamma;
mod hyper;

pub use dilog::dilog;
pub use gamma::{gamma_fn, gamma_q, ln_gamma};
pub use hyper::{hyp3f2_paper, hyp3f2_paper_budget, HYP3F2_DEFAULT_BUDGET};

use crate::error::{Error, Result};
use carlson::{carlson_rd, carlson_rf};

/// Complete elliptic integral of the first kind,
/// K(k) = ∫₀^{π/2} (1 − k² sin²θ)^{−1/2} dθ, modulus convention.
///
/// Diverges logarithmically as k → 1, so k = 1 is out of domain.
pub fn ellip_k(k: f64) -> Result<f64> {
    if !k.is_finite() || !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "ellip_k requires 0 <= k < 1, got {k}"
        )));
    }
    Ok(carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0))
}

/// K as a function of the complementary parameter mc = 1 − k².
///
/// Near the singular modulus k → 1 the complementary parameter is the
/// quantity callers can usually form without cancellation, which keeps the
/// logarithmic blow-up accurate.
pub fn ellip_k_mc(mc: f64) -> Result<f64> {
    if !mc.is_finite() || mc <= 0.0 || mc > 1.0 {
        return Err(Error::Domain(format!(
            "ellip_k_mc requires 0 < mc <= 1, got {mc}"
        )));
    }
    Ok(carlson_rf(0.0, mc, 1.0))
}

/// Complete elliptic integral of the second kind,
/// E(k) = ∫₀^{π/2} √(1 − k² sin²θ) dθ. E(1) = 1 is finite and allowed.
pub fn ellip_e(k: f64) -> Result<f64> {
    if !k.is_finite() || !(0.0..=1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "ellip_e requires 0 <= k <= 1, got {k}"
        )));
    }
    if k == 1.0 {
        return Ok(1.0);
    }
    let mc = (1.0 - k) * (1.0 + k);
    Ok(carlson_rf(0.0, mc, 1.0) - k * k / 3.0 * carlson_rd(0.0, mc, 1.0))
}

/// E as a function of the complementary parameter mc = 1 − k².
pub fn ellip_e_mc(mc: f64) -> Result<f64> {
    if !mc.is_finite() || !(0.0..=1.0).contains(&mc) {
        return Err(Error::Domain(format!(
            "ellip_e_mc requires 0 <= mc <= 1, got {mc}"
        )));
    }
    if mc == 0.0 {
        return Ok(1.0);
    }
    Ok(carlson_rf(0.0, mc, 1.0) - (1.0 - mc) / 3.0 * carlson_rd(0.0, mc, 1.0))
}

/// Incomplete elliptic integral of the first kind,
/// F(ω, k) = ∫₀^ω (1 − k² sin²θ)^{−1/2} dθ for 0 ≤ ω ≤ π/2.
///
/// k = 1 is accepted while sin ω < 1, where the integral still converges.
pub fn ellip_f_incomplete(omega: f64, k: f64) -> Result<f64> {
    if !k.is_finite() || !(0.0..=1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "ellip_f_incomplete requires 0 <= k <= 1, got k = {k}"
        )));
    }
    ellip_f_mc(omega, (1.0 - k) * (1.0 + k))
}

/// F as a function of the complementary parameter mc = 1 − k².
///
/// The half-axis argument 1 − k² sin²ω is assembled as cos²ω + mc sin²ω,
/// which stays exact however close (ω, k) get to (π/2, 1).
pub fn ellip_f_mc(omega: f64, mc: f64) -> Result<f64> {
    if !omega.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&omega) {
        return Err(Error::Domain(format!(
            "ellip_f requires 0 <= omega <= pi/2, got {omega}"
        )));
    }
    if !mc.is_finite() || !(0.0..=1.0).contains(&mc) {
        return Err(Error::Domain(format!(
            "ellip_f requires 0 <= mc <= 1, got mc = {mc}"
        )));
    }
    let s = omega.sin();
    if mc == 0.0 && s >= 1.0 {
        return Err(Error::Domain(
            "ellip_f diverges at omega = pi/2 with k = 1".into(),
        ));
    }
    let c2 = omega.cos() * omega.cos();
    let arg = c2 + mc * s * s;
    if s == 0.0 {
        return Ok(0.0);
    }
    Ok(s * carlson_rf(c2, arg, 1.0))
}

#[cfg(test)]
mod tests;
