//! Six models of random triangles under equality constraints.
//!
//! Each model fixes a constraint on the sides (a linear or quadratic sum
//! equal to one) and a generating mechanism (stick breaking, a uniform
//! opposite angle, or a point on a circle/sphere octant). The crate provides,
//! for every model:
//!
//! * generative samplers with rejection handling ([`models`]),
//! * closed-form bivariate and univariate densities with exact supports,
//! * the special functions those densities need — elliptic integrals,
//!   the dilogarithm, the Gamma function, and one particular ₃F₂ series
//!   ([`specfun`]),
//! * adaptive quadrature with endpoint-singularity handling ([`quadrature`]),
//! * reproducible chunk-parallel Monte Carlo estimators ([`montecarlo`]),
//! * a machine-readable table of every reference constant with its
//!   evaluation paths ([`constants`]), and
//! * the verification suites wiring all of the above together ([`verify`]).

pub mod constants;
pub mod error;
pub mod models;
pub mod montecarlo;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
