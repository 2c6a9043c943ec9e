use super::*;
use std::f64::consts::{FRAC_PI_2, PI};

fn default_spec() -> IntegrationSpec {
    IntegrationSpec::default()
}

#[test]
fn polynomial_and_zero_integrands() {
    let r = integrate_1d(|x| 8.0 * x, 0.0, 1.0, &default_spec()).unwrap();
    assert!(r.converged);
    assert!((r.value - 4.0).abs() < 1e-12);

    let r = integrate_1d(|x| 8.0 * x, 0.0, 0.5, &default_spec()).unwrap();
    assert!((r.value - 1.0).abs() < 1e-12);

    let r = integrate_1d(|_| 0.0, 0.0, 1.0, &default_spec()).unwrap();
    assert_eq!(r.value, 0.0);
    assert!(r.converged);
    assert!(r.evaluations > 0);
}

#[test]
fn arcsine_singularity_at_upper_endpoint() {
    // Distance-aware integrand: full accuracy through the endpoint wall.
    let spec = default_spec().singular(false, true);
    let r = integrate_1d_aware(|x, _, du| 1.0 / (du * (1.0 + x)).sqrt(), 0.0, 1.0, &spec).unwrap();
    assert!(r.converged);
    assert!((r.value - FRAC_PI_2).abs() < 1e-12, "got {}", r.value);

    // The plain form cannot resolve x closer to 1 than one ulp, which leaves
    // an O(sqrt(ulp)) tail for an inverse-square-root wall.
    let r = integrate_1d(|x| 1.0 / (1.0 - x * x).sqrt(), 0.0, 1.0, &spec).unwrap();
    assert!(r.converged);
    assert!((r.value - FRAC_PI_2).abs() < 1e-7, "got {}", r.value);
}

#[test]
fn singularity_robustness_suite() {
    // (1-x)^(-1/2), -ln(1-x), x^(-1/2): all analytic values within 1e-10.
    let spec = default_spec().singular(true, true);
    let cases: [(Box<dyn Fn(f64, f64, f64) -> f64>, f64); 3] = [
        (Box::new(|_, _, du: f64| 1.0 / du.sqrt()), 2.0),
        (Box::new(|_, _, du: f64| -du.ln()), 1.0),
        (Box::new(|_, dl: f64, _| 1.0 / dl.sqrt()), 2.0),
    ];
    for (f, expected) in cases {
        let r = integrate_1d_aware(&f, 0.0, 1.0, &spec).unwrap();
        assert!(r.converged);
        assert!(
            (r.value - expected).abs() < 1e-10,
            "got {}, want {expected}",
            r.value
        );
    }
}

#[test]
fn smooth_reference_integrals() {
    let r = integrate_1d(|x: f64| x.sin(), 0.0, PI, &default_spec()).unwrap();
    assert!((r.value - 2.0).abs() < 1e-12);
    let r = integrate_1d(|x: f64| (-x * x).exp(), -6.0, 6.0, &default_spec()).unwrap();
    assert!((r.value - PI.sqrt()).abs() < 1e-12);
}

#[test]
fn linearity_on_smooth_functions() {
    let spec = default_spec();
    let f = |x: f64| x.sin();
    let g = |x: f64| (3.0 * x).cos();
    let (alpha, beta) = (2.5, -1.25);
    let lhs = integrate_1d(|x| alpha * f(x) + beta * g(x), 0.0, 2.0, &spec)
        .unwrap()
        .value;
    let rhs = alpha * integrate_1d(f, 0.0, 2.0, &spec).unwrap().value
        + beta * integrate_1d(g, 0.0, 2.0, &spec).unwrap().value;
    assert!((lhs - rhs).abs() < 1e-11);
}

#[test]
fn determinism_bit_identical() {
    let f = |x: f64| (x * 7.3).sin() / (1.0 + x * x);
    let a = integrate_1d(f, 0.0, 3.0, &default_spec()).unwrap();
    let b = integrate_1d(f, 0.0, 3.0, &default_spec()).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.evaluations, b.evaluations);

    let spec = default_spec().singular(true, true);
    let g = |x: f64| 1.0 / x.sqrt();
    let a = integrate_1d(g, 0.0, 1.0, &spec).unwrap();
    let b = integrate_1d(g, 0.0, 1.0, &spec).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
}

#[test]
fn interior_nonfinite_is_an_error() {
    let r = integrate_1d(|x| 1.0 / (x - 0.5), 0.0, 1.0, &default_spec());
    assert!(matches!(r, Err(Error::NonFinite(_))));
}

#[test]
fn budget_exhaustion_reports_nonconvergence() {
    let spec = IntegrationSpec {
        absolute_tolerance: 1e-14,
        relative_tolerance: 1e-14,
        max_evaluations: 200,
        ..Default::default()
    };
    let r = integrate_1d(|x: f64| (50.0 * x).sin().abs(), 0.0, 1.0, &spec).unwrap();
    assert!(!r.converged);
    assert!(r.evaluations <= 242);
}

#[test]
fn split_integration_handles_interior_singular_point() {
    // integral of |x - 1|^(-1/2) over (0, 2) = 4; distances to the interior
    // split point arrive as sub-interval endpoint distances.
    let spec = default_spec();
    let r = integrate_split_aware(
        |x: f64, dl: f64, du: f64| {
            // Nodes can round onto the split point itself; the distance to
            // the singularity is then whichever sub-interval distance is
            // smaller.
            let d = if x < 1.0 {
                du
            } else if x > 1.0 {
                dl
            } else {
                dl.min(du)
            };
            1.0 / d.sqrt()
        },
        &[0.0, 1.0, 2.0],
        &spec,
    )
    .unwrap();
    assert!(r.converged);
    assert!((r.value - 4.0).abs() < 1e-10, "got {}", r.value);
    assert!(integrate_split(|x| x, &[0.0], &spec).is_err());
    assert!(integrate_split(|x| x, &[1.0, 0.0], &spec).is_err());
}

#[test]
fn unit_square_normalizes() {
    let region = Region::new(0.0, 1.0, |_| Some((0.0, 1.0)));
    let r = integrate_2d(|_, _| 1.0, &region, &default_spec()).unwrap();
    assert!(r.converged);
    assert!((r.value - 1.0).abs() < 1e-10);
    assert!(region.contains(0.5, 0.5));
    assert!(!region.contains(1.5, 0.5));
}

#[test]
fn triangle_area_with_exact_inner_limits() {
    // The simplex x > 0, y > 0, x + y < 1 has area 1/2.
    let region = Region::new(0.0, 1.0, |x| Some((0.0, 1.0 - x)));
    let r = integrate_2d(|_, _| 1.0, &region, &default_spec()).unwrap();
    assert!((r.value - 0.5).abs() < 1e-10);
}

#[test]
fn iterated_integral_with_inner_walls() {
    // integral over the unit square of 1/sqrt(y (1-y)) dy dx = pi.
    let region = Region::new(0.0, 1.0, |_| Some((0.0, 1.0)));
    let r = integrate_2d_aware(
        |_, _, dl, du| 1.0 / (dl * du).sqrt(),
        &region,
        &default_spec(),
    )
    .unwrap();
    assert!(r.converged);
    assert!((r.value - PI).abs() < 1e-9, "got {}", r.value);

    // Plain form of the same integrand: ulp-floor accuracy still far below
    // the default 2D use cases.
    let r = integrate_2d(|_, y| 1.0 / (y * (1.0 - y)).sqrt(), &region, &default_spec()).unwrap();
    assert!((r.value - PI).abs() < 1e-6, "got {}", r.value);
}

#[test]
fn invalid_specs_are_rejected() {
    let mut spec = default_spec();
    spec.absolute_tolerance = 0.0;
    assert!(integrate_1d(|x| x, 0.0, 1.0, &spec).is_err());
    let mut spec = default_spec();
    spec.max_evaluations = 10;
    assert!(integrate_1d(|x| x, 0.0, 1.0, &spec).is_err());
    assert!(integrate_1d(|x| x, 1.0, 0.0, &default_spec()).is_err());
    assert!(integrate_1d(|x| x, 0.0, f64::INFINITY, &default_spec()).is_err());
}
