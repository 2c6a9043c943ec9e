//! Carlson symmetric elliptic integrals via the duplication algorithm.
//!
//! `RF` and `RD` converge quadratically for any admissible arguments, which
//! gives uniform accuracy across the whole modulus range, including the
//! near-singular regime where Legendre-form series or polynomial fits lose
//! digits. The Legendre forms K, E, F in the parent module are thin wrappers
//! over these two kernels.

/// Relative error target of the duplication iteration. The truncated Taylor
/// tail is O(r), so aiming slightly below f64 epsilon leaves the rounding of
/// the final series as the dominant error.
const DUPLICATION_TOL: f64 = 1e-17;
const MAX_DUPLICATIONS: usize = 80;

/// RF(x, y, z) for x, y, z >= 0 with at most one of them zero.
///
/// Callers are expected to have validated the arguments.
pub(super) fn carlson_rf(x0: f64, y0: f64, z0: f64) -> f64 {
    let a0 = (x0 + y0 + z0) / 3.0;
    let q = (3.0 * DUPLICATION_TOL).powf(-1.0 / 6.0)
        * (a0 - x0).abs().max((a0 - y0).abs()).max((a0 - z0).abs());

    let (mut x, mut y, mut z, mut a) = (x0, y0, z0, a0);
    let mut scale = 1.0;
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale <= a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        scale *= 0.25;
    }

    let dx = (a0 - x0) * scale / a;
    let dy = (a0 - y0) * scale / a;
    let dz = -dx - dy;
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt()
}

/// RD(x, y, z) for x, y >= 0 (not both zero) and z > 0.
pub(super) fn carlson_rd(x0: f64, y0: f64, z0: f64) -> f64 {
    let a0 = (x0 + y0 + 3.0 * z0) / 5.0;
    let q = (0.25 * DUPLICATION_TOL).powf(-1.0 / 6.0)
        * (a0 - x0).abs().max((a0 - y0).abs()).max((a0 - z0).abs());

    let (mut x, mut y, mut z, mut a) = (x0, y0, z0, a0);
    let mut scale = 1.0;
    let mut sum = 0.0;
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale <= a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        sum += scale / (sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        scale *= 0.25;
    }

    let dx = (a0 - x0) * scale / a;
    let dy = (a0 - y0) * scale / a;
    let dz = -(dx + dy) / 3.0;
    let e2 = dx * dy - 6.0 * dz * dz;
    let e3 = (3.0 * dx * dy - 8.0 * dz * dz) * dz;
    let e4 = 3.0 * (dx * dy - dz * dz) * dz * dz;
    let e5 = dx * dy * dz * dz * dz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    3.0 * sum + scale * series / (a * a.sqrt())
}
