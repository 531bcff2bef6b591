//! The side-length function `z(x)` parametrised by the height `x` of the
//! upper-left vertex, its derivative, and the minimizer producing
//! `x_m(r)` and `mu(r) = z(r, x_m)`.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::scalar::{bisect_root, brent_min};

/// Radicands in `[-RADICAND_SLACK, 0)` are treated as zero.
pub const RADICAND_SLACK: f64 = 1e-14;
/// Radicands below this make `z'` ill-conditioned and are rejected.
pub const DERIVATIVE_GUARD: f64 = 1e-13;
/// Endpoint offset for the minimizer.
pub const INTERVAL_EPS: f64 = 1e-9;
/// Number of scouting points used to bracket the valley.
pub const SCOUT_POINTS: usize = 64;

/// The open interval `(1 - 1/sqrt(2), 1)` on which `z` is unimodal.
pub fn interval() -> (f64, f64) {
    (1.0 - FRAC_1_SQRT_2, 1.0)
}

fn check_r(r: f64) -> Result<()> {
    if !r.is_finite() || r < 1.0 {
        return Err(Error::domain(format!("r must be a finite real >= 1, got {r}")));
    }
    Ok(())
}

fn clamped_sqrt(v: f64, what: &str) -> Result<f64> {
    if v.is_nan() || v < -RADICAND_SLACK {
        return Err(Error::domain(format!("negative radicand {v:e} in {what}")));
    }
    Ok(v.max(0.0).sqrt())
}

/// Side length `z(x)` of the square with bottom vertex on `L`, upper-left
/// vertex on `C1` at height `x`, and top vertex on `Cr`.
pub fn z(r: f64, x: f64) -> Result<f64> {
    check_r(r)?;
    let t = r.sqrt();
    let sqrt_b = clamped_sqrt(2.0 * x - x * x, "2x - x^2")?;
    let w = 2.0 * t - x - sqrt_b;
    let inner = clamped_sqrt(r * r - w * w, "r^2 - (2 sqrt(r) - x - sqrt(2x - x^2))^2")?;
    let h = r - x - inner;
    Ok((x * x + h * h).sqrt())
}

/// Squared side length through the expanded form
/// `2((x - t^2) sqrt(a) + (2t - x) sqrt(B) + x^2 + (-t^2 + 2t - 1) x + t^4 - 2t^2)`
/// with `B = 2x - x^2`, `a = (4t - 2x) sqrt(B) + (4t - 2) x + t^4 - 4t^2`.
pub fn area_expanded(r: f64, x: f64) -> Result<f64> {
    check_r(r)?;
    let t = r.sqrt();
    let t2 = t * t;
    let sqrt_b = clamped_sqrt(2.0 * x - x * x, "B")?;
    let a = (-2.0 * x + 4.0 * t) * sqrt_b + (4.0 * t - 2.0) * x + t2 * t2 - 4.0 * t2;
    let sqrt_a = clamped_sqrt(a, "a")?;
    Ok(2.0
        * ((x - t2) * sqrt_a
            + (-x + 2.0 * t) * sqrt_b
            + x * x
            + (-t2 + 2.0 * t - 1.0) * x
            + t2 * t2
            - 2.0 * t2))
}

/// `dz/dx`, from the closed form of `(1/2) dA/dx` with `A = z^2`:
///
/// ```text
/// (x - t^2)((2t - 1) sqrt(B) + 2x^2 - (2t + 3) x + 2t) / (sqrt(a) sqrt(B)) + sqrt(a)
///     + (x^2 - (2t + 1) x + 2t) / sqrt(B) - sqrt(B) + 2x - t^2 + 2t - 1
/// ```
///
/// divided by `z`.
pub fn z_prime(r: f64, x: f64) -> Result<f64> {
    check_r(r)?;
    let t = r.sqrt();
    let t2 = t * t;
    let b = 2.0 * x - x * x;
    if b.is_nan() || b < DERIVATIVE_GUARD {
        return Err(Error::domain(format!("z' undefined: B = {b:e} at x = {x}")));
    }
    let sqrt_b = b.sqrt();
    let a = (-2.0 * x + 4.0 * t) * sqrt_b + (4.0 * t - 2.0) * x + t2 * t2 - 4.0 * t2;
    if a.is_nan() || a < DERIVATIVE_GUARD {
        return Err(Error::domain(format!("z' undefined: a = {a:e} at x = {x}")));
    }
    let sqrt_a = a.sqrt();
    let half_da = (x - t2) * ((2.0 * t - 1.0) * sqrt_b + 2.0 * x * x - (2.0 * t + 3.0) * x + 2.0 * t)
        / (sqrt_a * sqrt_b)
        + sqrt_a
        + (x * x - (2.0 * t + 1.0) * x + 2.0 * t) / sqrt_b
        - sqrt_b
        + 2.0 * x
        - t2
        + 2.0 * t
        - 1.0;
    Ok(half_da / z(r, x)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuResult {
    pub r: f64,
    pub x_m: f64,
    pub mu: f64,
    /// Total function evaluations (scout, Brent and derivative polish).
    pub iterations: usize,
    pub residual_zprime: f64,
}

/// Counts sign changes in successive differences of `values`, ignoring exact ties.
pub fn difference_sign_changes(values: &[f64]) -> usize {
    let signs: Vec<bool> = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| *d != 0.0)
        .map(|d| d > 0.0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Minimizes `z(r, .)` over `(1 - 1/sqrt(2), 1)`.
///
/// A 64-point scout brackets the valley, Brent narrows it using `z` alone,
/// and bisection on the sign of `z'` pins `x_m` to `tol`.
pub fn minimize_mu(r: f64, tol: f64) -> Result<MuResult> {
    check_r(r)?;
    if tol.is_nan() || tol < 1e-14 || !tol.is_finite() {
        return Err(Error::domain(format!("tolerance must be >= 1e-14, got {tol}")));
    }
    let (left, right) = interval();
    let (lo, hi) = (left + INTERVAL_EPS, right - INTERVAL_EPS);
    let xs: Vec<f64> = (0..SCOUT_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (SCOUT_POINTS - 1) as f64)
        .collect();
    let zs = xs.iter().map(|&x| z(r, x)).collect::<Result<Vec<_>>>()?;
    let changes = difference_sign_changes(&zs);
    if changes > 1 {
        return Err(Error::convergence(format!(
            "z is not unimodal on the scout grid for r={r} ({changes} sign changes)"
        )));
    }
    let best = zs
        .iter()
        .enumerate()
        .fold(0, |b, (i, &v)| if v < zs[b] { i } else { b });
    let a = xs[best.saturating_sub(1)];
    let b = xs[(best + 1).min(SCOUT_POINTS - 1)];
    let coarse = brent_min(a, b, 1e-13, 500, |x| z(r, x))?;
    let mut iterations = SCOUT_POINTS + coarse.evaluations;

    let mut x_m = coarse.x;
    let dz = |x: f64| z_prime(r, x);
    let mut delta = 1e-7_f64.max(4.0 * tol);
    while delta < hi - lo {
        let (pa, pb) = ((x_m - delta).max(lo), (x_m + delta).min(hi));
        match (dz(pa), dz(pb)) {
            (Ok(fa), Ok(fb)) if fa <= 0.0 && fb >= 0.0 => {
                let (root, evals) = bisect_root(pa, pb, tol, dz)?;
                iterations += evals;
                x_m = root;
                break;
            }
            _ => delta *= 8.0,
        }
        iterations += 2;
    }
    let mu = z(r, x_m)?;
    let residual_zprime = z_prime(r, x_m).unwrap_or(f64::NAN);
    Ok(MuResult { r, x_m, mu, iterations, residual_zprime })
}

/// `xi(k) = x_m(k^2)`.
pub fn xi(k: f64) -> Result<f64> {
    Ok(minimize_mu(k_squared(k)?, 1e-14)?.x_m)
}

/// `lambda(k) = mu(k^2)^2`.
pub fn lambda_fn(k: f64) -> Result<f64> {
    let mu = minimize_mu(k_squared(k)?, 1e-14)?.mu;
    Ok(mu * mu)
}

fn k_squared(k: f64) -> Result<f64> {
    if !k.is_finite() || k < 1.0 {
        return Err(Error::domain(format!("k must be a finite real >= 1, got {k}")));
    }
    Ok(k * k)
}
