use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Upper bound on the side of a square whose upper-left side is tangent to
/// `C1` while its bottom vertex lies left of the point on `L` equidistant
/// from both circles: `2r / (r + sqrt(8) sqrt(r) + 1)`.
///
/// Accepts any `r > 0`.
pub fn bound_m(r: f64) -> Result<f64> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::domain(format!("bound_m needs r > 0, got {r}")));
    }
    Ok(2.0 * r / (r + 8f64.sqrt() * r.sqrt() + 1.0))
}

fn check_pivot_args(ell: f64, phi: f64, beta: f64) -> Result<f64> {
    if !ell.is_finite() || ell <= 0.0 {
        return Err(Error::domain(format!("segment length must be positive, got {ell}")));
    }
    if !(phi > 0.0 && phi < FRAC_PI_2) {
        return Err(Error::domain(format!("phi must lie in (0, pi/2), got {phi}")));
    }
    if !(beta > FRAC_PI_2 - phi && beta < FRAC_PI_2) {
        return Err(Error::domain(format!(
            "beta must lie in (pi/2 - phi, pi/2) = ({}, {}), got {beta}",
            FRAC_PI_2 - phi,
            FRAC_PI_2
        )));
    }
    Ok(PI - phi - beta)
}

/// Splits a sliding segment of length `ell` at its pivot.
///
/// The segment has one end on the x-axis, meeting it at angle `beta`, and
/// the other on the line through the origin at angle `phi`. Returns
/// `(b, c)` with `b + c = ell`, where `b` is measured from the x-axis end,
/// determined by `b cot(beta) = c cot(gamma)` with `gamma = pi - phi - beta`.
pub fn pivot_balance(ell: f64, phi: f64, beta: f64) -> Result<(f64, f64)> {
    let gamma = check_pivot_args(ell, phi, beta)?;
    let (cot_b, cot_g) = (1.0 / beta.tan(), 1.0 / gamma.tan());
    let b = ell * cot_g / (cot_b + cot_g);
    Ok((b, ell - b))
}

/// Height of the pivot of the family of lines perpendicular to the sliding
/// segment through its own pivot:
/// `ell (cos(gamma) + cos(gamma - beta) cos(beta)) / sin(gamma + beta)`.
pub fn pivot_y(ell: f64, phi: f64, beta: f64) -> Result<f64> {
    let gamma = check_pivot_args(ell, phi, beta)?;
    Ok(ell * (gamma.cos() + (gamma - beta).cos() * beta.cos()) / (gamma + beta).sin())
}
