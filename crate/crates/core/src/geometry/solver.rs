use std::f64::consts::FRAC_PI_2;

use super::{Scene, SquarePose};
use crate::error::{Error, Result};
use crate::scalar::bisect_predicate;

/// Brackets and tolerances for [`inscribed_square_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Upper end of the side-length bracket; `None` uses `2 sqrt(r) + 2`.
    pub s_upper: Option<f64>,
    /// Relative width at which the outer bisection on `s` stops.
    pub s_rel_tol: f64,
    /// Relative width at which the inner bisection on the slide offset stops.
    pub offset_rel_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            s_upper: None,
            s_rel_tol: 1e-13,
            offset_rel_tol: 1e-15,
        }
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..FRAC_PI_2).contains(&theta) {
        return Err(Error::domain(format!("tilt angle must lie in [0, pi/2), got {theta}")));
    }
    Ok(())
}

/// Slide offset at which a square of side `s` and tilt `theta`, pushed along
/// `L` from the right, first touches `C1`.
///
/// The set of offsets where the square meets the closed unit disk is an
/// interval containing 0 (the bottom vertex then sits on the tangent point),
/// so the right end of that interval is found by bisection from 0.
pub fn touch_offset(scene: &Scene, theta: f64, s: f64, rel_tol: f64) -> Result<f64> {
    let hits = |u: f64| scene.clearance1(&SquarePose::on_line(u, theta, s)) <= 0.0;
    let (lo, _hi) = bisect_predicate(0.0, 2.0 + s, rel_tol, hits)?;
    Ok(lo)
}

/// The unique inscribed square at tilt `theta` (default tolerances).
pub fn inscribed_square(scene: &Scene, theta: f64) -> Result<SquarePose> {
    inscribed_square_with(scene, theta, &SolverOptions::default())
}

/// The unique inscribed square at tilt `theta`.
///
/// Outer bisection on the side length: a square slid against `C1` either
/// falls short of `Cr` (too small) or overlaps it (too large).
pub fn inscribed_square_with(scene: &Scene, theta: f64, opts: &SolverOptions) -> Result<SquarePose> {
    check_theta(theta)?;
    let s_hi = opts
        .s_upper
        .unwrap_or(2.0 * scene.r().sqrt() + 2.0);
    if s_hi.is_nan() || s_hi <= 0.0 {
        return Err(Error::domain(format!("side-length bracket must be positive, got {s_hi}")));
    }
    let placed = |s: f64| -> Result<SquarePose> {
        let u = touch_offset(scene, theta, s, opts.offset_rel_tol)?;
        Ok(SquarePose::on_line(u, theta, s))
    };

    let mut failure = None;
    let reaches_r = |s: f64| -> bool {
        if s <= 0.0 {
            return false;
        }
        match placed(s) {
            Ok(sq) => scene.clearance_r(&sq) <= 0.0,
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        }
    };
    let bracket = bisect_predicate(0.0, s_hi, opts.s_rel_tol, reaches_r);
    if let Some(e) = failure {
        return Err(e);
    }
    let (lo, hi) = bracket.map_err(|_| {
        Error::convergence(format!(
            "side length bracket (0, {s_hi}] does not enclose the inscribed square at theta={theta}"
        ))
    })?;
    placed(0.5 * (lo + hi))
}
