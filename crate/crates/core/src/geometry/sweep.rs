use std::f64::consts::FRAC_PI_2;

use super::{inscribed_square, Scene};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::scalar::golden_section;

/// Largest tilt angle visited by grid sweeps.
pub const THETA_MAX: f64 = FRAC_PI_2 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepMinimum {
    pub theta_star: f64,
    pub mu: f64,
}

/// `(theta, s(theta))` on a uniform grid of `n` angles over `[0, THETA_MAX]`.
pub fn side_length_curve(scene: &Scene, n: usize, strategy: Strategy) -> Result<Vec<(f64, f64)>> {
    if n < 2 {
        return Err(Error::domain(format!("grid needs at least 2 points, got {n}")));
    }
    let thetas: Vec<f64> = (0..n)
        .map(|i| THETA_MAX * i as f64 / (n - 1) as f64)
        .collect();
    let sides = exec::map(strategy, &thetas, |&th| inscribed_square(scene, th).map(|sq| sq.s));
    thetas
        .into_iter()
        .zip(sides)
        .map(|(th, s)| s.map(|s| (th, s)))
        .collect()
}

/// Global minimum of `s(theta)` by grid sweep plus golden-section refinement.
pub fn brute_force_mu(scene: &Scene, grid_n: usize) -> Result<SweepMinimum> {
    brute_force_mu_with(scene, grid_n, Strategy::default())
}

/// [`brute_force_mu`] with an explicit execution strategy. The grid is
/// evaluated under `strategy`; the first grid minimum (lowest angle) wins
/// ties, so the result does not depend on the schedule.
pub fn brute_force_mu_with(scene: &Scene, grid_n: usize, strategy: Strategy) -> Result<SweepMinimum> {
    if grid_n < 100 {
        return Err(Error::domain(format!("brute-force sweep needs grid_n >= 100, got {grid_n}")));
    }
    let curve = side_length_curve(scene, grid_n, strategy)?;
    let best = curve
        .iter()
        .enumerate()
        .fold(0, |best, (i, &(_, s))| if s < curve[best].1 { i } else { best });
    let lo = curve[best.saturating_sub(1)].0;
    let hi = curve[(best + 1).min(grid_n - 1)].0;
    let refined = golden_section(lo, hi, 1e-12, |th| Ok(inscribed_square(scene, th)?.s))?;
    Ok(if refined.fx < curve[best].1 {
        SweepMinimum { theta_star: refined.x, mu: refined.fx }
    } else {
        SweepMinimum { theta_star: curve[best].0, mu: curve[best].1 }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    #[test]
    fn grid_too_small() {
        let sc = Scene::new(1.0).unwrap();
        assert!(matches!(brute_force_mu(&sc, 99), Err(Error::Domain(_))));
    }

    #[test]
    fn unit_minimum_beats_the_symmetric_square() {
        let sc = Scene::new(1.0).unwrap();
        let m = brute_force_mu(&sc, 400).unwrap();
        assert!(m.mu < SQRT_2 - 1.0);
    }
}
