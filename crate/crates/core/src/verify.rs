//! Residual suite tying the numeric and exact routes together for a list of
//! radii. Each check reports the measured value next to its threshold.

use std::collections::BTreeMap;

use crate::algebra::{build_h, build_p, exact_sqrt, parse_rational, to_f64, Rational, SparsePoly};
use crate::error::{Error, Result};
use crate::geometry::{bound_m, brute_force_mu, Scene};
use crate::minimize::{difference_sign_changes, interval, minimize_mu, z, MuResult};

pub const TWO_PATH_TOL: f64 = 1e-8;
pub const STATIONARITY_TOL: f64 = 1e-9;
pub const CERTIFICATE_TOL: f64 = 1e-7;
pub const UNIMODALITY_GRID: usize = 10_000;
pub const BRUTE_FORCE_GRID: usize = 2000;

/// A radius given on the command line, kept exact when it is rational.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusSpec {
    pub text: String,
    pub value: f64,
    pub exact: Option<Rational>,
}

impl RadiusSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let exact = parse_rational(text).ok();
        let value = match &exact {
            Some(q) => to_f64(q),
            None => text
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("not a number: {text:?}")))?,
        };
        if !value.is_finite() || value < 1.0 {
            return Err(Error::domain(format!("r must be >= 1, got {text}")));
        }
        Ok(RadiusSpec { text: text.trim().to_string(), value, exact })
    }

    /// `t = sqrt(r)` as an exact rational when `r` is a rational square.
    pub fn exact_sqrt(&self) -> Option<Rational> {
        self.exact.as_ref().and_then(exact_sqrt)
    }
}

/// Largest coefficient magnitude of `poly` after substituting `first` for its
/// first variable, in floating point.
fn slice_max_coeff<const N: usize>(poly: &SparsePoly<N>, first: f64) -> f64 {
    let mut slices: BTreeMap<Vec<u32>, f64> = BTreeMap::new();
    for (e, c) in poly.terms() {
        *slices.entry(e[1..].to_vec()).or_insert(0.0) += to_f64(c) * first.powi(e[0] as i32);
    }
    slices.values().fold(0.0, |m, v| m.max(v.abs()))
}

/// `|p(t, x)| / max |coeff of p(t, .)|`, exact in `t` when possible.
pub fn p_scaled_residual(t_exact: Option<&Rational>, t: f64, x: f64) -> f64 {
    let p = build_p();
    match t_exact {
        Some(t0) => {
            let slice = p.specialize(t0);
            let value = slice.eval(&crate::algebra::rational_from_f64(x));
            (to_f64(&value) / to_f64(&slice.max_abs_coeff())).abs()
        }
        None => (p.eval_f64(&[t, x]) / slice_max_coeff(&p, t)).abs(),
    }
}

/// `|h(k, x, y)| / max |coeff of h(k, ., .)|`, exact in `k` when possible.
pub fn h_scaled_residual(k_exact: Option<&Rational>, k: f64, x: f64, y: f64) -> f64 {
    let h = build_h();
    match k_exact {
        Some(k0) => {
            let slice = h.substitute_first(k0);
            let value = slice.eval_exact_f64(&[x, y]);
            (to_f64(&value) / to_f64(&slice.max_abs_coeff())).abs()
        }
        None => (h.eval_f64(&[k, x, y]) / slice_max_coeff(&h, k)).abs(),
    }
}

/// Sign changes of successive differences of `z(r, .)` on an `n`-point grid
/// spanning the open unimodality interval.
pub fn unimodality_sign_changes(r: f64, n: usize) -> Result<usize> {
    let (a, b) = interval();
    let h = (b - a) / (n + 1) as f64;
    let values = (1..=n).map(|i| z(r, a + h * i as f64)).collect::<Result<Vec<_>>>()?;
    Ok(difference_sign_changes(&values))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub r: String,
    pub name: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
}

fn at_most(r: &RadiusSpec, name: &'static str, value: f64, threshold: f64) -> Check {
    Check { r: r.text.clone(), name, value, threshold, pass: value <= threshold }
}

/// Runs every check for one radius.
pub fn run_checks(r: &RadiusSpec) -> Result<Vec<Check>> {
    let mu: MuResult = minimize_mu(r.value, 1e-14)?;
    let sweep = brute_force_mu(&Scene::new(r.value)?, BRUTE_FORCE_GRID)?;
    let t_exact = r.exact_sqrt();
    let t = r.value.sqrt();
    let (a, b) = interval();
    let changes = unimodality_sign_changes(r.value, UNIMODALITY_GRID)?;
    Ok(vec![
        at_most(r, "two_path_agreement", (sweep.mu - mu.mu).abs(), TWO_PATH_TOL),
        at_most(r, "stationarity", mu.residual_zprime.abs(), STATIONARITY_TOL),
        Check {
            r: r.text.clone(),
            name: "interval_containment",
            value: mu.x_m,
            threshold: b,
            pass: mu.x_m > a && mu.x_m < b,
        },
        at_most(r, "p_root_residual", p_scaled_residual(t_exact.as_ref(), t, mu.x_m), CERTIFICATE_TOL),
        at_most(
            r,
            "h_identity_residual",
            h_scaled_residual(t_exact.as_ref(), t, mu.x_m, mu.mu * mu.mu),
            CERTIFICATE_TOL,
        ),
        Check {
            r: r.text.clone(),
            name: "unimodality",
            value: changes as f64,
            threshold: 1.0,
            pass: changes == 1,
        },
        at_most(r, "bound_m", mu.mu, bound_m(r.value)?),
    ])
}

pub fn run_suite(radii: &[RadiusSpec]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for r in radii {
        out.extend(run_checks(r)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_parsing() {
        let r = RadiusSpec::parse("7.29").unwrap();
        assert_eq!(r.exact_sqrt(), Some(Rational::new(27.into(), 10.into())));
        assert!(RadiusSpec::parse("2").unwrap().exact_sqrt().is_none());
        assert!(RadiusSpec::parse("0.5").is_err());
        assert!(RadiusSpec::parse("x").is_err());
        assert_eq!(RadiusSpec::parse("1e1").unwrap().value, 10.0);
    }

    #[test]
    fn suite_passes_at_unit_radius() {
        let checks = run_checks(&RadiusSpec::parse("1").unwrap()).unwrap();
        for c in &checks {
            assert!(c.pass, "{c:?}");
        }
    }
}
