//! One-dimensional bracketing solvers shared by the geometric sweep and the
//! analytic minimizer.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_8;
const CGOLD: f64 = 0.381_966_011_250_105_1;

/// Result of a scalar minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMin {
    pub x: f64,
    pub fx: f64,
    pub evaluations: usize,
}

/// Bisection on a monotone predicate.
///
/// `pred(lo)` must be true and `pred(hi)` false (or the reverse, as long as
/// the endpoints disagree). Returns the final bracket `(lo, hi)`, with `lo`
/// on the side where `pred(lo)` held. Stops once the bracket is no wider
/// than `rel_tol * max(1, |hi|)` or stops shrinking in floating point.
pub fn bisect_predicate<F>(mut lo: f64, mut hi: f64, rel_tol: f64, mut pred: F) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> bool,
{
    let at_lo = pred(lo);
    if at_lo == pred(hi) {
        return Err(Error::convergence(format!(
            "predicate does not change between {lo} and {hi}"
        )));
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi || (hi - lo).abs() <= rel_tol * hi.abs().max(lo.abs()).max(1.0) {
            return Ok((lo, hi));
        }
        if pred(mid) == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Bisection on the sign of a continuous function.
pub fn bisect_root<F>(mut lo: f64, mut hi: f64, tol: f64, mut f: F) -> Result<(f64, usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    let mut evaluations = 2;
    if f_lo == 0.0 {
        return Ok((lo, evaluations));
    }
    if f_hi == 0.0 {
        return Ok((hi, evaluations));
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::convergence(format!(
            "no sign change on [{lo}, {hi}]"
        )));
    }
    while (hi - lo).abs() > tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid)?;
        evaluations += 1;
        if f_mid == 0.0 {
            return Ok((mid, evaluations));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), evaluations))
}

/// Golden-section search for the minimum of a unimodal function on `[a, b]`.
pub fn golden_section<F>(mut a: f64, mut b: f64, tol: f64, mut f: F) -> Result<ScalarMin>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
        return Err(Error::domain(format!("empty bracket [{a}, {b}]")));
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut evaluations = 2;
    while (b - a) > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
        evaluations += 1;
        if evaluations > 10_000 {
            break;
        }
    }
    let (x, fx) = if fc < fd { (c, fc) } else { (d, fd) };
    Ok(ScalarMin { x, fx, evaluations })
}

/// Brent's minimizer (golden section with parabolic interpolation) on `[a, b]`.
///
/// `tol` is the relative tolerance on the abscissa; it is floored at
/// `sqrt(f64::EPSILON)` internally because below that the function values
/// no longer resolve the minimum.
#[allow(clippy::explicit_counter_loop)]
pub fn brent_min<F>(mut a: f64, mut b: f64, tol: f64, max_iter: usize, mut f: F) -> Result<ScalarMin>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
        return Err(Error::domain(format!("empty bracket [{a}, {b}]")));
    }
    let rel = tol.max(f64::EPSILON.sqrt());
    let abs_floor = 1e-300;
    let mut x = a + CGOLD * (b - a);
    let mut w = x;
    let mut v = x;
    let mut fx = f(x)?;
    let mut fw = fx;
    let mut fv = fx;
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    let mut evaluations = 1;

    for _ in 0..max_iter {
        let xm = 0.5 * (a + b);
        let tol1 = rel * x.abs() + abs_floor;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            return Ok(ScalarMin { x, fx, evaluations });
        }
        let mut golden = true;
        if e.abs() > tol1 {
            // parabola through x, w, v
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let e_prev = e;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = CGOLD * e;
        }
        let u = if d.abs() >= tol1 { x + d } else { x + tol1.copysign(d) };
        let fu = f(u)?;
        evaluations += 1;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    Err(Error::convergence(format!(
        "Brent minimizer exceeded {max_iter} iterations"
    )))
}
