use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::certificates::{build_h, build_p};
use super::poly::SparsePoly;
use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Clears denominators of `coeffs`, returning integer coefficients and the multiplier.
fn integer_row(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    (ints, lcm)
}

/// Resultant of `a` and `b` as the determinant of their Sylvester matrix.
///
/// The matrix has `deg b` shifted rows of `a` first, then `deg a` shifted
/// rows of `b`, with coefficients laid out lowest degree first. Under this
/// convention `Res(x - u, x - v) = v - u`; it equals the textbook
/// `prod (alpha_i - beta_j)` form times `(-1)^(deg a * deg b)`.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return Err(Error::DegenerateInput("resultant of a zero polynomial".into()));
    };
    let size = m + n;
    let (a_int, a_scale) = integer_row(a.coeffs());
    let (b_int, b_scale) = integer_row(b.coeffs());
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a_int.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b_int.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let det = bareiss_determinant(mat);
    let scale = num_traits::pow(a_scale, n) * num_traits::pow(b_scale, m);
    Ok(Rational::new(det, scale))
}

/// `Res_y(poly(x, y), q(y))` as an exact polynomial in `x`, by evaluating at
/// integer abscissae and interpolating.
///
/// `poly` is in the variables `(x, y)`. The result has degree at most
/// `deg q * deg_x(poly)`; abscissae where the leading `y`-coefficient of
/// `poly` vanishes are skipped so every sample has full `y`-degree.
pub fn resultant_in_y(poly: &SparsePoly<2>, q: &UniPoly) -> Result<UniPoly> {
    let Some(m) = q.degree() else {
        return Err(Error::DegenerateInput("q is the zero polynomial".into()));
    };
    if poly.is_zero() {
        return Err(Error::DegenerateInput("the (x, y) polynomial is zero".into()));
    }
    let by_y = poly.coefficients_in_second();
    let lead = by_y.last().expect("nonzero polynomial has a leading coefficient");
    let bound = m * poly.degree_in(0).unwrap_or(0) as usize;
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut candidate = 0i64;
    while xs.len() <= bound {
        let x0 = Rational::from_integer(candidate.into());
        candidate += 1;
        if lead.eval(&x0).is_zero() {
            continue;
        }
        let slice = poly.substitute_first(&x0);
        ys.push(resultant(&slice, q)?);
        xs.push(x0);
    }
    Ok(UniPoly::interpolate(&xs, &ys))
}

/// `f(x) = Res_y(h(k0, x, y), q(y))` and `g = Res_x(f, p(k0, x))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainCheck {
    pub f: UniPoly,
    pub g: Rational,
}

/// Runs the two-step resultant elimination for a candidate polynomial
/// `q_spec(y)` satisfied by `lambda(k0)`.
///
/// If `q_spec` shares a factor with every slice of `h`, `f` vanishes
/// identically and `g` is reported as zero.
pub fn resultant_chain_check(k0: &Rational, q_spec: &UniPoly) -> Result<ChainCheck> {
    if *k0 < Rational::one() {
        return Err(Error::domain(format!("k0 must be >= 1, got {k0}")));
    }
    let h_slice = build_h().substitute_first(k0);
    let f = resultant_in_y(&h_slice, q_spec)?;
    let p_slice = build_p().specialize(k0);
    let g = if f.is_zero() {
        Rational::zero()
    } else {
        resultant(&f, &p_slice)?
    };
    Ok(ChainCheck { f, g })
}
