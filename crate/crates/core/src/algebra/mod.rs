//! Exact rational polynomial algebra: the coefficient polynomials
//! `E, F, C, B, D, G, H`, the degree-10 polynomial `p(t, x)`, the trivariate
//! `h(k, x, y)`, specialization, evaluation and resultants.

mod certificates;
mod json;
mod poly;
mod resultant;
mod uni;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use certificates::{build_h, build_p, coeff_polys, CoeffPolys};
pub use json::{PolyDoc, TermDoc};
pub use poly::{BivarPoly, SparsePoly, TrivarPoly};
pub use resultant::{bareiss_determinant, resultant, resultant_chain_check, resultant_in_y, ChainCheck};
pub use uni::UniPoly;

pub type Rational = BigRational;

/// Parses `"a/b"`, an integer, or a plain decimal such as `"7.29"` into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::domain(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::domain(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = int_part.abs() * &scale + frac_part;
        let n = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(n, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(v: f64) -> Rational {
    Rational::from_float(v).expect("finite float")
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
