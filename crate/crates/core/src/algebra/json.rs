//! JSON export of exact polynomials:
//! `{"vars": [...], "terms": [{"e": [..], "n": "<num>", "d": "<den>"}, ...]}`
//! with big integers written as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::SparsePoly;
use super::{Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub e: Vec<u32>,
    pub n: String,
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

fn term(e: Vec<u32>, c: &Rational) -> TermDoc {
    TermDoc {
        e,
        n: c.numer().to_string(),
        d: c.denom().to_string(),
    }
}

fn parse_coeff(t: &TermDoc) -> Result<Rational> {
    let n: BigInt = t
        .n
        .parse()
        .map_err(|_| Error::Format(format!("bad numerator {:?}", t.n)))?;
    let d: BigInt = t
        .d
        .parse()
        .map_err(|_| Error::Format(format!("bad denominator {:?}", t.d)))?;
    if d <= BigInt::from(0) {
        return Err(Error::Format(format!("denominator must be positive, got {d}")));
    }
    let c = Rational::new(n.clone(), d.clone());
    if c.numer() != &n || c.denom() != &d {
        return Err(Error::Format(format!("coefficient {n}/{d} is not in lowest terms")));
    }
    Ok(c)
}

impl PolyDoc {
    pub fn from_sparse<const N: usize>(poly: &SparsePoly<N>, vars: [&str; N]) -> Self {
        PolyDoc {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: poly.terms().map(|(e, c)| term(e.to_vec(), c)).collect(),
        }
    }

    pub fn from_uni(poly: &UniPoly, var: &str) -> Self {
        PolyDoc {
            vars: vec![var.to_string()],
            terms: poly
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(i, c)| term(vec![i as u32], c))
                .collect(),
        }
    }

    pub fn to_sparse<const N: usize>(&self) -> Result<SparsePoly<N>> {
        if self.vars.len() != N {
            return Err(Error::Format(format!(
                "expected {N} variables, document has {}",
                self.vars.len()
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let e: [u32; N] = t
                .e
                .as_slice()
                .try_into()
                .map_err(|_| Error::Format(format!("exponent {:?} has wrong arity", t.e)))?;
            terms.push((e, parse_coeff(t)?));
        }
        Ok(SparsePoly::from_terms(terms))
    }

    pub fn to_uni(&self) -> Result<UniPoly> {
        let sparse: SparsePoly<1> = self.to_sparse()?;
        let deg = sparse.degree_in(0).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::from_integer(0.into()); deg + 1];
        for (e, c) in sparse.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}
