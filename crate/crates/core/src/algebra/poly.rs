use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational_from_f64, to_f64, Rational, UniPoly};

/// Sparse multivariate polynomial over the rationals in `N` variables.
///
/// Exponent vectors map to nonzero coefficients; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly<const N: usize> {
    terms: BTreeMap<[u32; N], Rational>,
}

/// Polynomial in `(t, x)` with `t = sqrt(r)`.
pub type BivarPoly = SparsePoly<2>;
/// Polynomial in `(k, x, y)`.
pub type TrivarPoly = SparsePoly<3>;

impl<const N: usize> SparsePoly<N> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(exps: [u32; N], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ([u32; N], Rational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: [u32; N], c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [u32; N]) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::from_int(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational; N]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(v.clone(), k as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Floating evaluation with compensated (Neumaier) summation of the terms.
    pub fn eval_f64(&self, point: &[f64; N]) -> f64 {
        neumaier_sum(self.terms.iter().map(|(e, c)| {
            point
                .iter()
                .zip(e)
                .fold(to_f64(c), |acc, (&v, &k)| acc * v.powi(k as i32))
        }))
    }

    /// Sum of the absolute values of the terms at `point`; the natural scale
    /// for a floating residual.
    pub fn abs_term_sum(&self, point: &[f64; N]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                point
                    .iter()
                    .zip(e)
                    .fold(to_f64(c).abs(), |acc, (&v, &k)| acc * v.abs().powi(k as i32))
            })
            .sum()
    }

    /// Exact evaluation at the exact binary values of a floating point.
    pub fn eval_exact_f64(&self, point: &[f64; N]) -> Rational {
        let pt: [Rational; N] = std::array::from_fn(|i| rational_from_f64(point[i]));
        self.eval(&pt)
    }
}

impl SparsePoly<3> {
    /// Substitutes the first variable, leaving a polynomial in the other two.
    pub fn substitute_first(&self, v: &Rational) -> SparsePoly<2> {
        SparsePoly::from_terms(self.terms.iter().map(|(e, c)| {
            ([e[1], e[2]], c * num_traits::pow(v.clone(), e[0] as usize))
        }))
    }
}

impl SparsePoly<2> {
    /// Substitutes the first variable, leaving a univariate polynomial in the second.
    pub fn substitute_first(&self, v: &Rational) -> UniPoly {
        let deg = self.degree_in(1).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[1] as usize] += c * num_traits::pow(v.clone(), e[0] as usize);
        }
        UniPoly::new(coeffs)
    }

    /// Substitutes the second variable, leaving a univariate polynomial in the first.
    pub fn substitute_second(&self, v: &Rational) -> UniPoly {
        let swapped = SparsePoly::from_terms(self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone())));
        swapped.substitute_first(v)
    }

    /// The specialization `t = t0` (or `x = x0` for an `(x, y)` polynomial).
    pub fn specialize(&self, t0: &Rational) -> UniPoly {
        self.substitute_first(t0)
    }

    /// Coefficients with respect to the second variable, each a polynomial
    /// in the first: `self = sum_j coeffs[j](first) * second^j`.
    pub fn coefficients_in_second(&self) -> Vec<UniPoly> {
        let deg = self.degree_in(1).map_or(0, |d| d as usize + 1);
        let mut out = vec![Vec::<Rational>::new(); deg];
        for (e, c) in &self.terms {
            let slot = &mut out[e[1] as usize];
            if slot.len() <= e[0] as usize {
                slot.resize(e[0] as usize + 1, Rational::zero());
            }
            slot[e[0] as usize] += c;
        }
        out.into_iter().map(UniPoly::new).collect()
    }
}

pub(crate) fn neumaier_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

impl<const N: usize> fmt::Debug for SparsePoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})*{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<const N: usize> Add<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn add(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn sub(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<const N: usize> Mul<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = SparsePoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: [u32; N] = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Neg for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        SparsePoly::from_terms(self.terms.iter().map(|(e, c)| (*e, -c.clone())))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const N: usize> $tr<SparsePoly<N>> for SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $m(self, rhs: SparsePoly<N>) -> SparsePoly<N> {
                (&self).$m(&rhs)
            }
        }
        impl<const N: usize> $tr<&SparsePoly<N>> for SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $m(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
                (&self).$m(rhs)
            }
        }
        impl<const N: usize> $tr<SparsePoly<N>> for &SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $m(self, rhs: SparsePoly<N>) -> SparsePoly<N> {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const N: usize> Neg for SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        -&self
    }
}
