use super::poly::{BivarPoly, TrivarPoly};
use super::Rational;

/// The seven coefficient polynomials in `(t, x)` whose combination gives `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffPolys {
    pub e: BivarPoly,
    pub f: BivarPoly,
    pub c: BivarPoly,
    pub b: BivarPoly,
    pub d: BivarPoly,
    pub g: BivarPoly,
    pub h: BivarPoly,
}

impl CoeffPolys {
    /// `(name, polynomial)` pairs in the order `E, F, C, B, D, G, H`.
    pub fn named(&self) -> [(&'static str, &BivarPoly); 7] {
        [
            ("E", &self.e),
            ("F", &self.f),
            ("C", &self.c),
            ("B", &self.b),
            ("D", &self.d),
            ("G", &self.g),
            ("H", &self.h),
        ]
    }
}

/// Term list helper: `(t_exp, x_exp, coeff)`.
fn tx(terms: &[(u32, u32, i64)]) -> BivarPoly {
    BivarPoly::from_terms(
        terms
            .iter()
            .map(|&(i, j, c)| ([i, j], Rational::from_integer(c.into()))),
    )
}

pub fn coeff_polys() -> CoeffPolys {
    // E = -2x + 4t
    let e = tx(&[(0, 1, -2), (1, 0, 4)]);
    // F = (4t - 2)x + t^4 - 4t^2
    let f = tx(&[(1, 1, 4), (0, 1, -2), (4, 0, 1), (2, 0, -4)]);
    // C = (6t - 3)x + t^4 - 2t^3 - 3t^2
    let c = tx(&[(1, 1, 6), (0, 1, -3), (4, 0, 1), (3, 0, -2), (2, 0, -3)]);
    // B = -x^2 + 2x
    let b = tx(&[(0, 2, -1), (0, 1, 2)]);
    // D = 4x^3 - (2t^2 + 6t + 7)x^2 + (2t^3 + 3t^2 + 10t)x - 2t^3
    let d = tx(&[
        (0, 3, 4),
        (2, 2, -2),
        (1, 2, -6),
        (0, 2, -7),
        (3, 1, 2),
        (2, 1, 3),
        (1, 1, 10),
        (3, 0, -2),
    ]);
    // G = 8x^3 + (-4t^2 - 16)x^2 + (4t^3 - 2t^2 + 6)x - 4t^3 + 8t^2 - 4t
    let g = tx(&[
        (0, 3, 8),
        (2, 2, -4),
        (0, 2, -16),
        (3, 1, 4),
        (2, 1, -2),
        (0, 1, 6),
        (3, 0, -4),
        (2, 0, 8),
        (1, 0, -4),
    ]);
    // H = (4t^2 - 16t)x^3 + (-t^4 + 4t^3 - 10t^2 + 40t)x^2
    //     + (2t^4 - 8t^3 + 4t^2 - 20t + 2)x + 4t^2
    let h = tx(&[
        (2, 3, 4),
        (1, 3, -16),
        (4, 2, -1),
        (3, 2, 4),
        (2, 2, -10),
        (1, 2, 40),
        (4, 1, 2),
        (3, 1, -8),
        (2, 1, 4),
        (1, 1, -20),
        (0, 1, 2),
        (2, 0, 4),
    ]);
    CoeffPolys { e, f, c, b, d, g, h }
}

/// `p(t, x) = B (EH + FG - 2CD)^2 - (C^2 B + D^2 - EBG - FH)^2`, of degree 10 in `x`.
pub fn build_p() -> BivarPoly {
    let CoeffPolys { e, f, c, b, d, g, h } = coeff_polys();
    let two = BivarPoly::from_int(2);
    let lin = &(&(&e * &h) + &(&f * &g)) - &(&(&two * &c) * &d);
    let rest = &(&(&(&c * &c) * &b) + &(&d * &d)) - &(&(&(&e * &b) * &g) + &(&f * &h));
    &(&b * &lin.pow(2)) - &rest.pow(2)
}

/// `h(k, x, y)`, vanishing at `(k, xi(k), lambda(k))`:
///
/// ```text
/// (Q^2 + 4 c3^2 c4 - 4 c1^2 c2 + 4 c1^2 c3^2 + 4 c1^2 c4)^2 - c4 (8 c1^2 c3 + 4 c3 Q)^2
/// ```
///
/// with `Q = y - x^2 - c1^2 - c2 + c3^2 + c4`, `c1 = k^2 - x`, `c2 = k^4`,
/// `c3 = 2k - x`, `c4 = 2x - x^2`.
pub fn build_h() -> TrivarPoly {
    let k = TrivarPoly::var(0);
    let x = TrivarPoly::var(1);
    let y = TrivarPoly::var(2);
    let int = TrivarPoly::from_int;

    let x2 = x.pow(2);
    let c1 = &k.pow(2) - &x;
    let c2 = k.pow(4);
    let c3 = &(&int(2) * &k) - &x;
    let c4 = &(&int(2) * &x) - &x2;

    let c1_2 = c1.pow(2);
    let c3_2 = c3.pow(2);
    let q = &(&(&(&(&y - &x2) - &c1_2) - &c2) + &c3_2) + &c4;
    let four = int(4);
    let first = &(&(&(&q.pow(2) + &(&four * &(&c3_2 * &c4))) - &(&four * &(&c1_2 * &c2)))
        + &(&four * &(&c1_2 * &c3_2)))
        + &(&four * &(&c1_2 * &c4));
    let second = &(&int(8) * &(&c1_2 * &c3)) + &(&four * &(&c3 * &q));
    &first.pow(2) - &(&c4 * &second.pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn b_is_free_of_t() {
        let polys = coeff_polys();
        assert_eq!(polys.b.degree_in(0), Some(0));
        assert_eq!(polys.b, tx(&[(0, 2, -1), (0, 1, 2)]));
    }

    #[test]
    fn p_has_degree_ten() {
        let p = build_p();
        assert_eq!(p.degree_in(1), Some(10));
    }

    #[test]
    fn h_vanishes_at_unit_point() {
        let h = build_h();
        assert_eq!(h.degree_in(2), Some(4));
        assert_eq!(h.eval(&[q(1), q(1), q(2)]), q(0));
    }
}
