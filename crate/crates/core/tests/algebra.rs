use morikawa::algebra::{
    build_h, build_p, coeff_polys, parse_rational, rational_from_f64, resultant,
    resultant_chain_check, to_f64, BivarPoly, Rational, UniPoly,
};
use morikawa::minimize::{lambda_fn, minimize_mu, xi, z};
use morikawa::verify::{h_scaled_residual, p_scaled_residual};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The seven coefficient polynomials evaluated straight from their
/// factored definitions, in the order E, F, C, B, D, G, H.
fn coeff_oracle(t: &Rational, x: &Rational) -> [Rational; 7] {
    let p = |v: &Rational, n: i32| num_traits::pow(v.clone(), n as usize);
    let e = int(-2) * x + int(4) * t;
    let f = (int(4) * t - int(2)) * x + p(t, 4) - int(4) * p(t, 2);
    let c = (int(6) * t - int(3)) * x + p(t, 4) - int(2) * p(t, 3) - int(3) * p(t, 2);
    let b = -p(x, 2) + int(2) * x;
    let d = int(4) * p(x, 3) - (int(2) * p(t, 2) + int(6) * t + int(7)) * p(x, 2)
        + (int(2) * p(t, 3) + int(3) * p(t, 2) + int(10) * t) * x
        - int(2) * p(t, 3);
    let g = int(8) * p(x, 3) + (int(-4) * p(t, 2) - int(16)) * p(x, 2)
        + (int(4) * p(t, 3) - int(2) * p(t, 2) + int(6)) * x
        - int(4) * p(t, 3)
        + int(8) * p(t, 2)
        - int(4) * t;
    let h = (int(4) * p(t, 2) - int(16) * t) * p(x, 3)
        + (-p(t, 4) + int(4) * p(t, 3) - int(10) * p(t, 2) + int(40) * t) * p(x, 2)
        + (int(2) * p(t, 4) - int(8) * p(t, 3) + int(4) * p(t, 2) - int(20) * t + int(2)) * x
        + int(4) * p(t, 2);
    [e, f, c, b, d, g, h]
}

fn p_oracle(t: &Rational, x: &Rational) -> Rational {
    let [e, f, c, b, d, g, h] = coeff_oracle(t, x);
    let lin = &e * &h + &f * &g - int(2) * &c * &d;
    let rest = &c * &c * &b + &d * &d - &e * &b * &g - &f * &h;
    &b * &lin * &lin - &rest * &rest
}

fn h_oracle(k: f64, x: f64, y: f64) -> f64 {
    let (c1, c2, c3, c4) = (k * k - x, k.powi(4), 2.0 * k - x, 2.0 * x - x * x);
    let qq = y - x * x - c1 * c1 - c2 + c3 * c3 + c4;
    let a = qq * qq + 4.0 * c3 * c3 * c4 - 4.0 * c1 * c1 * c2 + 4.0 * c1 * c1 * c3 * c3 + 4.0 * c1 * c1 * c4;
    let b = 8.0 * c1 * c1 * c3 + 4.0 * c3 * qq;
    a * a - c4 * b * b
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.random_range(-40..=40), rng.random_range(1..=12))
}

#[test]
fn coefficient_polynomials_match_definitions() {
    let polys = coeff_polys();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let (t, x) = (random_rational(&mut rng), random_rational(&mut rng));
        let oracle = coeff_oracle(&t, &x);
        for ((name, poly), want) in polys.named().into_iter().zip(oracle) {
            assert_eq!(poly.eval(&[t.clone(), x.clone()]), want, "{name} at t={t} x={x}");
        }
    }
}

#[test]
fn expansion_matches_direct_assembly() {
    let p = build_p();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let (t, x) = (random_rational(&mut rng), random_rational(&mut rng));
        assert_eq!(p.eval(&[t.clone(), x.clone()]), p_oracle(&t, &x), "t={t} x={x}");
    }
}

#[test]
fn unit_specializations_match_hand_values() {
    let polys = coeff_polys();
    let one = int(1);
    assert_eq!(polys.d.specialize(&one), UniPoly::from_ints(&[-2, 15, -15, 4]));
    assert_eq!(polys.g.specialize(&one), UniPoly::from_ints(&[0, 8, -20, 8]));
    assert_eq!(polys.h.specialize(&one), UniPoly::from_ints(&[4, -20, 33, -12]));
    assert_eq!(polys.b.specialize(&q(7, 3)), UniPoly::from_ints(&[0, 2, -1]));

    let mut expect = [-512, 6144, -32000, 94272, -171752, 199224, -146800, 67296, -18688, 3072, -256];
    expect.reverse();
    assert_eq!(build_p().specialize(&one), UniPoly::from_ints(&expect));
}

#[test]
fn sextic_terms_cancel() {
    let polys = coeff_polys();
    let diff = &(&polys.d * &polys.d) - &(&(&polys.e * &polys.b) * &polys.g);
    assert!(diff.terms().all(|(e, _)| e[1] != 6), "x^6 survives in D^2 - EBG");
    let d2 = &polys.d * &polys.d;
    assert_eq!(d2.coeff([0, 6]), int(16));
}

#[test]
fn degree_ten_with_nonvanishing_leading_coefficient() {
    let p = build_p();
    assert_eq!(p.degree_in(1), Some(10));
    for t in [int(1), int(2), q(3, 2)] {
        assert_eq!(p.specialize(&t).degree(), Some(10), "t={t}");
    }
    // leading coefficient -128 (t^2 + 1)^2, never zero for real t
    let lead: Vec<_> = p.terms().filter(|(e, _)| e[1] == 10).collect();
    let want = BivarPoly::from_terms([
        ([4, 10], int(-128)),
        ([2, 10], int(-256)),
        ([0, 10], int(-128)),
    ]);
    assert_eq!(lead.len(), want.len());
    for (e, c) in lead {
        assert_eq!(*c, want.coeff(*e));
    }
}

#[test]
fn specialization_is_an_evaluation_homomorphism() {
    let p = build_p();
    let x = q(1, 3);
    assert_eq!(p.specialize(&int(2)).eval(&x), p.eval(&[int(2), x.clone()]));
    assert_eq!(coeff_polys().b.eval(&[int(5), int(1)]), int(1));
    assert_eq!(p.eval(&[int(1), int(0)]), p_oracle(&int(1), &int(0)));
}

#[test]
fn minimizers_are_roots_of_p() {
    for r in ["1", "4", "9/4", "16"] {
        let rq = parse_rational(r).unwrap();
        let t = morikawa::algebra::exact_sqrt(&rq).unwrap();
        let m = minimize_mu(to_f64(&rq), 1e-14).unwrap();
        let res = p_scaled_residual(Some(&t), to_f64(&t), m.x_m);
        assert!(res <= 1e-7, "r={r}: {res}");
    }
}

#[test]
fn h_matches_its_definition_and_vanishes_on_the_curve() {
    let h = build_h();
    assert_eq!(h.degree_in(2), Some(4));
    assert!(h.eval(&[int(1), int(1), int(2)]).is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let k: f64 = rng.random_range(1.0..4.0);
        let x: f64 = rng.random_range(0.35..0.95);
        let y = z(k * k, x).unwrap().powi(2);
        let direct = h.eval_f64(&[k, x, y]);
        let oracle = h_oracle(k, x, y);
        let scale = h.abs_term_sum(&[k, x, y]);
        assert!((direct - oracle).abs() <= 1e-9 * scale);
        assert!(direct.abs() <= 1e-7 * scale, "k={k} x={x}");
    }
}

#[test]
fn h_vanishes_at_xi_lambda() {
    for k in [1.0, 1.5, 2.0, 3.0] {
        let exact = rational_from_f64(k);
        let res = h_scaled_residual(Some(&exact), k, xi(k).unwrap(), lambda_fn(k).unwrap());
        assert!(res <= 1e-7, "k={k}: {res}");
    }
}

#[test]
fn resultant_spot_values() {
    let lin = |u: i64| UniPoly::linear(int(u));
    assert_eq!(resultant(&lin(2), &lin(7)).unwrap(), int(5));
    let a = UniPoly::from_ints(&[-1, 0, 1]);
    let b = UniPoly::from_ints(&[-4, 0, 1]);
    assert_eq!(resultant(&a, &b).unwrap(), int(9));
    assert_eq!(resultant(&a, &a).unwrap(), int(0));
    assert!(resultant(&UniPoly::zero(), &a).is_err());
}

#[test]
fn chain_check_cases() {
    let k0 = int(2);
    let one = UniPoly::constant(int(1));
    let c = resultant_chain_check(&k0, &one).unwrap();
    assert_eq!(c.f, one);
    assert!(c.g.is_one());

    // q = y - lambda~ turns f into a slice of h, which nearly vanishes at xi
    let lam = rational_from_f64(lambda_fn(2.0).unwrap());
    let c = resultant_chain_check(&k0, &UniPoly::linear(lam)).unwrap();
    let at_xi = c.f.eval_f64(xi(2.0).unwrap());
    assert!(at_xi.abs() <= 1e-7 * to_f64(&c.f.max_abs_coeff()), "{at_xi}");

    let coprime = UniPoly::from_ints(&[-7, 3, 1]);
    assert!(!resultant_chain_check(&k0, &coprime).unwrap().g.is_zero());
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 1..=4)
        .prop_map(|c| UniPoly::from_ints(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_is_multiplicative(a in small_poly(), b in small_poly(), c in small_poly()) {
        let ab = &a * &b;
        let lhs = resultant(&ab, &c).unwrap();
        let rhs = resultant(&a, &c).unwrap() * resultant(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
