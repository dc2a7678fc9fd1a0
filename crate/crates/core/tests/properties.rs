use genbern::text::{format_bipoly, format_rat_poly, parse_bipoly, parse_rat_poly};
use genbern::{AlphaScalar, BiPoly, GenBernTable, OmegaOperator, Poly, RatPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn rat_poly(max_len: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rational(), 0..max_len).prop_map(Poly::from_coeffs)
}

fn alpha_scalar() -> impl Strategy<Value = AlphaScalar> {
    rat_poly(4)
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(alpha_scalar(), 0..5).prop_map(Poly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in bipoly(), q in bipoly(), r in bipoly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
        prop_assert_eq!(p.mul(&BiPoly::one()), p.clone());
        prop_assert_eq!(p.add(&p.neg()), BiPoly::zero());
    }

    #[test]
    fn shift_composes(p in rat_poly(8), a in rational(), b in rational()) {
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
        prop_assert_eq!(p.shift(&Rational::zero()), p.clone());
        prop_assert_eq!(p.shift(&a).eval(&b), p.eval(&(&a + &b)));
    }

    #[test]
    fn difference_and_derivative(p in rat_poly(10)) {
        prop_assert_eq!(p.delta(), p.shift(&Rational::one()).sub(&p));
        prop_assert_eq!(p.delta().derive(1), p.derive(1).delta());
        prop_assert_eq!(p.derive(3), p.derive(1).derive(1).derive(1));
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in rat_poly(6), q in rat_poly(6), c in rational()) {
        prop_assert_eq!(p.mul(&q).eval(&c), p.eval(&c) * q.eval(&c));
        prop_assert_eq!(p.compose(&q).eval(&c), p.eval(&q.eval(&c)));
    }

    #[test]
    fn text_round_trip(p in bipoly(), r in rat_poly(8), c in rational()) {
        prop_assert_eq!(parse_bipoly(&format_bipoly(&p)).unwrap(), p);
        prop_assert_eq!(parse_rat_poly(&format_rat_poly(&r)).unwrap(), r);
        prop_assert_eq!(c.to_string().parse::<Rational>().unwrap(), c);
    }

    #[test]
    fn omega_is_linear(p in bipoly(), q in bipoly(), c in alpha_scalar(), offset in -2i64..3) {
        let t = GenBernTable::global();
        let omega = OmegaOperator::new(offset, t);
        prop_assert_eq!(omega.apply(&p.add(&q)), omega.apply(&p).add(&omega.apply(&q)));
        prop_assert_eq!(omega.apply(&p.scale(&c)), omega.apply(&p).scale(&c));
    }

    #[test]
    fn omega_of_shifted_power(n in 0u32..=10, c in rational(), offset in -1i64..2) {
        // Omega_g((x+c)^n) = B_n^(g)(x+c)
        let t = GenBernTable::global();
        let p = RatPoly::linear(c.clone()).power(n);
        let lhs = OmegaOperator::new(offset, t).apply_rat(&p);
        let rhs = t.shifted(n as usize, &c).shift_alpha(&Rational::from(offset));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn addition_formula(n in 0usize..=15, c in rational()) {
        let t = GenBernTable::global();
        prop_assert_eq!(t.shifted(n, &c), t.poly(n).shift_x(&c));
    }
}

#[test]
fn appell_derivative() {
    let t = GenBernTable::with_max(16);
    assert!(t.poly(0).sub(&BiPoly::one()).is_zero());
    for n in 1..=16 {
        let expected = t.poly(n - 1).scale_by(&Rational::from(n as i64));
        assert_eq!(t.poly(n).derive(1), expected, "n = {n}");
    }
}

#[test]
fn addition_at_fixed_points() {
    let t = GenBernTable::with_max(15);
    for c in [Rational::one(), Rational::from(2), Rational::new(-1, 2)] {
        for n in 0..=15 {
            let by_sum = (0..=n).fold(BiPoly::zero(), |acc, k| {
                let w = Rational::from(genbern::binomial(n as i64, k as i64).unwrap()) * c.pow((n - k) as u32);
                acc.add(&t.poly(k).scale_by(&w))
            });
            assert_eq!(t.poly(n).shift_x(&c), by_sum);
        }
    }
}

#[test]
fn difference_is_derivative_of_lower_order() {
    let t = GenBernTable::with_max(15);
    for n in 0..=15 {
        let lower = t.poly(n).shift_alpha(&Rational::from(-1));
        assert_eq!(t.poly(n).delta(), lower.derive(1), "n = {n}");
        assert_eq!(*t.poly_with_offset(n, -1), lower);
    }
}

#[test]
fn reflection() {
    let t = GenBernTable::with_max(15);
    let alpha_minus_x = BiPoly::from_coeffs(vec![AlphaScalar::alpha(), AlphaScalar::constant(Rational::from(-1))]);
    for n in 0..=15 {
        let p = t.poly(n);
        let sign = Rational::sign_power(n as i64);
        assert_eq!(t.reflected(n, &Rational::zero()), p.scale_by(&sign));
        // B_n^(a)(a - x) by composition
        assert_eq!(p.compose(&alpha_minus_x), p.scale_by(&sign));
        // at a = 0 the reflected polynomial is (-x)^n
        let at_zero = t.reflected(n, &Rational::zero()).eval_alpha(&Rational::zero());
        assert_eq!(at_zero, RatPoly::monomial(sign, n));
    }
}

#[test]
fn order_zero_gives_monomials() {
    let t = GenBernTable::with_max(12);
    for n in 0..=12 {
        assert_eq!(t.poly(n).eval_alpha(&Rational::zero()), RatPoly::monomial(Rational::one(), n));
    }
}

#[test]
fn operator_commutation() {
    let t = GenBernTable::with_max(15);
    let omega = OmegaOperator::new(0, &t);
    let lower = OmegaOperator::new(-1, &t);
    for n in 0..=15 {
        let xn = RatPoly::monomial(Rational::one(), n);
        assert_eq!(omega.apply_rat(&xn).derive(1), omega.apply_rat(&xn.derive(1)));
        assert_eq!(omega.apply_rat(&xn.delta()), lower.apply_rat(&xn.derive(1)));
    }
}

#[test]
fn table_grows_concurrently() {
    let t = GenBernTable::new();
    std::thread::scope(|s| {
        for k in 0..4 {
            let t = &t;
            s.spawn(move || {
                for n in (0..=20).rev().step_by(k + 1) {
                    let _ = t.poly_with_offset(n, -1);
                    assert_eq!(t.poly(n).degree(), Some(n));
                }
            });
        }
    });
    assert_eq!(*t.poly(20), genbern::bernoulli::gen_bernoulli_poly(20));
}
