use fano_hodge::curves::{
    curve_diamond, jacobian_diamond, projective_space_diamond, sym_curve_diamond,
};
use fano_hodge::fano_even::{euler_closed_form, fano_even_diamond};
use fano_hodge::fano_odd::{cvx_kernel, fano_odd_diamond};
use fano_hodge::motivic::{m_polynomial, mu_e};
use fano_hodge::stacky::fonarev_rank;
use fano_hodge::{
    binomial, gauss_binomial, BiPoly, BigInt, BigUint, Error, EvenFanoParams, LaurentPoly,
    OddFanoParams,
};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-50i64..50, 0..8)).prop_map(|(low, cs)| {
        LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect())
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0i64..4, 0i64..4), -20i64..20), 0..6).prop_map(BiPoly::from_terms)
}

fn q_product_formula(n: i64, m: i64) -> LaurentPoly {
    let one_minus = |e: i64| &LaurentPoly::one() - &LaurentPoly::var_pow(e);
    let num: LaurentPoly = (n - m + 1..=n).map(one_minus).product();
    let den: LaurentPoly = (1..=m).map(one_minus).product();
    num.exact_divide(&den).unwrap()
}

proptest! {
    #[test]
    fn pascal_matches_product_formula((n, m) in (0i64..30).prop_flat_map(|n| (Just(n), 0..=n))) {
        prop_assert_eq!(gauss_binomial(n, m).unwrap(), q_product_formula(n, m));
    }

    #[test]
    fn division_undoes_multiplication(a in laurent(), b in nonzero_laurent()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let v = BigInt::from(1);
        prop_assert_eq!((&a * &b).eval(&v).unwrap(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn bipoly_ring_laws(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).transpose(), &a.transpose() * &b.transpose());
    }

    #[test]
    fn lefschetz_measure_is_multiplicative(a in laurent(), b in laurent()) {
        let (a, b) = (a.shift(6), b.shift(6));
        prop_assert_eq!(mu_e(&(&a * &b)), &mu_e(&a) * &mu_e(&b));
    }

    #[test]
    fn e_polynomial_is_multiplicative(g1 in 0i64..4, n1 in 0i64..4, g2 in 0i64..4, n2 in 0i64..3) {
        let a = sym_curve_diamond(g1, n1).unwrap();
        let b = jacobian_diamond(g2).unwrap().kunneth_product(&projective_space_diamond(n2).unwrap());
        let prod = a.kunneth_product(&b);
        prop_assert_eq!(prod.e_polynomial(), &a.e_polynomial() * &b.e_polynomial());
        let one = BigInt::from(1);
        prop_assert_eq!(prod.euler(), prod.e_polynomial().eval(&one, &one));
    }

    #[test]
    fn symmetric_powers(g in 0i64..7, n in 0i64..8) {
        let s = sym_curve_diamond(g, n).unwrap();
        prop_assert_eq!(s.dimension() as i64, n);
        prop_assert_eq!(s.h(n, 0), BigUint::try_from(binomial(g, n).unwrap()).unwrap());
        if n >= 1 {
            prop_assert_eq!(s.betti(1).unwrap(), BigUint::from((2 * g) as u64));
        }
        // χ(Sym^n C) is the t^n coefficient of (1-t)^{2g-2}
        let e = if g == 0 {
            BigInt::from(n + 1)
        } else {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            binomial(2 * g - 2, n).unwrap() * sign
        };
        prop_assert_eq!(s.euler(), e);
    }

    #[test]
    fn kernel_symmetry_and_parity(a in 2i64..8, extra in 0i64..7, c in -60i64..=60) {
        let b = a - 1 + extra;
        let ker = cvx_kernel(a, b).unwrap();
        prop_assert_eq!(ker.coeff(c), ker.coeff(-c));
        if (c + (b - a + 1) * (2 * a - 1)) % 2 != 0 {
            prop_assert_eq!(ker.coeff(c), BigInt::from(0));
        }
    }

    #[test]
    fn multiplicities_are_effective(
        (g, k, i) in (2i64..16)
            .prop_flat_map(|g| (Just(g), 0..=g - 2))
            .prop_flat_map(|(g, k)| (Just(g), Just(k), 0..=k + 1))
    ) {
        prop_assert!(m_polynomial(g, k, i).unwrap().is_effective());
    }

    #[test]
    fn fonarev_increases(g in 2i64..20, k in 0i64..20) {
        prop_assert!(fonarev_rank(g, k + 1).unwrap() > fonarev_rank(g, k).unwrap());
    }
}

#[test]
fn jacobian_betti_numbers() {
    for g in 0..=8 {
        let j = jacobian_diamond(g).unwrap();
        for m in 0..=2 * g {
            assert_eq!(
                BigInt::from(j.betti(m).unwrap()),
                binomial(2 * g, m).unwrap()
            );
        }
    }
}

#[test]
fn odd_diamonds_low_degrees() {
    for g in 2..=10 {
        for k in 0..=g - 2 {
            let d = fano_odd_diamond(OddFanoParams::new(g, k).unwrap()).unwrap();
            assert_eq!(d.betti(1).unwrap(), BigUint::from(0u8), "g={g} k={k}");
            assert_eq!(d.betti(2).unwrap(), BigUint::from(1u8), "g={g} k={k}");
        }
        // for k = 0 the curve contributes its H^1 to the middle degree
        let d = fano_odd_diamond(OddFanoParams::new(g, 0).unwrap()).unwrap();
        assert_eq!(
            d.betti(2 * g - 1).unwrap(),
            BigUint::from((2 * g) as u64),
            "g={g}"
        );
    }
}

#[test]
fn even_diamonds_match_closed_forms() {
    for g in 2..=14 {
        for k in 0..=g - 2 {
            let d = fano_even_diamond(EvenFanoParams::new(g, k).unwrap()).unwrap();
            assert!(d.is_hodge_tate());
            let total: BigUint = d.betti_numbers().into_iter().sum();
            assert_eq!(BigInt::from(total), euler_closed_form(g, k).unwrap());
            let hh = d.hochschild_polynomial();
            assert_eq!(hh.min_exponent(), Some(0));
            assert_eq!(hh.max_exponent(), Some(0));
            assert_eq!(hh.eval_at_one(), d.euler());
        }
    }
}

#[test]
fn curve_sanity() {
    assert_eq!(curve_diamond(3).unwrap().euler(), BigInt::from(-4));
    assert!(matches!(
        curve_diamond(-1),
        Err(Error::Domain(_) | Error::Precondition(_))
    ));
    assert!(matches!(
        OddFanoParams::new(3, 2),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(gauss_binomial(-1, 2), Err(Error::Domain(_))));
}
