use hecke_fh::coefficients::*;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    (-3i32..=3, prop::collection::vec(-4i64..=4, 0..5)).prop_map(|(low, cs)| LaurentScalar::from_coeffs(low, &cs))
}

fn poly() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3), 1..4).prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a, b)).collect())
}

fn npoly(max_degree: usize) -> impl Strategy<Value = NPolynomial> {
    prop::collection::vec(laurent(), 0..=max_degree + 1)
        .prop_map(|cs| NPolynomial::from_coeffs(cs.into_iter().enumerate().map(|(d, c)| (d as u32, c))))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentScalar::one(), a.clone());
        let parsed: LaurentScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn rational_functions_normalize(num in poly(), den in poly(), h in poly()) {
        prop_assume!(den.iter().any(|c| *c != Rational::from(0i64)));
        prop_assume!(h.iter().any(|c| *c != Rational::from(0i64)));
        let mul = |a: &[Rational], b: &[Rational]| {
            let mut out = vec![Rational::from(0i64); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += &(x * y);
                }
            }
            out
        };
        let f = RationalFunction::new(num.clone(), den.clone());
        let g = RationalFunction::new(mul(&num, &h), mul(&den, &h));
        prop_assert_eq!(&f, &g);
        if let Some(lead) = f.denominator().last() {
            prop_assert_eq!(lead, &Rational::from(1i64));
        }
        if !f.is_zero() {
            prop_assert_eq!(&f * &f.recip(), RationalFunction::one());
        }
    }

    #[test]
    fn interpolation_round_trip(p in npoly(4), start in -3i64..10, extra in 0usize..3) {
        let bound = 4;
        let pts: Vec<(i64, LaurentScalar)> =
            (start..start + (bound + 1 + extra) as i64).map(|n| (n, p.eval(n))).collect();
        prop_assert_eq!(interpolate(&pts, bound).unwrap(), p);
    }
}

#[test]
fn interpolation_rejects_too_high_degree() {
    let pts: Vec<(i64, LaurentScalar)> = (0..6).map(|n| (n, LaurentScalar::integer(n * n * n))).collect();
    assert!(interpolate(&pts, 2).is_err());
}
