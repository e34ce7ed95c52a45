use equidouble_core::algebra::rat;
use equidouble_core::groups::catalogue_group;
use equidouble_core::{Cyclotomic, ExactMatrix, Field, PrimeFieldElement, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| rat(n, d))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 12]),
        prop::collection::vec(rational(), 12),
    )
        .prop_map(|(n, c)| Cyclotomic::from_powers(n, &c[..n as usize]))
}

fn prime_field() -> impl Strategy<Value = PrimeFieldElement> {
    (-100i64..100).prop_map(|v| PrimeFieldElement::new(101, v))
}

fn field_axioms<S: Field>(a: S, b: S, c: S) {
    assert_eq!(a.clone() + &b, b.clone() + &a);
    assert_eq!(a.clone() * &b, b.clone() * &a);
    assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
    assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
    assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
    assert_eq!(a.clone() - &a, S::zero());
    assert_eq!(a.clone() + &(-a.clone()), S::zero());
    if let Some(inv) = a.try_inv() {
        assert_eq!(a * &inv, S::one());
    } else {
        assert!(a.is_zero());
    }
}

fn matrix<S: Field + 'static>(n: usize, s: impl Strategy<Value = S>) -> impl Strategy<Value = ExactMatrix<S>> {
    prop::collection::vec(s, n * n).prop_map(move |e| ExactMatrix::new(n, n, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn cyclotomic_field(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn prime_field_axioms(a in prime_field(), b in prime_field(), c in prime_field()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn det_multiplicative(a in matrix(3, rational()), b in matrix(3, rational())) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn det_multiplicative_cyclotomic(a in matrix(2, cyclotomic()), b in matrix(2, cyclotomic())) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn kernel_is_kernel(m in prop::collection::vec(-3i64..4, 12)) {
        let a = ExactMatrix::new(3, 4, m.into_iter().map(|x| rat(x, 1)).collect()).unwrap();
        let ker = a.kernel();
        prop_assert_eq!(ker.len() + a.rank(), 4);
        for v in ker {
            prop_assert!(a.matmul(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn conjugation_is_multiplicative(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!((a.clone() * &b).conj(), a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn conjugation_is_an_automorphism_of_s4(x in 0usize..24, y in 0usize..24, g in 0usize..24) {
        let s4 = catalogue_group("S4").unwrap();
        prop_assert_eq!(s4.conj(g, s4.mul(x, y)), s4.mul(s4.conj(g, x), s4.conj(g, y)));
    }
}
