use coulombkit_core::exactring::{ExactScalar, Monomial};
use coulombkit_core::pochhammer::*;
use proptest::prelude::*;

const NVARS: usize = 6;

/// Monomials with a nonzero a or s exponent, so no Pochhammer factor vanishes.
fn arg() -> impl Strategy<Value = Monomial> {
    (
        proptest::collection::vec(-2i32..=2, NVARS),
        2usize..5,
        prop_oneof![Just(-1i32), Just(1), Just(2)],
    )
        .prop_map(|(e, i, v)| Monomial::from_exponents(e).with_exponent(i, v))
}

fn om(x: &Monomial) -> ExactScalar {
    ExactScalar::one_minus(x)
}

/// `(x; q^{-1})_d` straight from the product definition.
fn qinv_product(x: &Monomial, d: i64) -> ExactScalar {
    let mut out = ExactScalar::one();
    if d >= 0 {
        for m in 0..d {
            out = out.mul(&om(&x.mul(&Monomial::q(-m as i32))));
        }
    } else {
        for m in 1..=-d {
            out = out.div(&om(&x.mul(&Monomial::q(m as i32)))).unwrap();
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_identity(x in arg(), d in -8i64..=8) {
        // (q^{-d} x)_d (x)_{-d} = 1
        let lhs = poch(&x.mul(&Monomial::q(-d as i32)), d).mul(&poch(&x, -d));
        prop_assert!(lhs.is_one());
    }

    #[test]
    fn inversion_identity(x in arg(), d in -8i64..=8) {
        let h = Monomial::hbar(1);
        let lhs = hbar_ratio(&x, d);
        let y = x.inv();
        let rhs = sign_kernel(-d)
            .mul(&poch(&y, -d))
            .div(&poch(&y.mul(&Monomial::q(1)).mul(&h.inv()), -d))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qinv_matches_product(x in arg(), d in -8i64..=8) {
        prop_assert_eq!(poch_qinv(&x, d), qinv_product(&x, d));
    }

    #[test]
    fn concatenation(x in arg(), d in -6i64..=6, e in -6i64..=6) {
        // (x)_{d+e} = (x)_d (q^d x)_e
        let lhs = poch(&x, d + e);
        let rhs = poch(&x, d).mul(&poch(&x.mul(&Monomial::q(d as i32)), e));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_kernel_is_a_character(d in -8i64..=8, e in -8i64..=8) {
        prop_assert_eq!(sign_kernel(d).mul(&sign_kernel(e)), sign_kernel(d + e));
    }

    #[test]
    fn hbar_ratio_cocycle(x in arg(), d in -5i64..=5, c in -5i64..=5) {
        // hbar_ratio(x, d) hbar_ratio(q^d x, -c) = hbar_ratio(x, d - c)
        let lhs = hbar_ratio(&x, d).mul(&hbar_ratio(&x.mul(&Monomial::q(d as i32)), -c));
        prop_assert_eq!(lhs, hbar_ratio(&x, d - c));
    }
}

#[test]
fn positive_degree_vanishes_at_one() {
    for d in 1..=8 {
        assert!(poch(&Monomial::one(), d).is_zero());
        assert!(poch(&Monomial::q(-(d as i32) + 1), d).is_zero());
    }
}
