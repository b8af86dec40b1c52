//! Finite q-Pochhammer symbols.
//!
//! `(x)_d = (1 - x)(1 - q x)...(1 - q^{d-1} x)` for `d > 0`,
//! `(x)_d = 1 / ((1 - q^{-1} x)...(1 - q^d x))` for `d < 0`, and `(x)_0 = 1`.

use crate::exactring::{ExactScalar, Monomial};

/// `(x; q)_d`.
///
/// # Panics
/// If `d < 0` and one of the denominator factors is `1 - 1`, i.e. `x` is a
/// power `q^m` with `1 <= m <= -d`.
pub fn poch(x: &Monomial, d: i64) -> ExactScalar {
    try_poch(x, d).expect("Pochhammer symbol with a vanishing denominator")
}

/// `(x; q)_d`, reporting a vanishing denominator as an error.
pub fn try_poch(x: &Monomial, d: i64) -> crate::Result<ExactScalar> {
    let mut out = ExactScalar::one();
    if d > 0 {
        for m in 0..d {
            out = out.mul(&ExactScalar::one_minus(&x.mul(&Monomial::q(m as i32))));
        }
    } else if d < 0 {
        for m in 1..=(-d) {
            out = out.mul(&ExactScalar::one_minus_pow(
                &x.mul(&Monomial::q(-m as i32)),
                -1,
            )?);
        }
    }
    Ok(out)
}

/// `(x; q^{-1})_d`, computed as `(-1)^d x^d q^{-d(d-1)/2} (x^{-1}; q)_d`.
pub fn poch_qinv(x: &Monomial, d: i64) -> ExactScalar {
    let sign = if d.rem_euclid(2) == 1 { -1 } else { 1 };
    let pre = x
        .pow(d as i32)
        .mul(&Monomial::var(0, -(d * (d - 1)) as i32));
    poch(&x.inv(), d)
        .mul_monomial(&pre)
        .scale(&crate::exactring::rat(sign))
}

/// `(-q^{1/2} h^{-1/2})^d`.
pub fn sign_kernel(d: i64) -> ExactScalar {
    let m = Monomial::from_exponents(alloc::vec![d as i32, -d as i32]);
    let c = if d.rem_euclid(2) == 1 { -1 } else { 1 };
    ExactScalar::term(m, crate::exactring::rat(c))
}

/// `sign_kernel(d) * (h x)_d / (q x)_d`, the building block of every relation.
pub fn hbar_ratio(x: &Monomial, d: i64) -> ExactScalar {
    let h = poch(&x.mul(&Monomial::hbar(1)), d);
    let q = poch(&x.mul(&Monomial::q(1)), d);
    sign_kernel(d)
        .mul(&h)
        .div(&q)
        .expect("(q x)_d is a product of nonzero binomials for non-constant x")
}
