//! Exact arithmetic over `Q(q^{1/2}, h^{1/2}, a, s, Q^{1/2})`.
//!
//! Elements are stored as `prefactor * numerator / denominator * prod (1 - M)^e`
//! where the binomial factors are kept apart from the polynomial parts. Products
//! only add exponents; sums expand what they must. Equality is decided by
//! expanding the difference, never by a gcd.

mod monomial;
mod poly;
mod render;
mod scalar;
mod subst;
mod vars;

pub use monomial::Monomial;
pub use poly::LaurentPoly;
pub use scalar::{DenomAtom, ExactScalar};
pub use subst::MonomialMap;
pub use vars::{Var, VariableTable};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Rational number from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
