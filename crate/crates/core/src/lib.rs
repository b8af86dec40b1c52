//! Exact symbolic computation with the virtual Coulomb branch of a gauge datum.
//!
//! The crate is `no_std` with `alloc`; the default `std` feature only adds a
//! shared memo cache for structure constants.
//!
//! Layers, bottom up:
//! - [`exactring`]: Laurent polynomials and rational functions with factored
//!   `(1 - M)` denominators, monomial substitutions and q-shifts.
//! - [`pochhammer`]: finite q-Pochhammer symbols and their identities.
//! - [`hypertoric`]: circuits, fixed points and cones of a hypertoric model.
//! - [`coulomb`]: the algebra with generators `r_d`, the right module, the
//!   anti-automorphism and the mixed-polarization generators.
//! - [`verma`], [`vertex`]: Verma modules at fixed points, Whittaker vectors,
//!   vertex functions and their q-difference equations.
//! - [`bethe`], [`wallcross`]: the resulting relations and their behaviour
//!   under a change of stability.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bethe;
pub mod coulomb;
mod error;
pub mod exactring;
pub mod hypertoric;
mod lattice;
pub mod pochhammer;
pub mod verma;
pub mod vertex;
pub mod wallcross;

pub use error::{Error, Result};
