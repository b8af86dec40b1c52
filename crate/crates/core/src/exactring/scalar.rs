use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::subst::MonomialMap;
use crate::error::{Error, Result};

/// A denominator factor `(1 - q^shift * core)^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenomAtom {
    pub shift: i32,
    pub core: Monomial,
    pub multiplicity: u32,
}

/// An element of the localized coefficient ring:
/// `prefactor * numerator / denominator * prod_M (1 - M)^{e_M}`.
///
/// Binomial factors carry signed multiplicities, so products never expand.
/// The general `denominator` stays `1` unless an inverse of an unfactored
/// polynomial was taken. Zero is represented by an empty numerator.
#[derive(Clone, Debug)]
pub struct ExactScalar {
    prefactor: Monomial,
    numerator: LaurentPoly,
    denominator: LaurentPoly,
    factors: BTreeMap<Monomial, i32>,
}

/// Orientation making `(1 - M)` and `(1 - M^{-1})` share one key: the first
/// nonzero exponent among a, s, Q (then h, then q) is positive.
fn orient(m: &Monomial) -> (Monomial, bool) {
    let exps = m.exponents();
    let order = (2..exps.len()).chain([1usize, 0]);
    for i in order {
        let e = m.exponent(i);
        if e != 0 {
            return if e > 0 {
                (m.clone(), false)
            } else {
                (m.inv(), true)
            };
        }
    }
    (m.clone(), false)
}

fn expand_factors<'a, I: IntoIterator<Item = (&'a Monomial, &'a i32)>>(it: I) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (m, &e) in it {
        debug_assert!(e >= 0);
        out = out.mul(&LaurentPoly::one_minus(m).pow(e as u32));
    }
    out
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar {
            prefactor: Monomial::one(),
            numerator: LaurentPoly::zero(),
            denominator: LaurentPoly::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ExactScalar::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::from_rational(super::rat(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        ExactScalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        ExactScalar::from_poly(LaurentPoly::monomial(m))
    }

    /// `c * m`.
    pub fn term(m: Monomial, c: BigRational) -> Self {
        ExactScalar::from_poly(LaurentPoly::term(m, c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ExactScalar {
            prefactor: Monomial::one(),
            numerator: p,
            denominator: LaurentPoly::one(),
            factors: BTreeMap::new(),
        }
        .normalize()
    }

    /// `(1 - m)^e`; fails only when `m = 1` and `e < 0`.
    pub fn one_minus_pow(m: &Monomial, e: i32) -> Result<Self> {
        let mut s = ExactScalar::one();
        s.push_factor(m, e)?;
        Ok(s.normalize())
    }

    /// `1 - m` kept as a factor.
    pub fn one_minus(m: &Monomial) -> Self {
        ExactScalar::one_minus_pow(m, 1).expect("positive power never fails")
    }

    /// Rebuild from the raw parts, as produced by the accessors.
    pub fn from_parts(
        prefactor: Monomial,
        numerator: LaurentPoly,
        denominator: LaurentPoly,
        factors: Vec<(Monomial, i32)>,
    ) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = ExactScalar {
            prefactor,
            numerator,
            denominator,
            factors: BTreeMap::new(),
        };
        for (m, e) in factors {
            s.push_factor(&m, e)?;
        }
        Ok(s.normalize())
    }

    fn push_factor(&mut self, m: &Monomial, e: i32) -> Result<()> {
        if e == 0 {
            return Ok(());
        }
        if m.is_one() {
            if e > 0 {
                self.numerator = LaurentPoly::zero();
                return Ok(());
            }
            return Err(Error::DivisionByZero);
        }
        let (key, flipped) = orient(m);
        if flipped {
            // (1 - M)^e = (-1)^e M^e (1 - M^{-1})^e
            self.prefactor = self.prefactor.mul(&m.pow(e));
            if e % 2 != 0 {
                self.numerator = self.numerator.neg();
            }
        }
        let slot = self.factors.entry(key.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&key);
        }
        Ok(())
    }

    fn normalize(mut self) -> Self {
        if self.numerator.is_zero() {
            return ExactScalar::zero();
        }
        self.factors.retain(|_, e| *e != 0);
        if let Some(d) = self.denominator.constant_value() {
            if !d.is_one() {
                self.numerator = self.numerator.scale(&d.recip());
                self.denominator = LaurentPoly::one();
            }
        }
        self.extract_content();
        if self.numerator.constant_value().is_none() {
            let keys: Vec<Monomial> = self
                .factors
                .iter()
                .filter(|(_, e)| **e < 0)
                .map(|(m, _)| m.clone())
                .collect();
            for m in keys {
                while self.factors.get(&m).copied().unwrap_or(0) < 0 {
                    match self.numerator.div_one_minus(&m) {
                        Some(q) => {
                            self.numerator = q;
                            *self.factors.get_mut(&m).unwrap() += 1;
                        }
                        None => break,
                    }
                }
            }
        }
        if self.denominator.constant_value().is_none() {
            let keys: Vec<Monomial> = self
                .factors
                .iter()
                .filter(|(_, e)| **e > 0)
                .map(|(m, _)| m.clone())
                .collect();
            for m in keys {
                while self.factors.get(&m).copied().unwrap_or(0) > 0 {
                    match self.denominator.div_one_minus(&m) {
                        Some(q) => {
                            self.denominator = q;
                            *self.factors.get_mut(&m).unwrap() -= 1;
                        }
                        None => break,
                    }
                }
            }
            if self.numerator == self.denominator {
                self.numerator = LaurentPoly::one();
                self.denominator = LaurentPoly::one();
            }
        }
        self.factors.retain(|_, e| *e != 0);
        self.extract_content();
        self
    }

    fn extract_content(&mut self) {
        let c = self.numerator.min_exponents();
        if !c.is_one() {
            self.numerator = self.numerator.mul_monomial(&c.inv());
            self.prefactor = self.prefactor.mul(&c);
        }
        let c = self.denominator.min_exponents();
        if !c.is_one() {
            self.denominator = self.denominator.mul_monomial(&c.inv());
            self.prefactor = self.prefactor.div(&c);
        }
        if let Some(d) = self.denominator.constant_value() {
            if !d.is_one() {
                self.numerator = self.numerator.scale(&d.recip());
                self.denominator = LaurentPoly::one();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value_eq(&ExactScalar::one())
    }

    pub fn prefactor(&self) -> &Monomial {
        &self.prefactor
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// The unfactored part of the denominator, normally `1`.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// Binomial factors `(1 - M)` with signed multiplicities.
    pub fn factors(&self) -> impl Iterator<Item = (&Monomial, i32)> {
        self.factors.iter().map(|(m, e)| (m, *e))
    }

    pub fn denominator_atoms(&self) -> Vec<DenomAtom> {
        self.factors
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(m, e)| {
                let qe = m.exponent(0);
                DenomAtom {
                    shift: qe.div_euclid(2),
                    core: m.with_exponent(0, qe.rem_euclid(2)),
                    multiplicity: (-*e) as u32,
                }
            })
            .collect()
    }

    /// Expanded `numerator / denominator` pair of Laurent polynomials.
    pub fn to_fraction(&self) -> (LaurentPoly, LaurentPoly) {
        let num = self
            .numerator
            .mul_monomial(&self.prefactor)
            .mul(&expand_factors(
                self.factors.iter().filter(|(_, e)| **e > 0),
            ));
        let neg: Vec<(Monomial, i32)> = self
            .factors
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(m, e)| (m.clone(), -e))
            .collect();
        let den = self
            .denominator
            .mul(&expand_factors(neg.iter().map(|(m, e)| (m, e))));
        (num, den)
    }

    pub fn mul(&self, other: &ExactScalar) -> ExactScalar {
        if self.is_zero() || other.is_zero() {
            return ExactScalar::zero();
        }
        let mut factors = self.factors.clone();
        for (m, e) in other.factors.iter() {
            *factors.entry(m.clone()).or_insert(0) += e;
        }
        ExactScalar {
            prefactor: self.prefactor.mul(&other.prefactor),
            numerator: self.numerator.mul(&other.numerator),
            denominator: self.denominator.mul(&other.denominator),
            factors,
        }
        .normalize()
    }

    pub fn inv(&self) -> Result<ExactScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactScalar {
            prefactor: self.prefactor.inv(),
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
            factors: self.factors.iter().map(|(m, e)| (m.clone(), -e)).collect(),
        }
        .normalize())
    }

    pub fn div(&self, other: &ExactScalar) -> Result<ExactScalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<ExactScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = ExactScalar::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn neg(&self) -> ExactScalar {
        let mut out = self.clone();
        out.numerator = out.numerator.neg();
        out
    }

    pub fn scale(&self, c: &BigRational) -> ExactScalar {
        let mut out = self.clone();
        out.numerator = out.numerator.scale(c);
        out.normalize()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> ExactScalar {
        if self.is_zero() {
            return ExactScalar::zero();
        }
        let mut out = self.clone();
        out.prefactor = out.prefactor.mul(m);
        out
    }

    pub fn add(&self, other: &ExactScalar) -> ExactScalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut common = BTreeMap::new();
        let mut rem_a = BTreeMap::new();
        let mut rem_b = BTreeMap::new();
        let keys: alloc::collections::BTreeSet<&Monomial> =
            self.factors.keys().chain(other.factors.keys()).collect();
        for m in keys {
            let ea = self.factors.get(m).copied().unwrap_or(0);
            let eb = other.factors.get(m).copied().unwrap_or(0);
            let e = ea.min(eb);
            if e != 0 {
                common.insert(m.clone(), e);
            }
            if ea > e {
                rem_a.insert(m.clone(), ea - e);
            }
            if eb > e {
                rem_b.insert(m.clone(), eb - e);
            }
        }
        let pm = self.prefactor.gcd_exponents(&other.prefactor);
        let mut na = self
            .numerator
            .mul_monomial(&self.prefactor.div(&pm))
            .mul(&expand_factors(rem_a.iter()));
        let mut nb = other
            .numerator
            .mul_monomial(&other.prefactor.div(&pm))
            .mul(&expand_factors(rem_b.iter()));
        let denominator = if self.denominator == other.denominator {
            self.denominator.clone()
        } else {
            na = na.mul(&other.denominator);
            nb = nb.mul(&self.denominator);
            self.denominator.mul(&other.denominator)
        };
        ExactScalar {
            prefactor: pm,
            numerator: na.add(&nb),
            denominator,
            factors: common,
        }
        .normalize()
    }

    pub fn sub(&self, other: &ExactScalar) -> ExactScalar {
        self.add(&other.neg())
    }

    /// Equality of values, decided by expanding the difference.
    pub fn value_eq(&self, other: &ExactScalar) -> bool {
        if self.prefactor == other.prefactor
            && self.numerator == other.numerator
            && self.denominator == other.denominator
            && self.factors == other.factors
        {
            return true;
        }
        self.sub(other).is_zero()
    }

    /// Homomorphic image under a monomial map.
    ///
    /// Factors sent to `1 - 1` are handled exactly: vanishing numerator
    /// factors give zero, vanishing denominator factors must divide the
    /// numerator before substitution.
    pub fn substitute(&self, map: &MonomialMap) -> Result<ExactScalar> {
        if self.is_zero() {
            return Ok(ExactScalar::zero());
        }
        let mut num = self.numerator.clone();
        let mut keep = Vec::new();
        let mut van_num = Vec::new();
        let mut van_den = Vec::new();
        for (m, &e) in self.factors.iter() {
            let img = map.apply(m);
            if img.is_one() {
                if e > 0 {
                    van_num.push((m.clone(), e));
                } else {
                    van_den.push((m.clone(), -e));
                }
            } else {
                keep.push((img, e));
            }
        }
        if !van_den.is_empty() {
            for (m, e) in van_num.drain(..) {
                num = num.mul(&LaurentPoly::one_minus(&m).pow(e as u32));
            }
            for (m, e) in van_den {
                for _ in 0..e {
                    num = num.div_one_minus(&m).ok_or(Error::PoleAtEvaluation)?;
                }
            }
        }
        if !van_num.is_empty() {
            return Ok(ExactScalar::zero());
        }
        let den = map.apply_poly(&self.denominator);
        if den.is_zero() {
            return Err(Error::PoleAtEvaluation);
        }
        let mut out = ExactScalar {
            prefactor: map.apply(&self.prefactor),
            numerator: map.apply_poly(&num),
            denominator: den,
            factors: BTreeMap::new(),
        };
        for (img, e) in keep {
            out.push_factor(&img, e)?;
        }
        Ok(out.normalize())
    }

    /// Replace the variable at `index` by `q^m` times itself.
    pub fn q_shift(&self, index: usize, m: i32) -> ExactScalar {
        let mut map = MonomialMap::identity();
        map.set(index, Monomial::var(index, 1).mul(&Monomial::q(m)));
        self.substitute(&map)
            .expect("a q-shift never sends a factor containing the shifted variable to 1")
    }

    /// Apply several q-shifts at once: variable `indices[j]` goes to
    /// `q^{shifts[j]}` times itself.
    pub fn q_shift_many(&self, indices: &[usize], shifts: &[i64]) -> ExactScalar {
        if shifts.iter().all(|&c| c == 0) {
            return self.clone();
        }
        let mut map = MonomialMap::identity();
        for (&i, &c) in indices.iter().zip(shifts) {
            map.set(i, Monomial::var(i, 1).mul(&Monomial::q(c as i32)));
        }
        self.substitute(&map)
            .expect("a q-shift never sends a factor containing the shifted variable to 1")
    }

    /// True if no variable with index in `range` occurs.
    pub fn free_of(&self, range: core::ops::Range<usize>) -> bool {
        self.prefactor.free_of(range.clone())
            && self
                .numerator
                .terms()
                .all(|(m, _)| m.free_of(range.clone()))
            && self
                .denominator
                .terms()
                .all(|(m, _)| m.free_of(range.clone()))
            && self.factors.keys().all(|m| m.free_of(range.clone()))
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value_eq(other)
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar::mul(self, rhs)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar::add(self, rhs)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar::sub(self, rhs)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(self)
    }
}

impl From<Monomial> for ExactScalar {
    fn from(m: Monomial) -> Self {
        ExactScalar::from_monomial(m)
    }
}

impl From<LaurentPoly> for ExactScalar {
    fn from(p: LaurentPoly) -> Self {
        ExactScalar::from_poly(p)
    }
}
