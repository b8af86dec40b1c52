use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;

/// Finite sum of monomials with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(Monomial::one(), BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c);
        p
    }

    /// `1 - m`.
    pub fn one_minus(m: &Monomial) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(m.clone(), -BigRational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The single term, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.single_term() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Image under a map on monomials; equal images are combined.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Componentwise minimum exponent over all terms (`1` for zero).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, m| acc.gcd_exponents(m))
    }

    /// Exact quotient by `1 - m`, or `None` if it does not divide.
    ///
    /// Monomials fall into classes modulo `m`; on each class the polynomial is
    /// a Laurent polynomial in `t = m`, divisible by `1 - t` iff its
    /// coefficients sum to zero, with prefix sums as quotient coefficients.
    pub fn div_one_minus(&self, m: &Monomial) -> Option<LaurentPoly> {
        if m.is_one() {
            return None;
        }
        let pivot = m
            .exponents()
            .iter()
            .position(|&e| e != 0)
            .expect("non-unit monomial has a nonzero exponent");
        if m.exponent(pivot) < 0 {
            // p / (1 - m) = -m^{-1} * p / (1 - m^{-1})
            let minv = m.inv();
            let q = self.div_one_minus(&minv)?;
            return Some(q.mul_monomial(&minv).neg());
        }
        let step = m.exponent(pivot) as i64;
        let mut classes: BTreeMap<Monomial, Vec<(i64, BigRational)>> = BTreeMap::new();
        for (e, c) in self.terms.iter() {
            let j = (e.exponent(pivot) as i64).div_euclid(step);
            let rep = e.mul(&m.pow(-(j as i32)));
            classes.entry(rep).or_default().push((j, c.clone()));
        }
        let mut out = LaurentPoly::zero();
        for (rep, mut list) in classes {
            list.sort_by_key(|(j, _)| *j);
            let total: BigRational = list.iter().map(|(_, c)| c.clone()).sum();
            if !total.is_zero() {
                return None;
            }
            let jmin = list[0].0;
            let jmax = list[list.len() - 1].0;
            let mut acc = BigRational::zero();
            let mut idx = 0;
            for j in jmin..jmax {
                while idx < list.len() && list[idx].0 == j {
                    acc += &list[idx].1;
                    idx += 1;
                }
                if !acc.is_zero() {
                    out.add_term(rep.mul(&m.pow(j as i32)), acc.clone());
                }
            }
        }
        Some(out)
    }
}
