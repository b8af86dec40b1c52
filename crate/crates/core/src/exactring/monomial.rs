use alloc::vec;
use alloc::vec::Vec;

use super::vars::{Var, VariableTable};

/// A Laurent monomial, stored as an exponent vector with trailing zeros
/// trimmed so that equal monomials compare equal across table sizes.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn from_exponents(exps: Vec<i32>) -> Self {
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    /// `index`-th base variable raised to `exp`.
    pub fn var(index: usize, exp: i32) -> Self {
        let mut exps = vec![0; index + 1];
        exps[index] = exp;
        Monomial::from_exponents(exps)
    }

    pub fn of(table: &VariableTable, v: Var, exp: i32) -> Self {
        Monomial::var(table.index(v), exp)
    }

    /// `q^m` for integer `m`.
    pub fn q(m: i32) -> Self {
        Monomial::var(0, 2 * m)
    }

    /// `h^m` for integer `m`.
    pub fn hbar(m: i32) -> Self {
        Monomial::var(1, 2 * m)
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    pub fn exponent(&self, index: usize) -> i32 {
        self.exps.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps = (0..len)
            .map(|i| self.exponent(i) + other.exponent(i))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|x| x * e).collect())
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    /// Componentwise minimum.
    pub fn gcd_exponents(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        Monomial::from_exponents(
            (0..len)
                .map(|i| self.exponent(i).min(other.exponent(i)))
                .collect(),
        )
    }

    pub fn with_exponent(&self, index: usize, exp: i32) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() <= index {
            exps.resize(index + 1, 0);
        }
        exps[index] = exp;
        Monomial::from_exponents(exps)
    }

    /// True if every variable in `range` has exponent zero.
    pub fn free_of(&self, range: core::ops::Range<usize>) -> bool {
        range.into_iter().all(|i| self.exponent(i) == 0)
    }
}
