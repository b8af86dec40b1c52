use alloc::format;
use alloc::string::String;

/// A base variable. Indices are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    QHalf,
    HbarHalf,
    A(usize),
    S(usize),
    KahlerHalf(usize),
}

/// Layout of the exponent vector for a model with `n` equivariant parameters
/// and `k` Cartan variables.
///
/// The order is `q^{1/2} < h^{1/2} < a_1 < .. < a_n < s_1 < .. < s_k < Q_1^{1/2} < ..`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariableTable {
    pub n: usize,
    pub k: usize,
}

impl VariableTable {
    pub fn new(n: usize, k: usize) -> Self {
        VariableTable { n, k }
    }

    pub fn len(&self) -> usize {
        2 + self.n + 2 * self.k
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, v: Var) -> usize {
        match v {
            Var::QHalf => 0,
            Var::HbarHalf => 1,
            Var::A(i) => {
                assert!(i < self.n, "a-variable out of range");
                2 + i
            }
            Var::S(j) => {
                assert!(j < self.k, "s-variable out of range");
                2 + self.n + j
            }
            Var::KahlerHalf(j) => {
                assert!(j < self.k, "Q-variable out of range");
                2 + self.n + self.k + j
            }
        }
    }

    pub fn var(&self, index: usize) -> Var {
        match index {
            0 => Var::QHalf,
            1 => Var::HbarHalf,
            i if i < 2 + self.n => Var::A(i - 2),
            i if i < 2 + self.n + self.k => Var::S(i - 2 - self.n),
            i if i < self.len() => Var::KahlerHalf(i - 2 - self.n - self.k),
            _ => panic!("variable index {index} out of range"),
        }
    }

    /// Printed base name; half-variables print as their integer-power base.
    pub fn name(&self, index: usize) -> String {
        match self.var(index) {
            Var::QHalf => "q".into(),
            Var::HbarHalf => "h".into(),
            Var::A(i) => format!("a{}", i + 1),
            Var::S(j) => format!("s{}", j + 1),
            Var::KahlerHalf(j) => format!("Q{}", j + 1),
        }
    }

    pub fn is_half(&self, index: usize) -> bool {
        matches!(
            self.var(index),
            Var::QHalf | Var::HbarHalf | Var::KahlerHalf(_)
        )
    }

    pub fn s_range(&self) -> core::ops::Range<usize> {
        2 + self.n..2 + self.n + self.k
    }

    pub fn a_range(&self) -> core::ops::Range<usize> {
        2..2 + self.n
    }

    pub fn kahler_range(&self) -> core::ops::Range<usize> {
        2 + self.n + self.k..self.len()
    }
}
