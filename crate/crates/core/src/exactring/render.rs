//! Canonical text rendering.
//!
//! Terms are sorted by total degree, then lexicographically, both descending,
//! in variable-table order. Even exponents on half-variables print as integer
//! powers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::scalar::ExactScalar;
use super::vars::VariableTable;

fn graded_lex(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| {
        let len = a.exponents().len().max(b.exponents().len());
        for i in 0..len {
            match b.exponent(i).cmp(&a.exponent(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn render_power(name: &str, num: i32, half: bool) -> String {
    let (p, den) = if half && num % 2 != 0 {
        (num, 2)
    } else if half {
        (num / 2, 1)
    } else {
        (num, 1)
    };
    if den == 2 {
        format!("{name}^({p}/2)")
    } else if p == 1 {
        String::from(name)
    } else {
        format!("{name}^{p}")
    }
}

impl Monomial {
    /// `1` for the unit monomial, otherwise factors joined by `*`.
    pub fn render(&self, table: &VariableTable) -> String {
        let parts: Vec<String> = self
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| render_power(&table.name(i), e, table.is_half(i)))
            .collect();
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

fn render_term(m: &Monomial, c: &BigRational, table: &VariableTable) -> String {
    let mag = c.abs();
    if m.is_one() {
        format!("{mag}")
    } else if mag.is_one() {
        m.render(table)
    } else {
        format!("{mag}*{}", m.render(table))
    }
}

impl LaurentPoly {
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| graded_lex(a.0, b.0));
        terms
    }

    pub fn render(&self, table: &VariableTable) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&render_term(m, c, table));
        }
        out
    }
}

fn render_binomial(m: &Monomial, e: i32, table: &VariableTable) -> String {
    if e == 1 {
        format!("(1 - {})", m.render(table))
    } else {
        format!("(1 - {})^{e}", m.render(table))
    }
}

impl ExactScalar {
    /// Canonical one-line rendering, e.g. `-q^(1/2)*h^(-1/2)*(1 - a1*s1)/(1 - h*a1*s1)`.
    pub fn render(&self, table: &VariableTable) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut num_parts: Vec<String> = Vec::new();
        let mut sign = "";
        match self.numerator().constant_value() {
            Some(c) => {
                if c.is_negative() {
                    sign = "-";
                }
                let mag = c.abs();
                if !(mag.is_one() && self.prefactor().is_one()) {
                    num_parts.push(render_term(self.prefactor(), &mag, table));
                }
            }
            None => {
                if !self.prefactor().is_one() {
                    num_parts.push(self.prefactor().render(table));
                }
                num_parts.push(format!("({})", self.numerator().render(table)));
            }
        }
        let mut den_parts: Vec<String> = Vec::new();
        let mut factors: Vec<(&Monomial, i32)> = self.factors().collect();
        factors.sort_by(|a, b| graded_lex(a.0, b.0));
        for (m, e) in factors {
            if e > 0 {
                num_parts.push(render_binomial(m, e, table));
            } else {
                den_parts.push(render_binomial(m, -e, table));
            }
        }
        if !self.denominator().is_one() {
            den_parts.push(format!("({})", self.denominator().render(table)));
        }
        let mut out = String::from(sign);
        if num_parts.is_empty() {
            out.push('1');
        } else {
            out.push_str(&num_parts.join("*"));
        }
        match den_parts.len() {
            0 => {}
            1 => {
                out.push('/');
                out.push_str(&den_parts[0]);
            }
            _ => {
                out.push_str("/(");
                out.push_str(&den_parts.join("*"));
                out.push(')');
            }
        }
        out
    }
}
