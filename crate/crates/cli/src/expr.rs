//! Expressions over the model variables.
//!
//! Grammar, loosest first:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" exponent)?
//! exponent := ["-"] int | "(" ["-"] int ["/" 2] ")"
//! atom   := int | name | "(" expr ")"
//! ```
//!
//! Names are `a1..an`, `s1..sk` and `h`; scalars additionally allow `q` and
//! `Q1..Qk`. Half-integer powers are allowed on `q`, `h` and `Qj` only.

use std::fmt;

use coulombkit_core::coulomb::{AlgebraElement, Model};
use coulombkit_core::exactring::{
    BigInt, BigRational, ExactScalar, LaurentPoly, Monomial, Var, VariableTable,
};

/// A syntax or semantic error at a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Descendent,
    Scalar,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn tokenize(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let col = |byte: usize| text[..byte].chars().count() + 1;
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((Tok::Int(s.parse().expect("digits")), col(pos)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((
                Tok::Name(chars[start..i].iter().map(|x| x.1).collect()),
                col(pos),
            ));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col(pos)));
            i += 1;
        } else {
            return Err(ParseError {
                column: col(pos),
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// A parsed factor; `var` is set when it is a bare variable, so that
/// half-integer powers can be applied.
struct Value {
    scalar: ExactScalar,
    var: Option<usize>,
}

impl Value {
    fn of(scalar: ExactScalar) -> Self {
        Value { scalar, var: None }
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    table: &'a VariableTable,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(self.column(), format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> PResult<ExactScalar> {
        let mut acc = self.term()?;
        let mut sum = false;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(if sum { factor_binomial(acc) } else { acc });
            }
            sum = true;
        }
    }

    fn term(&mut self) -> PResult<ExactScalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let col = self.column();
                self.pos += 1;
                let rhs = self.unary()?;
                if self.mode == Mode::Descendent && !is_constant(&rhs) {
                    return self.err(col, "division not allowed in descendents");
                }
                acc = match acc.div(&rhs) {
                    Ok(v) => v,
                    Err(_) => return self.err(col, "division by zero"),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<ExactScalar> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            Ok(self.power()?.scalar)
        }
    }

    fn signed_int(&mut self) -> PResult<i64> {
        let neg = self.eat('-');
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                let v: i64 = match i64::try_from(v) {
                    Ok(v) if v <= i32::MAX as i64 => v,
                    _ => return self.err(col, "exponent too large"),
                };
                Ok(if neg { -v } else { v })
            }
            _ => self.err(col, "expected an integer exponent"),
        }
    }

    /// The exponent as a numerator over 2.
    fn exponent(&mut self) -> PResult<(i64, usize)> {
        let col = self.column();
        if self.eat('(') {
            let p = self.signed_int()?;
            let halves = if self.eat('/') {
                let dcol = self.column();
                let d = self.signed_int()?;
                match d {
                    1 => 2 * p,
                    2 => p,
                    _ => return self.err(dcol, "only half-integer exponents are supported"),
                }
            } else {
                2 * p
            };
            self.expect(')')?;
            Ok((halves, col))
        } else {
            Ok((2 * self.signed_int()?, col))
        }
    }

    fn power(&mut self) -> PResult<Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let (halves, col) = self.exponent()?;
        if let Some(idx) = base.var {
            if self.table.is_half(idx) {
                return Ok(Value::of(ExactScalar::from_monomial(Monomial::var(
                    idx,
                    halves as i32,
                ))));
            }
            if halves % 2 != 0 {
                return self.err(
                    col,
                    format!("half-integer power of {}", self.table.name(idx)),
                );
            }
            return Ok(Value::of(ExactScalar::from_monomial(Monomial::var(
                idx,
                (halves / 2) as i32,
            ))));
        }
        if halves % 2 != 0 {
            return self.err(col, "half-integer power of a compound expression");
        }
        let e = (halves / 2) as i32;
        if e < 0 && self.mode == Mode::Descendent && !is_monomial(&base.scalar) {
            return self.err(col, "division not allowed in descendents");
        }
        match base.scalar.pow(e) {
            Ok(v) => Ok(Value::of(v)),
            Err(_) => self.err(col, "negative power of zero"),
        }
    }

    fn atom(&mut self) -> PResult<Value> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Value::of(ExactScalar::from_rational(
                    BigRational::from_integer(v),
                )))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                let idx = self.variable(&name, col)?;
                let exp = if self.table.is_half(idx) { 2 } else { 1 };
                Ok(Value {
                    scalar: ExactScalar::from_monomial(Monomial::var(idx, exp)),
                    var: Some(idx),
                })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(Value::of(v))
            }
            Some(Tok::Sym(c)) => self.err(col, format!("unexpected '{c}'")),
            None => self.err(col, "unexpected end of input"),
        }
    }

    fn variable(&self, name: &str, col: usize) -> PResult<usize> {
        let t = self.table;
        let numbered = |prefix: char, limit: usize| -> Option<usize> {
            let rest = name.strip_prefix(prefix)?;
            let i: usize = rest.parse().ok()?;
            (rest == i.to_string() && (1..=limit).contains(&i)).then_some(i - 1)
        };
        let scalar = self.mode == Mode::Scalar;
        let found = match name {
            "h" => Some(t.index(Var::HbarHalf)),
            "q" if scalar => Some(t.index(Var::QHalf)),
            _ => numbered('a', t.n)
                .map(|i| t.index(Var::A(i)))
                .or_else(|| numbered('s', t.k).map(|j| t.index(Var::S(j))))
                .or_else(|| {
                    if scalar {
                        numbered('Q', t.k).map(|j| t.index(Var::KahlerHalf(j)))
                    } else {
                        None
                    }
                }),
        };
        match found {
            Some(i) => Ok(i),
            None => self.err(col, format!("unknown variable '{name}'")),
        }
    }
}

/// `c (m1 - m2)` as `c m1 (1 - m2/m1)`, so that parsed binomials land on the
/// same factored atoms the engine builds.
fn factor_binomial(f: ExactScalar) -> ExactScalar {
    let (num, den) = f.to_fraction();
    if num.len() != 2 || den.constant_value().is_none() {
        return f;
    }
    let terms: Vec<_> = num.terms().collect();
    let ((m1, c1), (m2, c2)) = (terms[0], terms[1]);
    if *c2 != -c1.clone() {
        return f;
    }
    let c = c1 / den.constant_value().expect("checked above");
    ExactScalar::one_minus(&m2.div(m1))
        .mul_monomial(m1)
        .scale(&c)
}

fn is_constant(f: &ExactScalar) -> bool {
    let (num, den) = f.to_fraction();
    num.constant_value().is_some() && den.constant_value().is_some()
}

fn is_monomial(f: &ExactScalar) -> bool {
    let (num, den) = f.to_fraction();
    num.single_term().is_some() && den.single_term().is_some()
}

fn parse(text: &str, table: &VariableTable, mode: Mode) -> PResult<ExactScalar> {
    let toks = tokenize(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        table,
        mode,
    };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err(p.column(), "unexpected trailing input");
    }
    Ok(v)
}

/// A descendent: a Laurent polynomial in `a`, `s` and `h`.
pub fn parse_descendent(text: &str, table: &VariableTable) -> PResult<LaurentPoly> {
    let v = parse(text, table, Mode::Descendent)?;
    let (num, den) = v.to_fraction();
    let c = den
        .constant_value()
        .expect("descendents have constant denominators");
    Ok(num.scale(&c.recip()))
}

/// A rational function in all model variables, e.g. a rendered coefficient.
pub fn parse_scalar(text: &str, table: &VariableTable) -> PResult<ExactScalar> {
    parse(text, table, Mode::Scalar)
}

/// A single monomial such as `a1^-1*h`.
pub fn parse_monomial(text: &str, table: &VariableTable) -> PResult<Monomial> {
    let v = parse(text, table, Mode::Scalar)?;
    let (num, den) = v.to_fraction();
    match (num.single_term(), den.single_term()) {
        (Some((m, c)), Some((n, d))) if c == d => Ok(m.div(n)),
        _ => Err(ParseError {
            column: 1,
            message: "expected a monomial".into(),
        }),
    }
}

/// A product of scalars and generators: `r[d1,..,dk]` is the plain
/// generator, `R[d1,..,dk]` the mixed one, juxtaposition multiplies.
pub fn parse_word(text: &str, model: &Model) -> PResult<AlgebraElement> {
    let k = model.k();
    let mut acc = AlgebraElement::identity(k);
    let chars: Vec<char> = text.chars().collect();
    let mut chunk_start = 0;
    let mut i = 0;
    let mut depth = 0i32;
    let flush = |acc: &mut AlgebraElement, from: usize, to: usize| -> PResult<()> {
        let raw: String = chars[from..to].iter().collect();
        let lead = raw.len()
            - raw
                .trim_start_matches(|c: char| c.is_whitespace() || c == '*')
                .len();
        let body = raw.trim_matches(|c: char| c.is_whitespace() || c == '*');
        if body.is_empty() {
            return Ok(());
        }
        let f = parse_scalar(body, model.table()).map_err(|e| ParseError {
            column: e.column + from + lead.min(raw.chars().count()),
            message: e.message,
        })?;
        *acc = model.mul(acc, &AlgebraElement::scalar(f, k));
        Ok(())
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let starts_gen = depth == 0
            && (c == 'r' || c == 'R')
            && chars.get(i + 1) == Some(&'[')
            && (i == 0 || !chars[i - 1].is_ascii_alphanumeric());
        if !starts_gen {
            i += 1;
            continue;
        }
        flush(&mut acc, chunk_start, i)?;
        let close = match chars[i..].iter().position(|&x| x == ']') {
            Some(off) => i + off,
            None => {
                return Err(ParseError {
                    column: i + 1,
                    message: "unclosed '['".into(),
                })
            }
        };
        let inner: String = chars[i + 2..close].iter().collect();
        let mut d = Vec::new();
        for part in inner.split(',') {
            match part.trim().parse::<i64>() {
                Ok(v) => d.push(v),
                Err(_) => {
                    return Err(ParseError {
                        column: i + 3,
                        message: format!("bad cocharacter entry '{}'", part.trim()),
                    })
                }
            }
        }
        if d.len() != k {
            return Err(ParseError {
                column: i + 1,
                message: format!("cocharacter has {} entries, expected {k}", d.len()),
            });
        }
        let g = if c == 'R' {
            model.mixed_generator(&d)
        } else {
            AlgebraElement::generator(d)
        };
        acc = model.mul(&acc, &g);
        i = close + 1;
        chunk_start = i;
    }
    flush(&mut acc, chunk_start, chars.len())?;
    Ok(acc)
}
