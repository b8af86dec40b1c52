//! The Verma module at a fixed point `p`: basis `r_d v` for `d` in `Eff(p)`,
//! with `s_j v = S_j|_p v` and `r_{-d} v = 0` for nonzero effective `d`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::coulomb::{graded_sum, AlgebraElement, Model};
use crate::error::{Error, Result};
use crate::exactring::{ExactScalar, Monomial, Var};
use crate::hypertoric::{eff_cone_fp, enumerate_degrees, Cone, FixedPoint};

/// `sum_d f_d r_d v` with coefficients free of `s`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VermaVector {
    terms: BTreeMap<Vec<i64>, ExactScalar>,
}

graded_sum!(VermaVector);

/// A truncated Whittaker vector; the coefficient of `r_d v` carries `Q^{d/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WhittakerVector {
    pub order: i64,
    pub vector: VermaVector,
}

/// The Verma module of `model` at one of its fixed points.
pub struct Verma<'a> {
    model: &'a Model,
    point: &'a FixedPoint,
    eff: Cone,
}

impl<'a> Verma<'a> {
    pub fn new(model: &'a Model, point: usize) -> Result<Self> {
        let point = model.fixed_point(point)?;
        Ok(Verma {
            model,
            point,
            eff: eff_cone_fp(model.data(), point),
        })
    }

    pub fn model(&self) -> &Model {
        self.model
    }

    pub fn point(&self) -> &FixedPoint {
        self.point
    }

    /// The cone `Eff(p)` indexing the basis.
    pub fn eff_cone(&self) -> &Cone {
        &self.eff
    }

    pub fn contains(&self, d: &[i64]) -> bool {
        self.eff.contains(d)
    }

    /// The highest weight vector `v`.
    pub fn highest_weight(&self) -> VermaVector {
        VermaVector::generator(vec![0; self.model.k()])
    }

    /// Evaluate a Cartan coefficient standing to the left of `r_m v`.
    fn evaluate_at(&self, f: &ExactScalar, m: &[i64]) -> Result<ExactScalar> {
        let map = self.point.shifted_restriction_map(self.model.table(), m);
        f.substitute(&map)
    }

    /// `A u`: each `f r_c` hits `g r_e v` as
    /// `f F_e(q^{-c} s) gamma(c, e) F_{c+e}^{-1} r_{c+e} v`, where `F_d` is the
    /// coefficient of the mixed generator `r_d`, and the Cartan part is then
    /// evaluated at `q^{c+e} S|_p`.
    pub fn act(&self, a: &AlgebraElement, u: &VermaVector) -> Result<VermaVector> {
        let model = self.model;
        let mut out = VermaVector::zero();
        for (c, f) in a.terms() {
            for (e, g) in u.terms() {
                let m: Vec<i64> = c.iter().zip(e).map(|(x, y)| x + y).collect();
                if !self.contains(&m) {
                    continue;
                }
                let prod = model.mul(
                    &AlgebraElement::term(c.clone(), f.clone()),
                    &model.mixed_generator(e),
                );
                let h = prod.coefficient(&m).div(&model.mixed_coefficient(&m))?;
                let val = self.evaluate_at(&h, &m)?;
                out.add_term(m, val.mul(g));
            }
        }
        Ok(out)
    }

    /// `A u` for `A` the mixed generator of degree `d`.
    pub fn act_generator(&self, d: &[i64], u: &VermaVector) -> Result<VermaVector> {
        self.act(&self.model.mixed_generator(d), u)
    }

    /// `(r_{-d} r_d)|_p`, the norm of `r_d v`.
    pub fn norm(&self, d: &[i64]) -> Result<ExactScalar> {
        self.evaluate_at(&self.model.mixed_norm(d), &vec![0; d.len()])
    }

    /// The contravariant form, diagonal in the basis with `<v, v> = 1`.
    pub fn contravariant_form(&self, u: &VermaVector, w: &VermaVector) -> Result<ExactScalar> {
        let mut out = ExactScalar::zero();
        for (d, f) in u.terms() {
            let g = w.coefficient(d);
            if g.is_zero() {
                continue;
            }
            out = out.add(&f.mul(&g).mul(&self.norm(d)?));
        }
        Ok(out)
    }

    /// Lattice points of `Eff(p)` of level at most `order`.
    pub fn degrees(&self, order: i64) -> Result<Vec<Vec<i64>>> {
        enumerate_degrees(&self.eff, &self.model.data().theta, order)
    }

    /// `sum_{d in Eff(p)} Q^{d/2} r_d v / (r_{-d} r_d)|_p` up to level `order`.
    pub fn whittaker_vector(&self, order: i64) -> Result<WhittakerVector> {
        if order < 0 {
            return Err(Error::InvalidInput("negative order".into()));
        }
        let mut vector = VermaVector::zero();
        for d in self.degrees(order)? {
            let coeff = self
                .norm(&d)?
                .inv()?
                .mul_monomial(&kahler_half(self.model, &d));
            vector.add_term(d, coeff);
        }
        Ok(WhittakerVector { order, vector })
    }
}

/// `Q^{d/2}` as a monomial in the `Q^{1/2}` variables.
pub fn kahler_half(model: &Model, d: &[i64]) -> Monomial {
    let table = model.table();
    d.iter().enumerate().fold(Monomial::one(), |acc, (j, &e)| {
        acc.mul(&Monomial::of(table, Var::KahlerHalf(j), e as i32))
    })
}

/// Split `f = Q^{e/2} g` where `g` is free of the Kähler variables.
pub fn split_kahler(model: &Model, f: &ExactScalar) -> Result<(Vec<i64>, ExactScalar)> {
    let table = model.table();
    let range = table.kahler_range();
    let e: Vec<i64> = range
        .clone()
        .map(|idx| f.prefactor().exponent(idx) as i64)
        .collect();
    let g = f.mul_monomial(&kahler_half(model, &e).inv());
    if !g.free_of(range) {
        return Err(Error::UnexpectedKahlerExponent(e));
    }
    Ok((e, g))
}
