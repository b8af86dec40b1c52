//! Truncated vertex functions restricted to fixed points, the Whittaker
//! pairing that reproduces them, and their q-difference equations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::coulomb::{AlgebraElement, Model};
use crate::error::{Error, Result};
use crate::exactring::{ExactScalar, LaurentPoly, Monomial, MonomialMap};
use crate::hypertoric::enumerate_degrees;
use crate::pochhammer::{hbar_ratio, poch, poch_qinv, sign_kernel};
use crate::verma::{split_kahler, Verma, VermaVector};

/// A power series in `Q` truncated at level `order`, keyed by degree.
#[derive(Clone, Debug, Default)]
pub struct QSeries {
    pub order: i64,
    coeffs: BTreeMap<Vec<i64>, ExactScalar>,
}

impl QSeries {
    pub fn new(order: i64) -> Self {
        QSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Add `f` to the coefficient of `Q^d`.
    pub fn add_term(&mut self, d: Vec<i64>, f: ExactScalar) {
        let g = self.coefficient(&d).add(&f);
        if g.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, g);
        }
    }

    pub fn coefficient(&self, d: &[i64]) -> ExactScalar {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Nonzero coefficients in degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &ExactScalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficientwise equality as rational functions.
    pub fn value_eq(&self, other: &QSeries) -> bool {
        self.coeffs
            .iter()
            .all(|(d, f)| f.value_eq(&other.coefficient(d)))
            && other
                .coeffs
                .iter()
                .all(|(d, f)| f.value_eq(&self.coefficient(d)))
    }

    /// Degrees at which the two series differ.
    pub fn differences(&self, other: &QSeries) -> Vec<Vec<i64>> {
        let mut keys: Vec<Vec<i64>> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .cloned()
            .collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter(|d| !self.coefficient(d).value_eq(&other.coefficient(d)))
            .collect()
    }
}

/// `prod_i sk(D_i) (h x_i)_{D_i} / (q x_i)_{D_i}`, before restriction.
pub fn vertex_kernel(model: &Model, d: &[i64]) -> ExactScalar {
    (0..model.n()).fold(ExactScalar::one(), |acc, i| {
        acc.mul(&hbar_ratio(&model.x(i), model.data().pairing(i, d)))
    })
}

/// Degrees of `Eff(X)` of level at most `order`.
pub fn vertex_degrees(model: &Model, order: i64) -> Result<Vec<Vec<i64>>> {
    if order < 0 {
        return Err(Error::InvalidInput("negative order".into()));
    }
    enumerate_degrees(model.eff_cone(), &model.data().theta, order)
}

/// The vertex function with descendent `tau`, restricted to fixed point `p`.
pub fn vertex_fp(model: &Model, p: usize, tau: &LaurentPoly, order: i64) -> Result<QSeries> {
    vertex_fp_general(model, p, &ExactScalar::from_poly(tau.clone()), order)
}

/// As [`vertex_fp`] with an arbitrary Cartan insertion. The full product is
/// formed symbolically, so zeros of the kernel may cancel poles of the
/// insertion before evaluation.
pub fn vertex_fp_general(
    model: &Model,
    p: usize,
    insertion: &ExactScalar,
    order: i64,
) -> Result<QSeries> {
    let map = model.fixed_point(p)?.restriction_map(model.table());
    let mut out = QSeries::new(order);
    for d in vertex_degrees(model, order)? {
        let f = vertex_kernel(model, &d).mul(&model.shift(insertion, &d));
        out.add_term(d, f.substitute(&map)?);
    }
    Ok(out)
}

/// `<W_p(Q), tau W_p(Q)>`, computed in the Verma module.
pub fn whittaker_function(
    model: &Model,
    p: usize,
    tau: &LaurentPoly,
    order: i64,
) -> Result<QSeries> {
    let verma = Verma::new(model, p)?;
    let w = verma.whittaker_vector(order)?.vector;
    let insertion = AlgebraElement::scalar(ExactScalar::from_poly(tau.clone()), model.k());
    let tw: VermaVector = verma.act(&insertion, &w)?;
    let mut out = QSeries::new(order);
    for (d, f) in w.terms() {
        let paired = verma.contravariant_form(
            &VermaVector::term(d.clone(), f.clone()),
            &VermaVector::term(d.clone(), tw.coefficient(d)),
        )?;
        if paired.is_zero() {
            continue;
        }
        let (e, g) = split_kahler(model, &paired)?;
        if e.iter().any(|x| x % 2 != 0) {
            return Err(Error::UnexpectedKahlerExponent(e));
        }
        out.add_term(e.iter().map(|x| x / 2).collect(), g);
    }
    Ok(out)
}

/// The operator `q^{chi Q d/dQ}` on a series restricted to `p`: the `Q^d`
/// coefficient is multiplied by `q^{<chi, d>} s^chi|_p`.
pub fn q_shift_operator(model: &Model, p: usize, chi: &[i64], series: &QSeries) -> Result<QSeries> {
    let fp = model.fixed_point(p)?;
    let s_chi = chi
        .iter()
        .enumerate()
        .fold(Monomial::one(), |acc, (j, &c)| {
            acc.mul(&fp.restriction[j].pow(c as i32))
        });
    let mut out = QSeries::new(series.order);
    for (d, f) in series.terms() {
        let l: i64 = chi.iter().zip(d).map(|(a, b)| a * b).sum();
        out.add_term(
            d.clone(),
            f.mul_monomial(&s_chi.mul(&Monomial::q(l as i32))),
        );
    }
    Ok(out)
}

/// `r_c tau r_{-c}` as a Cartan scalar.
pub fn conjugated_insertion(model: &Model, c: &[i64], tau: &ExactScalar) -> ExactScalar {
    let neg: Vec<i64> = c.iter().map(|x| -x).collect();
    let prod = model.mul_all(&[
        model.mixed_generator(c),
        AlgebraElement::scalar(tau.clone(), model.k()),
        model.mixed_generator(&neg),
    ]);
    prod.coefficient(&vec![0; model.k()])
}

/// Both sides of `Q^c V^(tau) = V^(r_c tau r_{-c})` at `p`, up to `order`.
pub fn kahler_relation(
    model: &Model,
    p: usize,
    c: &[i64],
    tau: &LaurentPoly,
    order: i64,
) -> Result<(QSeries, QSeries)> {
    let tau = ExactScalar::from_poly(tau.clone());
    let base = vertex_fp_general(model, p, &tau, order)?;
    let mut lhs = QSeries::new(order);
    let theta = &model.data().theta;
    for (d, f) in base.terms() {
        let e: Vec<i64> = d.iter().zip(c).map(|(x, y)| x + y).collect();
        let l: i64 = theta.iter().zip(&e).map(|(a, b)| a * b).sum();
        if l <= order {
            lhs.add_term(e, f.clone());
        }
    }
    let rhs = vertex_fp_general(model, p, &conjugated_insertion(model, c, &tau), order)?;
    Ok((lhs, rhs))
}

/// A nonzero residual of a q-difference equation.
#[derive(Clone, Debug)]
pub struct QdeResidual {
    pub point: usize,
    pub degree: Vec<i64>,
    pub value: ExactScalar,
}

/// Outcome of checking the q-difference equation of one effective class.
#[derive(Clone, Debug)]
pub struct QdeReport {
    pub class: Vec<i64>,
    pub order: i64,
    /// Number of (fixed point, degree) pairs checked.
    pub checked: usize,
    pub residuals: Vec<QdeResidual>,
}

impl QdeReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Apply
/// `prod_{C_i>0} (x_i; q^{-1})_{C_i} prod_{C_i<0} (h x_i)_{-C_i}
///  - Q^c sk(sum C_i) prod_{C_i>0} (h x_i)_{C_i} prod_{C_i<0} (x_i; q^{-1})_{-C_i}`,
/// with `x_i` acting as `q^{chi_i Q d/dQ}` (multiplication of the `Q^d`
/// coefficient by `q^{D_i} x_i|_p`), to `V^(tau)` at every fixed point.
/// For `tau != 1` the `Q^c` term acts on `V^(tau(q^c s))`.
pub fn qde_check(model: &Model, c: &[i64], tau: &LaurentPoly, order: i64) -> Result<QdeReport> {
    if !model.is_effective(c) {
        return Err(Error::InvalidInput("class is not effective".into()));
    }
    let cc = model.data().pairings(c);
    let total: i64 = cc.iter().sum();
    let tau_s = ExactScalar::from_poly(tau.clone());
    let shifted = model.shift(&tau_s, c);
    let theta = &model.data().theta;
    let level_c: i64 = theta.iter().zip(c).map(|(a, b)| a * b).sum();
    let mut report = QdeReport {
        class: c.to_vec(),
        order,
        checked: 0,
        residuals: Vec::new(),
    };
    for p in 0..model.fixed_points().len() {
        let fp = model.fixed_point(p)?;
        let map = fp.restriction_map(model.table());
        let xs: Vec<Monomial> = (0..model.n()).map(|i| map.apply(&model.x(i))).collect();
        let y = |i: usize, d: &[i64]| xs[i].mul(&Monomial::q(model.data().pairing(i, d) as i32));
        let v = vertex_fp_general(model, p, &tau_s, order)?;
        let w = vertex_fp_general(model, p, &shifted, order - level_c)?;
        for d in vertex_degrees(model, order)? {
            let mut a = ExactScalar::one();
            for (i, &ci) in cc.iter().enumerate() {
                if ci > 0 {
                    a = a.mul(&poch_qinv(&y(i, &d), ci));
                } else if ci < 0 {
                    a = a.mul(&poch(&y(i, &d).mul(&Monomial::hbar(1)), -ci));
                }
            }
            let mut residual = a.mul(&v.coefficient(&d));
            let e: Vec<i64> = d.iter().zip(c).map(|(x, y)| x - y).collect();
            let we = w.coefficient(&e);
            if !we.is_zero() {
                let mut b = sign_kernel(total);
                for (i, &ci) in cc.iter().enumerate() {
                    if ci > 0 {
                        b = b.mul(&poch(&y(i, &e).mul(&Monomial::hbar(1)), ci));
                    } else if ci < 0 {
                        b = b.mul(&poch_qinv(&y(i, &e), -ci));
                    }
                }
                residual = residual.sub(&b.mul(&we));
            }
            report.checked += 1;
            if !residual.is_zero() {
                report.residuals.push(QdeResidual {
                    point: p,
                    degree: d,
                    value: residual,
                });
            }
        }
    }
    Ok(report)
}

/// Sums of `d` over the consecutive blocks.
pub fn block_sum(blocks: &[usize], d: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(blocks.len());
    let mut start = 0;
    for &b in blocks {
        out.push(d[start..start + b].iter().sum());
        start += b;
    }
    out
}

/// The nonabelian vertex function at the lift `ptilde` of a fixed point:
/// the abelian kernel times `prod_alpha [sk(D_alpha) (h s^alpha)_{D_alpha} / (q s^alpha)_{D_alpha}]^{-1}`
/// over the roots, restricted at `ptilde`, specialized by `specialization`
/// (a substitution of the `a` variables) and collected by block sums of `d`.
pub fn vertex_fp_nonab(
    model: &Model,
    ptilde: usize,
    tau: &LaurentPoly,
    order: i64,
    specialization: &MonomialMap,
) -> Result<QSeries> {
    let tau = ExactScalar::from_poly(tau.clone());
    vertex_fp_nonab_general(model, ptilde, &tau, order, specialization)
}

/// As [`vertex_fp_nonab`] with an arbitrary Cartan insertion.
pub fn vertex_fp_nonab_general(
    model: &Model,
    ptilde: usize,
    insertion: &ExactScalar,
    order: i64,
    specialization: &MonomialMap,
) -> Result<QSeries> {
    let blocks = model.data().blocks.clone().ok_or(Error::NoBlockStructure)?;
    let map = model
        .fixed_point(ptilde)?
        .restriction_map(model.table())
        .then(specialization);
    let roots = model.roots();
    let mut out = QSeries::new(order);
    for d in vertex_degrees(model, order)? {
        let mut f = vertex_kernel(model, &d).mul(&model.shift(insertion, &d));
        for &(a, b) in &roots {
            let root = model.root_monomial((a, b));
            f = f.mul(&hbar_ratio(&root, d[a] - d[b]).inv()?);
        }
        out.add_term(block_sum(&blocks, &d), f.substitute(&map)?);
    }
    Ok(out)
}
