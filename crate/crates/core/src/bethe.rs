//! Relations of the q-difference module of vertex functions and of the
//! Bethe algebra, abelian and nonabelian.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coulomb::Model;
use crate::error::Result;
use crate::exactring::{ExactScalar, Monomial, MonomialMap, Var};
use crate::hypertoric::{permute, weyl_group};
use crate::pochhammer::poch;
use crate::vertex::block_sum;

/// Whether a relation is the q-difference one or its `q = 1` limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    DModule,
    BetheQ1,
}

/// `lhs = Q^{rhs_degree}`.
#[derive(Clone, Debug)]
pub struct Relation {
    /// The effective class `c` (dominant in the nonabelian case).
    pub class: Vec<i64>,
    /// `w c`; equal to `class` for abelian relations.
    pub moved_class: Vec<i64>,
    pub weyl: Option<Vec<usize>>,
    pub lhs: ExactScalar,
    pub rhs_degree: Vec<i64>,
    pub kind: RelationKind,
}

impl Relation {
    /// Apply a substitution (typically of the `a` variables) to the left side.
    pub fn specialize(&self, map: &MonomialMap) -> Result<Relation> {
        Ok(Relation {
            lhs: self.lhs.substitute(map)?,
            ..self.clone()
        })
    }

    /// `lhs = Q...` in canonical form.
    pub fn render(&self, table: &crate::exactring::VariableTable) -> String {
        format!(
            "{} = {}",
            self.lhs.render(table),
            render_kahler(&self.rhs_degree)
        )
    }
}

/// `Q1^e1*Q2^e2...`, or `1` for degree zero.
pub fn render_kahler(d: &[i64]) -> String {
    let parts: Vec<String> = d
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(j, &e)| {
            if e == 1 {
                format!("Q{}", j + 1)
            } else {
                format!("Q{}^{}", j + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

fn neg(d: &[i64]) -> Vec<i64> {
    d.iter().map(|x| -x).collect()
}

/// `c` is dominant if it is non-increasing inside every block.
pub fn is_dominant(blocks: &[usize], c: &[i64]) -> bool {
    let mut start = 0;
    for &b in blocks {
        if c[start..start + b].windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        start += b;
    }
    true
}

/// `r_c r_{-c}` as a Cartan scalar, computed in the algebra.
pub fn forward_product(model: &Model, c: &[i64]) -> ExactScalar {
    model
        .mul(&model.mixed_generator(c), &model.mixed_generator(&neg(c)))
        .coefficient(&vec![0; model.k()])
}

/// `prod_alpha (q s^alpha)_{-<alpha, c>} / (h s^alpha)_{-<alpha, c>}`.
pub fn root_factor(model: &Model, c: &[i64]) -> ExactScalar {
    let mut out = ExactScalar::one();
    for (a, b) in model.roots() {
        let s = model.root_monomial((a, b));
        let e = -(c[a] - c[b]);
        out = out
            .mul(&poch(&s.mul(&Monomial::q(1)), e))
            .div(&poch(&s.mul(&Monomial::hbar(1)), e))
            .expect("root Pochhammer symbols are nonzero");
    }
    out
}

/// One relation per circuit (abelian), or per dominant circuit `c` of the
/// abelianization and distinct `w c` (nonabelian).
pub fn dmodule_relations(model: &Model) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    match model.data().blocks.clone() {
        None => {
            for c in model.circuits() {
                out.push(Relation {
                    class: c.vector.clone(),
                    moved_class: c.vector.clone(),
                    weyl: None,
                    lhs: forward_product(model, &c.vector),
                    rhs_degree: c.vector.clone(),
                    kind: RelationKind::DModule,
                });
            }
        }
        Some(blocks) => {
            for c in model
                .circuits()
                .iter()
                .filter(|c| is_dominant(&blocks, &c.vector))
            {
                let mut seen: Vec<Vec<i64>> = Vec::new();
                for w in weyl_group(&blocks) {
                    let wc = permute(&c.vector, &w);
                    if seen.contains(&wc) {
                        continue;
                    }
                    seen.push(wc.clone());
                    out.push(Relation {
                        class: c.vector.clone(),
                        moved_class: wc.clone(),
                        weyl: Some(w),
                        lhs: forward_product(model, &wc).mul(&root_factor(model, &wc)),
                        rhs_degree: block_sum(&blocks, &c.vector),
                        kind: RelationKind::DModule,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `(1 - h y)^{-e} / (1 - y)^{-e}` times `(-h^{-1/2})^{-e}`: the `q = 1`
/// value of `sk(-e) (h y)_{-e} / (q y)_{-e}`.
fn q1_ratio(y: &Monomial, e: i64) -> ExactScalar {
    let sign = if e.rem_euclid(2) == 1 { -1 } else { 1 };
    let pre = ExactScalar::term(Monomial::var(1, e as i32), crate::exactring::rat(sign));
    pre.mul(
        &ExactScalar::one_minus(&y.mul(&Monomial::hbar(1)))
            .pow(-e as i32)
            .expect("nonzero"),
    )
    .mul(&ExactScalar::one_minus(y).pow(e as i32).expect("nonzero"))
}

/// The Bethe relations, built from the `q = 1` closed forms
/// `prod_i (-h^{-1/2})^{-C_i} [(1 - h x_i) / (1 - x_i)]^{-C_i}` and, with
/// blocks, `prod_alpha [(1 - s^alpha) / (1 - h s^alpha)]^{-<alpha, w c>}`.
pub fn bethe_relations_q1(model: &Model) -> Result<Vec<Relation>> {
    let mut out = dmodule_relations(model)?;
    for rel in out.iter_mut() {
        let c = &rel.moved_class;
        let mut lhs = ExactScalar::one();
        for i in 0..model.n() {
            let ci = model.data().pairing(i, c);
            if ci != 0 {
                lhs = lhs.mul(&q1_ratio(&model.x(i), ci));
            }
        }
        for (a, b) in model.roots() {
            let s = model.root_monomial((a, b));
            let e = c[a] - c[b];
            lhs = lhs
                .mul(&ExactScalar::one_minus(&s).pow(-e as i32)?)
                .div(&ExactScalar::one_minus(&s.mul(&Monomial::hbar(1))).pow(-e as i32)?)?;
        }
        rel.lhs = lhs;
        rel.kind = RelationKind::BetheQ1;
    }
    Ok(out)
}

/// The substitution `q^{1/2} -> 1`.
pub fn q_to_one(table: &crate::exactring::VariableTable) -> MonomialMap {
    MonomialMap::identity().with(table.index(Var::QHalf), Monomial::one())
}

/// Canonical text: one `lhs = Q...` line per relation, sorted.
pub fn render_bethe_system(model: &Model, relations: &[Relation]) -> String {
    let mut lines: Vec<String> = relations.iter().map(|r| r.render(model.table())).collect();
    lines.sort();
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
