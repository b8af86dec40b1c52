//! Comparison of two stability conditions across the walls separating them.
//!
//! Both sides live in the same localized algebra; the generators differ only
//! through the effective cone used to pick the mixed polarization.

use alloc::vec;
use alloc::vec::Vec;

use crate::coulomb::{AlgebraElement, Model};
use crate::error::{Error, Result};
use crate::exactring::ExactScalar;
use crate::hypertoric::{separating_circuits, Circuit, GaugeData};
use crate::vertex::conjugated_insertion;

/// The model at `theta` and at `theta2`, with the circuits of the first split
/// into those whose wall separates the two and the rest.
#[derive(Clone)]
pub struct WallCrossScenario {
    pub model: Model,
    pub model2: Model,
    pub theta2: Vec<i64>,
    pub reversing: Vec<Circuit>,
    pub kept: Vec<Circuit>,
}

/// Outcome of [`WallCrossScenario::check_reversal`] for one circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversalReport {
    pub circuit: Vec<i64>,
    pub reversing: bool,
    /// `r_{-rho} r'_rho = 1` and `r_rho r'_{-rho} = 1` (reversing), or
    /// `r'_{+-rho} = r_{+-rho}` (kept).
    pub generators: bool,
    /// `(r_rho r_{-rho})(X) (r'_rho r'_{-rho})(X') = 1`; true for kept circuits.
    pub scalar: bool,
}

impl ReversalReport {
    pub fn passed(&self) -> bool {
        self.generators && self.scalar
    }
}

/// Outcome of [`WallCrossScenario::dmodule_match`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub circuit: Vec<i64>,
    /// Insertions for which `Phi_{X,c} Phi_{X',-c}` returned the input.
    pub checked: usize,
    pub failures: Vec<usize>,
}

impl MatchReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn neg(d: &[i64]) -> Vec<i64> {
    d.iter().map(|x| -x).collect()
}

fn is_identity(e: &AlgebraElement, k: usize) -> bool {
    *e == AlgebraElement::identity(k)
}

impl WallCrossScenario {
    pub fn new(data: GaugeData, theta2: Vec<i64>) -> Result<Self> {
        let (reversing, kept) = separating_circuits(&data, &theta2)?;
        let model2 = Model::new(data.with_theta(theta2.clone())?)?;
        let model = Model::new(data)?;
        Ok(WallCrossScenario {
            model,
            model2,
            theta2,
            reversing,
            kept,
        })
    }

    fn find(&self, rho: &[i64]) -> Result<bool> {
        if self.reversing.iter().any(|c| c.vector == rho) {
            Ok(true)
        } else if self.kept.iter().any(|c| c.vector == rho) {
            Ok(false)
        } else {
            Err(Error::InvalidInput(alloc::format!(
                "{rho:?} is not a circuit"
            )))
        }
    }

    /// Verify `r'_{+-rho} = r_{-+rho}^{-1}` for a reversing circuit, or
    /// `r'_{+-rho} = r_{+-rho}` for a kept one, by multiplying out in the
    /// common algebra.
    pub fn check_reversal(&self, rho: &[i64]) -> Result<ReversalReport> {
        let reversing = self.find(rho)?;
        let (x, y) = (&self.model, &self.model2);
        let k = x.k();
        let minus = neg(rho);
        let (generators, scalar) = if reversing {
            let a = x.mul(&x.mixed_generator(&minus), &y.mixed_generator(rho));
            let b = x.mul(&x.mixed_generator(rho), &y.mixed_generator(&minus));
            let f = x.mul(&x.mixed_generator(rho), &x.mixed_generator(&minus));
            let g = x.mul(&y.mixed_generator(rho), &y.mixed_generator(&minus));
            (
                is_identity(&a, k) && is_identity(&b, k),
                is_identity(&x.mul(&f, &g), k),
            )
        } else {
            let same = x.mixed_generator(rho) == y.mixed_generator(rho)
                && x.mixed_generator(&minus) == y.mixed_generator(&minus);
            (same, true)
        };
        Ok(ReversalReport {
            circuit: rho.to_vec(),
            reversing,
            generators,
            scalar,
        })
    }

    /// For a reversing `c`: inverting the relation `Q^c V = V^(r_c tau r_{-c})`
    /// of `X` and substituting `r_c^{-1} = r'_{-c}` gives the relation of `X'`
    /// for `-c`, so `Phi_{X,c}(Phi_{X',-c}(tau)) = tau` for every insertion.
    /// Kept circuits give literally identical relations.
    pub fn dmodule_match(&self, c: &[i64], insertions: &[ExactScalar]) -> Result<MatchReport> {
        if self.model.data().blocks.is_some() {
            return Err(Error::InvalidInput(
                "wall-crossing match is abelian only".into(),
            ));
        }
        let reversing = self.find(c)?;
        let mut failures = Vec::new();
        for (idx, tau) in insertions.iter().enumerate() {
            let ok = if reversing {
                let back = conjugated_insertion(&self.model2, &neg(c), tau);
                conjugated_insertion(&self.model, c, &back) == *tau
            } else {
                conjugated_insertion(&self.model, c, tau)
                    == conjugated_insertion(&self.model2, c, tau)
            };
            if !ok {
                failures.push(idx);
            }
        }
        Ok(MatchReport {
            circuit: c.to_vec(),
            checked: insertions.len(),
            failures,
        })
    }

    /// Circuits of `theta2` are `{-rho : rho reversing}` together with the kept
    /// ones.
    pub fn circuits_match(&self) -> bool {
        let mut expected: Vec<Vec<i64>> = self
            .reversing
            .iter()
            .map(|c| neg(&c.vector))
            .chain(self.kept.iter().map(|c| c.vector.clone()))
            .collect();
        let mut actual: Vec<Vec<i64>> = self
            .model2
            .circuits()
            .iter()
            .map(|c| c.vector.clone())
            .collect();
        expected.sort();
        actual.sort();
        expected == actual
    }

    /// Every reversing circuit passes [`Self::check_reversal`] and
    /// [`Self::dmodule_match`] on `1` and each `s_j`.
    pub fn check_all(&self) -> Result<(Vec<ReversalReport>, Vec<MatchReport>)> {
        let k = self.model.k();
        let mut insertions = vec![ExactScalar::one()];
        for j in 0..k {
            insertions.push(ExactScalar::from_monomial(self.model.s(j)));
        }
        let mut rev = Vec::new();
        let mut mat = Vec::new();
        for c in self.reversing.iter().chain(&self.kept) {
            rev.push(self.check_reversal(&c.vector)?);
            if self.model.data().blocks.is_none() {
                mat.push(self.dmodule_match(&c.vector, &insertions)?);
            }
        }
        Ok((rev, mat))
    }
}
