mod common;

use common::*;
use coulombkit_core::coulomb::AlgebraElement;
use coulombkit_core::exactring::{ExactScalar, LaurentPoly};
use coulombkit_core::vertex::conjugated_insertion;
use coulombkit_core::wallcross::*;

fn a2_scenario() -> WallCrossScenario {
    WallCrossScenario::new(a2_data(), vec![1, 2]).unwrap()
}

fn insertions(s: &WallCrossScenario) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = descendents(s.model.table())
        .into_iter()
        .map(ExactScalar::from_poly)
        .collect();
    if s.model.k() > 1 {
        out.push(ExactScalar::from_poly(LaurentPoly::monomial(
            s.model.s(0).mul(&s.model.s(1)),
        )));
    }
    out
}

#[test]
fn a2_reverses_only_rho3() {
    let s = a2_scenario();
    let rev: Vec<Vec<i64>> = s.reversing.iter().map(|c| c.vector.clone()).collect();
    assert_eq!(rev, vec![vec![1, -1]]);
    assert_eq!(s.kept.len(), 2);
    assert!(s.circuits_match());
}

#[test]
fn a2_reversing_generators_invert() {
    let s = a2_scenario();
    let r = s.check_reversal(&[1, -1]).unwrap();
    assert!(r.reversing && r.generators && r.scalar, "{r:?}");
    let x = &s.model;
    let prod = x.mul(
        &x.mixed_generator(&[-1, 1]),
        &s.model2.mixed_generator(&[1, -1]),
    );
    assert_eq!(prod, AlgebraElement::identity(2));
}

#[test]
fn a2_kept_generators_agree() {
    let s = a2_scenario();
    for rho in [vec![0, 1], vec![1, 0]] {
        let r = s.check_reversal(&rho).unwrap();
        assert!(!r.reversing && r.passed(), "{r:?}");
        assert_eq!(
            s.model.mixed_generator(&rho),
            s.model2.mixed_generator(&rho)
        );
    }
}

#[test]
fn same_generator_on_both_sides_does_not_invert() {
    // r_{-rho} r_rho within X alone is a nontrivial Cartan scalar.
    let x = a2();
    let prod = x.mul(&x.mixed_generator(&[-1, 1]), &x.mixed_generator(&[1, -1]));
    assert_ne!(prod, AlgebraElement::identity(2));
    assert_eq!(prod.len(), 1);
}

#[test]
fn a2_dmodule_match() {
    let s = a2_scenario();
    let ins = insertions(&s);
    let r = s.dmodule_match(&[1, -1], &ins).unwrap();
    assert!(r.passed() && r.checked == ins.len(), "{r:?}");
    for rho in [vec![0, 1], vec![1, 0]] {
        assert!(s.dmodule_match(&rho, &ins).unwrap().passed());
    }
}

#[test]
fn conifold_dmodule_match() {
    let s = WallCrossScenario::new(conifold_data(1), vec![-1]).unwrap();
    assert_eq!(s.reversing.len(), 1);
    assert!(s.kept.is_empty());
    assert!(s.circuits_match());
    let rho = s.reversing[0].vector.clone();
    assert!(s.check_reversal(&rho).unwrap().passed());
    let r = s.dmodule_match(&rho, &insertions(&s)).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn one_sided_composition_is_not_identity() {
    let x = a2();
    let tau = ExactScalar::one();
    let back = conjugated_insertion(&x, &[-1, 1], &tau);
    assert_ne!(conjugated_insertion(&x, &[1, -1], &back), tau);
}

#[test]
fn same_chamber_keeps_everything() {
    let s = WallCrossScenario::new(a2_data(), vec![3, 1]).unwrap();
    assert!(s.reversing.is_empty());
    assert_eq!(s.kept.len(), 3);
    let (rev, mat) = s.check_all().unwrap();
    assert!(rev.iter().all(|r| r.passed() && !r.reversing));
    assert!(mat.iter().all(|m| m.passed()));
}

#[test]
fn check_all_on_a2() {
    let (rev, mat) = a2_scenario().check_all().unwrap();
    assert_eq!(rev.len(), 3);
    assert!(rev.iter().all(|r| r.passed()));
    assert!(mat.iter().all(|m| m.passed()));
}

#[test]
fn theta2_on_wall_is_rejected() {
    assert!(WallCrossScenario::new(a2_data(), vec![1, 1]).is_err());
    assert!(a2_scenario().check_reversal(&[2, 3]).is_err());
}

#[test]
fn scalar_identity_needs_matching_order() {
    // (r'_rho r'_{-rho}) inverts (r_rho r_{-rho}); against (r_{-rho} r_rho)
    // a q-shifted ratio survives.
    let s = a2_scenario();
    let (x, y) = (&s.model, &s.model2);
    let g = x.mul(&y.mixed_generator(&[1, -1]), &y.mixed_generator(&[-1, 1]));
    let good = x.mul(
        &x.mul(&x.mixed_generator(&[1, -1]), &x.mixed_generator(&[-1, 1])),
        &g,
    );
    let bad = x.mul(
        &x.mul(&x.mixed_generator(&[-1, 1]), &x.mixed_generator(&[1, -1])),
        &g,
    );
    assert_eq!(good, AlgebraElement::identity(2));
    assert_ne!(bad, AlgebraElement::identity(2));
}
