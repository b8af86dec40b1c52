mod common;

use common::*;
use coulombkit_core::coulomb::Model;
use coulombkit_core::coulomb::{structure_constant_via_lift, AlgebraElement, ModuleElement};
use coulombkit_core::exactring::{ExactScalar, Monomial};
use coulombkit_core::hypertoric::{weyl_group, GaugeData, Polarization};
use coulombkit_core::pochhammer::{hbar_ratio, poch, sign_kernel};

fn gen(d: &[i64]) -> AlgebraElement {
    AlgebraElement::generator(d.to_vec())
}

#[test]
fn identity_is_two_sided() {
    let m = a2();
    let a = gen(&[1, -2]).scale(&scalar(m.s(0)));
    let id = AlgebraElement::identity(2);
    assert_eq!(m.mul(&a, &id), a);
    assert_eq!(m.mul(&id, &a), a);
    assert!(m
        .structure_constant(&[0, 0], &[2, -1], &Polarization::canonical(3))
        .is_one());
}

#[test]
fn generators_shift_cartan_variables() {
    let m = a2();
    let d = [2, -1];
    for j in 0..2 {
        let s = AlgebraElement::scalar(scalar(m.s(j)), 2);
        let lhs = m.mul(&gen(&d), &s);
        let rhs = gen(&d).scale(&scalar(m.s(j).mul(&Monomial::q(-d[j] as i32))));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn tpn_backward_product() {
    for n in 1..=3 {
        let m = tpn(n);
        for d in 1..=3i64 {
            let got = m.structure_constant(&[-d], &[d], &Polarization::canonical(n + 1));
            let mut expected = ExactScalar::one();
            for i in 0..=n {
                let x = m.x(i);
                let f = sign_kernel(-d)
                    .mul(&poch(&x.mul(&Monomial::q(1)), d))
                    .div(&poch(&x.mul(&Monomial::hbar(1)), d))
                    .unwrap();
                expected = expected.mul(&f);
            }
            assert_eq!(got, expected, "n={n} d={d}");
        }
    }
}

#[test]
fn abelian_point_rank_one_relations() {
    let m = Model::new(GaugeData::new(vec![vec![1, 0], vec![0, 1]], vec![1, 1]).unwrap()).unwrap();
    let pol = Polarization::canonical(2);
    let x = m.x(0);
    let back = sign_kernel(-1)
        .mul(&ExactScalar::one_minus(&x.mul(&Monomial::q(1))))
        .div(&ExactScalar::one_minus(&x.mul(&Monomial::hbar(1))))
        .unwrap();
    assert_eq!(m.structure_constant(&[-1, 0], &[1, 0], &pol), back);
    let fwd = sign_kernel(-1)
        .mul(&ExactScalar::one_minus(&x))
        .div(&ExactScalar::one_minus(
            &x.mul(&Monomial::hbar(1)).mul(&Monomial::q(-1)),
        ))
        .unwrap();
    assert_eq!(m.structure_constant(&[1, 0], &[-1, 0], &pol), fwd);
    // generators in different coordinates commute
    for s in [-1, 1] {
        assert_eq!(
            m.mul(&gen(&[1, 0]), &gen(&[0, s])),
            m.mul(&gen(&[0, s]), &gen(&[1, 0]))
        );
    }
    let b = gen(&[1, 0]);
    let bm = gen(&[-1, 0]);
    assert_eq!(m.mul(&m.mul(&b, &bm), &b), m.mul(&b, &m.mul(&bm, &b)));
}

#[test]
fn lift_matches_structure_constant_small() {
    let m = a2();
    let pol = Polarization::canonical(3);
    for c in [[1, 0], [0, 1], [1, -1], [-1, 2]] {
        for d in [[-1, 0], [2, -1], [0, -1]] {
            let direct = m.structure_constant(&c, &d, &pol);
            let lifted = structure_constant_via_lift(&m, &c, &d).unwrap();
            assert_eq!(direct, lifted, "c={c:?} d={d:?}");
        }
    }
}

#[test]
fn lift_of_tp1_circuit() {
    let m = tp1();
    let (ap, w) = coulombkit_core::coulomb::abelian_point_lift(&m, &[1]);
    assert_eq!(w, AlgebraElement::generator(vec![1, 1]));
    assert_eq!(w, ap.mul_word(&ap.word(&[1, 0]), &[0, 1]));
}

#[test]
fn tau_examples() {
    let m = a2();
    assert_eq!(m.tau(&gen(&[1, -1])), gen(&[-1, 1]));
    let a = gen(&[1, 0])
        .scale(&scalar(m.s(1)))
        .add(&gen(&[0, -1]).scale(&scalar(m.a(0))));
    let b = gen(&[-1, 1]).scale(&scalar(m.s(0)));
    assert_eq!(m.tau(&m.tau(&a)), a);
    assert_eq!(m.tau(&m.mul(&a, &b)), m.mul(&m.tau(&b), &m.tau(&a)));
}

#[test]
fn mixed_generators_a2() {
    let m = a2();
    assert_eq!(m.mixed_generator(&[0, 0]), AlgebraElement::identity(2));
    let c = [0, 1];
    let d = [1, -1];
    let lhs = m.mul(&m.mixed_generator(&c), &m.mixed_generator(&d));
    assert_eq!(lhs, m.mixed_generator(&[1, 0]));
    for d in [[0, 1], [1, 0], [1, -1], [2, -1], [1, 1]] {
        assert_eq!(m.mixed_norm(&d), m.closed_form_backward_norm(&d), "d={d:?}");
        let neg = [-d[0], -d[1]];
        let fwd = m.mul(&m.mixed_generator(&d), &m.mixed_generator(&neg));
        assert_eq!(fwd.coefficient(&[0, 0]), m.closed_form_forward_norm(&d));
        assert_eq!(m.tau(&m.mixed_generator(&d)), m.mixed_generator(&neg));
    }
}

#[test]
fn module_action_on_mixed_generators() {
    let m = a2();
    for c in [[0, 0], [1, -2], [-1, 1]] {
        let t = ModuleElement::generator(c.to_vec());
        for d in [[0, 1], [1, -1], [2, -1]] {
            let got = m.module_act(&t, &m.mixed_generator(&d));
            assert_eq!(
                got,
                ModuleElement::generator(vec![c[0] + d[0], c[1] + d[1]])
            );
            let neg = [-d[0], -d[1]];
            let got = m.module_act(&t, &m.mixed_generator(&neg));
            // the scalar stands to the right of t_{c-d}
            let deg = vec![c[0] - d[0], c[1] - d[1]];
            let expected = ModuleElement::term(
                deg.clone(),
                m.move_left(&m.closed_form_forward_norm(&d), &deg),
            );
            assert_eq!(got, expected, "c={c:?} d={d:?}");
        }
        assert_eq!(m.module_act(&t, &AlgebraElement::identity(2)), t);
    }
}

#[test]
fn symmetrized_trivial_blocks() {
    let data = a2_data().with_blocks(vec![1, 1]).unwrap();
    let m = Model::new(data).unwrap();
    for d in [[0, 0], [1, 0], [2, -1]] {
        assert_eq!(m.symmetrized_generator(&d).unwrap(), m.mixed_generator(&d));
    }
    assert!(a2().symmetrized_generator(&[1, 0]).is_err());
}

#[test]
fn symmetrized_weyl_invariance() {
    let data = GaugeData::new(
        vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![0, 1]],
        vec![1, 1],
    )
    .unwrap()
    .with_blocks(vec![2])
    .unwrap();
    let m = Model::new(data).unwrap();
    assert_eq!(
        m.symmetrized_generator(&[0, 0]).unwrap(),
        AlgebraElement::identity(2)
    );
    for d in [[1, 0], [2, 1], [1, -1]] {
        let g = m.symmetrized_generator(&d).unwrap();
        for w in weyl_group(&[2]) {
            assert_eq!(m.weyl_act(&w, &g), g, "d={d:?} w={w:?}");
        }
    }
    assert!(m.symmetrized_generator(&[0, 1]).is_err());
    let _ = hbar_ratio;
}
