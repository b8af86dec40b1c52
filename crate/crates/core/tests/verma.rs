mod common;

use common::*;
use coulombkit_core::coulomb::{AlgebraElement, Model};
use coulombkit_core::exactring::{ExactScalar, Monomial, Var};
use coulombkit_core::pochhammer::hbar_ratio;
use coulombkit_core::verma::{kahler_half, Verma, VermaVector};

fn neg(d: &[i64]) -> Vec<i64> {
    d.iter().map(|x| -x).collect()
}

fn models() -> Vec<Model> {
    vec![tp1(), tpn(2), a2()]
}

#[test]
fn identity_acts_trivially() {
    for m in models() {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let mut u = verma.highest_weight();
            for d in verma.degrees(2).unwrap() {
                u.add_term(d.clone(), scalar(Monomial::hbar(d[0] as i32)));
            }
            let out = verma.act(&AlgebraElement::identity(m.k()), &u).unwrap();
            assert_eq!(out, u);
        }
    }
}

#[test]
fn highest_weight_is_annihilated() {
    for m in models() {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let v = verma.highest_weight();
            for d in verma.degrees(4).unwrap() {
                if d.iter().all(|&x| x == 0) {
                    continue;
                }
                assert!(verma.act_generator(&neg(&d), &v).unwrap().is_zero());
                assert!(verma
                    .act(&AlgebraElement::generator(neg(&d)), &v)
                    .unwrap()
                    .is_zero());
            }
        }
    }
}

#[test]
fn cartan_acts_by_restriction() {
    for m in models() {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let v = verma.highest_weight();
            for j in 0..m.k() {
                let sj = AlgebraElement::scalar(scalar(m.s(j)), m.k());
                let out = verma.act(&sj, &v).unwrap();
                let expected = v.scale(&scalar(m.fixed_point(p).unwrap().restriction[j].clone()));
                assert_eq!(out, expected);
            }
        }
    }
}

#[test]
fn lowering_then_raising_gives_norm() {
    for m in models() {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let v = verma.highest_weight();
            for d in verma.degrees(3).unwrap() {
                let up = verma.act_generator(&d, &v).unwrap();
                assert_eq!(up, VermaVector::generator(d.clone()));
                let down = verma.act_generator(&neg(&d), &up).unwrap();
                assert_eq!(down, v.scale(&verma.norm(&d).unwrap()));
            }
        }
    }
}

/// Elements of the algebra at `p`: Cartan polynomials and the generators
/// `r_{+-d}` for `d` in `Eff(p)`.
fn sample_elements(m: &Model, verma: &Verma) -> Vec<AlgebraElement> {
    let mut out = vec![
        AlgebraElement::scalar(scalar(m.s(0)), m.k()),
        AlgebraElement::scalar(
            ExactScalar::one_minus(&m.x(0).mul(&Monomial::hbar(2))),
            m.k(),
        ),
    ];
    let mut classes: Vec<Vec<i64>> = verma.eff_cone().rays(m.k());
    classes.extend(
        m.circuits()
            .iter()
            .map(|c| c.vector.clone())
            .filter(|c| verma.contains(c)),
    );
    classes.sort();
    classes.dedup();
    for c in &classes {
        out.push(m.mixed_generator(c));
        out.push(m.mixed_generator(&neg(c)));
    }
    let mut mixed = m.mixed_generator(&classes[0]);
    mixed.add_term(
        vec![0; m.k()],
        scalar(m.s(m.k() - 1).mul(&Monomial::hbar(1))),
    );
    out.push(mixed);
    out
}

#[test]
fn module_axiom() {
    for m in [tp1(), a2()] {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let elems = sample_elements(&m, &verma);
            let mut u = verma.highest_weight();
            for d in verma.degrees(1).unwrap() {
                u.add_term(d, scalar(Monomial::q(1)));
            }
            for a in &elems {
                for b in &elems {
                    let lhs = verma.act(&m.mul(a, b), &u).unwrap();
                    let rhs = verma.act(a, &verma.act(b, &u).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "point {p}");
                }
            }
        }
    }
}

#[test]
fn contravariant_form_is_adjoint_and_diagonal() {
    for m in [tp1(), a2()] {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let v = verma.highest_weight();
            assert!(verma.contravariant_form(&v, &v).unwrap().is_one());
            let degs = verma.degrees(3).unwrap();
            for (i, d) in degs.iter().enumerate() {
                for e in &degs[..i] {
                    let f = verma
                        .contravariant_form(
                            &VermaVector::generator(d.clone()),
                            &VermaVector::generator(e.clone()),
                        )
                        .unwrap();
                    assert!(f.is_zero());
                }
            }
            let mut u = VermaVector::zero();
            let mut w = VermaVector::zero();
            for (i, d) in degs.iter().enumerate() {
                u.add_term(d.clone(), scalar(Monomial::hbar(i as i32)));
                w.add_term(d.clone(), ExactScalar::from_int(i as i64 + 2));
            }
            for c in m.circuits() {
                let lhs = verma
                    .contravariant_form(&verma.act_generator(&c.vector, &u).unwrap(), &w)
                    .unwrap();
                let rhs = verma
                    .contravariant_form(&u, &verma.act_generator(&neg(&c.vector), &w).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn whittaker_order_zero_is_highest_weight() {
    let m = a2();
    let verma = Verma::new(&m, 1).unwrap();
    assert_eq!(
        verma.whittaker_vector(0).unwrap().vector,
        verma.highest_weight()
    );
}

#[test]
fn whittaker_eigenvector() {
    let order = 4;
    for m in [tp1(), tpn(2), a2()] {
        for p in 0..m.fixed_points().len() {
            let verma = Verma::new(&m, p).unwrap();
            let w = verma.whittaker_vector(order).unwrap().vector;
            let theta = &m.data().theta;
            let level = |d: &[i64]| -> i64 { d.iter().zip(theta).map(|(a, b)| a * b).sum() };
            for c in m.circuits().iter().filter(|c| verma.contains(&c.vector)) {
                let lowered = verma.act_generator(&neg(&c.vector), &w).unwrap();
                let expected = w.scale(&scalar(kahler_half(&m, &c.vector)));
                let bound = order - level(&c.vector);
                for d in verma.degrees(bound).unwrap() {
                    assert_eq!(
                        lowered.coefficient(&d),
                        expected.coefficient(&d),
                        "p{p} c={:?} d={d:?}",
                        c.vector
                    );
                }
            }
        }
    }
}

#[test]
fn whittaker_coefficient_on_tp1() {
    let m = tp1();
    let t = *m.table();
    let verma = Verma::new(&m, 0).unwrap();
    let w = verma.whittaker_vector(2).unwrap().vector;
    // At p = {1}: x_1 -> 1, x_2 -> a2/a1; (r_{-1} r_1)|_p is the inverse of
    // the product of the two Pochhammer ratios.
    let x2 = mono(&t, Var::A(1), 1).mul(&mono(&t, Var::A(0), -1));
    let norm = hbar_ratio(&Monomial::one(), 1)
        .mul(&hbar_ratio(&x2, 1))
        .inv()
        .unwrap();
    let expected = norm
        .inv()
        .unwrap()
        .mul_monomial(&mono(&t, Var::KahlerHalf(0), 1));
    assert_eq!(w.coefficient(&[1]), expected);
}

#[test]
fn commutation_unit_lives_off_the_support() {
    let m = a2();
    for p in 0..m.fixed_points().len() {
        let verma = Verma::new(&m, p).unwrap();
        let fp = m.fixed_point(p).unwrap();
        let rays = verma.eff_cone().rays(m.k());
        for (i, ri) in rays.iter().enumerate() {
            for (j, rj) in rays.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lhs = m.mul(&m.mixed_generator(&neg(ri)), &m.mixed_generator(rj));
                let rhs = m.mul(&m.mixed_generator(rj), &m.mixed_generator(&neg(ri)));
                let deg: Vec<i64> = rj.iter().zip(ri).map(|(a, b)| a - b).collect();
                let u = lhs.coefficient(&deg).div(&rhs.coefficient(&deg)).unwrap();
                let t = m.table();
                let off: Vec<Monomial> = (0..m.n())
                    .filter(|i| !fp.support.contains(i))
                    .map(|i| m.x(i))
                    .collect();
                for atom in u.denominator_atoms() {
                    let core = atom.core.clone();
                    let stripped = core
                        .with_exponent(t.index(Var::QHalf), 0)
                        .with_exponent(t.index(Var::HbarHalf), 0);
                    assert!(
                        off.iter().any(|x| stripped == *x || stripped == x.inv()),
                        "p{p}: atom {core:?}"
                    );
                }
                let at_p = u.substitute(&fp.restriction_map(t)).unwrap();
                assert!(!at_p.is_zero());
            }
        }
    }
}

#[test]
fn eigen_property_needs_class_in_point_cone() {
    // rho_3 = (1, -1) is effective but outside Eff(p12): lowering by it
    // cannot reach v, while Q^{rho_3/2} W has the term Q^{rho_3/2} v.
    let m = a2();
    let verma = Verma::new(&m, 0).unwrap();
    let c = vec![1, -1];
    assert!(m.is_effective(&c) && !verma.contains(&c));
    let w = verma.whittaker_vector(3).unwrap().vector;
    let lowered = verma.act_generator(&neg(&c), &w).unwrap();
    assert!(lowered.coefficient(&[0, 0]).is_zero());
    assert!(!w
        .scale(&scalar(kahler_half(&m, &c)))
        .coefficient(&[0, 0])
        .is_zero());
}
