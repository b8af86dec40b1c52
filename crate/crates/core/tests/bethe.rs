mod common;

use common::*;
use coulombkit_core::bethe::*;
use coulombkit_core::coulomb::Model;
use coulombkit_core::exactring::{rat, ExactScalar, LaurentPoly, Monomial, Var, VariableTable};
use coulombkit_core::hypertoric::{permute, weyl_group};
use coulombkit_core::pochhammer::{poch, sign_kernel};
use coulombkit_core::vertex::*;

const GOLDEN: &str = include_str!("golden/tgr24_bethe_q1.txt");

fn om(x: Monomial) -> ExactScalar {
    ExactScalar::one_minus(&x)
}

#[test]
fn tp1_relation_is_forward_product() {
    let m = tp1();
    let rels = dmodule_relations(&m).unwrap();
    assert_eq!(rels.len(), 1);
    let mut expected = ExactScalar::one();
    for i in 0..2 {
        let x = m.x(i);
        expected = expected.mul(
            &sign_kernel(-1)
                .mul(&poch(&x.mul(&Monomial::hbar(1)), -1))
                .div(&poch(&x.mul(&Monomial::q(1)), -1))
                .unwrap(),
        );
    }
    assert_eq!(rels[0].lhs, expected);
    assert_eq!(rels[0].rhs_degree, vec![1]);
}

#[test]
fn one_relation_per_circuit() {
    for m in [tp1(), tpn(3), a2()] {
        assert_eq!(dmodule_relations(&m).unwrap().len(), m.circuits().len());
        assert_eq!(bethe_relations_q1(&m).unwrap().len(), m.circuits().len());
    }
}

#[test]
fn relations_reproduce_vertex_recursion() {
    for m in [tp1(), a2()] {
        let order = 3;
        for rel in dmodule_relations(&m).unwrap() {
            let c = &rel.class;
            for p in 0..m.fixed_points().len() {
                let v = vertex_fp(&m, p, &LaurentPoly::one(), order).unwrap();
                let map = m.fixed_point(p).unwrap().restriction_map(m.table());
                for d in vertex_degrees(&m, order).unwrap() {
                    let e: Vec<i64> = d.iter().zip(c).map(|(a, b)| a - b).collect();
                    if !m.is_effective(&e) {
                        continue;
                    }
                    let lhs = vertex_kernel(&m, &d)
                        .mul(&m.shift(&rel.lhs, &d))
                        .substitute(&map)
                        .unwrap();
                    assert_eq!(lhs, v.coefficient(&e), "p{p} c={c:?} d={d:?}");
                }
            }
        }
    }
}

#[test]
fn q_to_one_commutes_with_construction() {
    let spec_models = [tp1(), tpn(2), a2(), tgr24()];
    for m in spec_models {
        let map = q_to_one(m.table());
        let a = dmodule_relations(&m).unwrap();
        let b = bethe_relations_q1(&m).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.moved_class, y.moved_class);
            assert_eq!(x.lhs.substitute(&map).unwrap(), y.lhs);
            assert!(y.lhs.free_of(0..1));
        }
    }
}

#[test]
fn tp1_bethe_equation() {
    // The q = 1 limit of r_1 r_{-1}: h (1 - x1)(1 - x2) / ((1 - h x1)(1 - h x2)).
    let m = tp1();
    let rel = &bethe_relations_q1(&m).unwrap()[0];
    let h = Monomial::hbar(1);
    let expected = om(m.x(0))
        .mul(&om(m.x(1)))
        .div(&om(m.x(0).mul(&h)).mul(&om(m.x(1).mul(&h))))
        .unwrap()
        .mul_monomial(&h);
    assert_eq!(rel.lhs, expected);
    assert_eq!(
        rel.render(m.table()),
        "h*(1 - a1*s1)*(1 - a2*s1)/((1 - h*a1*s1)*(1 - h*a2*s1)) = Q1"
    );
}

/// `prod_{C_i>0} (1 - x_i)^{C_i} prod_{C_i<0} (1 - h x_i)^{-C_i}`.
fn kring_generator(m: &Model, c: &[i64]) -> ExactScalar {
    let mut g = ExactScalar::one();
    for i in 0..m.n() {
        let ci = m.data().pairing(i, c);
        if ci > 0 {
            g = g.mul(&om(m.x(i)).pow(ci as i32).unwrap());
        } else if ci < 0 {
            g = g.mul(&om(m.x(i).mul(&Monomial::hbar(1))).pow(-ci as i32).unwrap());
        }
    }
    g
}

#[test]
fn classical_limit_gives_kring_relations() {
    for m in [tp1(), tpn(2), a2()] {
        for rel in bethe_relations_q1(&m).unwrap() {
            let c = &rel.class;
            let g = kring_generator(&m, c);
            let mut h = ExactScalar::one();
            for i in 0..m.n() {
                let ci = m.data().pairing(i, c);
                if ci > 0 {
                    h = h.mul(&om(m.x(i).mul(&Monomial::hbar(1))).pow(ci as i32).unwrap());
                } else if ci < 0 {
                    h = h.mul(&om(m.x(i)).pow(-ci as i32).unwrap());
                }
            }
            let unit = rel.lhs.mul(&h).div(&g).unwrap();
            assert!(unit.numerator().single_term().is_some() && unit.denominator().is_one());
            assert_eq!(unit.factors().count(), 0);
            for p in m.fixed_points() {
                let at_p = g.substitute(&p.restriction_map(m.table())).unwrap();
                assert!(at_p.is_zero(), "{} c={c:?}", p.label());
            }
        }
    }
}

fn swap_s(t: &VariableTable, w: &[usize]) -> coulombkit_core::exactring::MonomialMap {
    let mut map = coulombkit_core::exactring::MonomialMap::identity();
    for (j, &wj) in w.iter().enumerate() {
        map.set(t.index(Var::S(j)), mono(t, Var::S(wj), 1));
    }
    map
}

#[test]
fn nonabelian_relations_are_weyl_equivariant() {
    let m = tgr24();
    let spec = tgr24_specialization(m.table());
    for rels in [
        dmodule_relations(&m).unwrap(),
        bethe_relations_q1(&m).unwrap(),
    ] {
        assert_eq!(rels.len(), 2);
        let lhs: Vec<ExactScalar> = rels
            .iter()
            .map(|r| r.specialize(&spec).unwrap().lhs)
            .collect();
        for w in weyl_group(&[2]) {
            let moved: Vec<ExactScalar> = lhs
                .iter()
                .map(|f| f.substitute(&swap_s(m.table(), &w)).unwrap())
                .collect();
            for f in &moved {
                assert!(lhs.iter().any(|g| g == f));
            }
        }
    }
}

#[test]
fn nonabelian_kahler_relation() {
    // Q^{cbar} V = V^(|W|^{-1} sum_w r_{wc} r_{-wc} prod_alpha (q s^a)_{-<a,wc>} / (h s^a)_{-<a,wc>}).
    let m = tgr24();
    let spec = tgr24_specialization(m.table());
    let c = vec![1, 0];
    let group = weyl_group(&[2]);
    let mut insertion = ExactScalar::zero();
    for w in &group {
        let wc = permute(&c, w);
        insertion = insertion
            .add(&conjugated_insertion(&m, &wc, &ExactScalar::one()).mul(&root_factor(&m, &wc)));
    }
    let insertion = insertion.scale(&num_rational::BigRational::new(
        1.into(),
        (group.len() as i64).into(),
    ));
    let order = 2;
    let p = m
        .fixed_points()
        .iter()
        .position(|p| p.support == vec![0, 5])
        .unwrap();
    let v = vertex_fp_nonab(&m, p, &LaurentPoly::one(), order, &spec).unwrap();
    let rhs = vertex_fp_nonab_general(&m, p, &insertion, order, &spec).unwrap();
    for k in 0..=order {
        let lhs = if k == 0 {
            ExactScalar::zero()
        } else {
            v.coefficient(&[k - 1])
        };
        assert_eq!(lhs, rhs.coefficient(&[k]), "degree {k}");
    }
}

/// The relation for `w c = e_j` from the general formula at `q = 1`, worked by
/// hand: `h^2 prod_f (1 - a_f^{-1} s_j)/(1 - h a_f^{-1} s_j)
/// prod_{i != j} (h - s_i/s_j)/(1 - h s_i/s_j)`.
fn tgr24_general_formula(t: &VariableTable, j: usize) -> ExactScalar {
    let h = Monomial::hbar(1);
    let sj = mono(t, Var::S(j), 1);
    let mut lhs = ExactScalar::from_monomial(Monomial::hbar(2));
    for f in 0..4 {
        let x = mono(t, Var::A(f), -1).mul(&sj);
        lhs = lhs.mul(&om(x.clone())).div(&om(x.mul(&h))).unwrap();
    }
    let i = 1 - j;
    let r = mono(t, Var::S(i), 1).mul(&sj.inv());
    lhs.mul(&om(r.mul(&Monomial::hbar(-1))).mul_monomial(&h))
        .div(&om(r.mul(&h)))
        .unwrap()
}

/// The golden T*Gr(k,n) Bethe equation at k = 2, n = 4:
/// `-h^2 prod_f (1 - h a_f^{-1} s_j)/(1 - a_f^{-1} s_j) prod_{i != j} (1 - h s_i/s_j)/(h - s_i/s_j)`.
fn tgr24_transcription(t: &VariableTable, j: usize) -> ExactScalar {
    let h = Monomial::hbar(1);
    let sj = mono(t, Var::S(j), 1);
    let mut lhs = ExactScalar::term(Monomial::hbar(2), rat(-1));
    for f in 0..4 {
        let x = mono(t, Var::A(f), -1).mul(&sj);
        lhs = lhs.mul(&om(x.mul(&h))).div(&om(x.clone())).unwrap();
    }
    let i = 1 - j;
    let r = mono(t, Var::S(i), 1).mul(&sj.inv());
    lhs.mul(&om(r.mul(&h)))
        .div(&om(r.mul(&Monomial::hbar(-1))).mul_monomial(&h))
        .unwrap()
}

fn tgr24_specialized_q1(m: &Model) -> Vec<Relation> {
    let spec = tgr24_specialization(m.table());
    bethe_relations_q1(m)
        .unwrap()
        .iter()
        .map(|r| r.specialize(&spec).unwrap())
        .collect()
}

#[test]
fn tgr24_matches_general_formula() {
    let m = tgr24();
    for rel in tgr24_specialized_q1(&m) {
        let j = rel.moved_class.iter().position(|&x| x == 1).unwrap();
        assert_eq!(rel.lhs, tgr24_general_formula(m.table(), j), "j={j}");
        assert_eq!(rel.rhs_degree, vec![1]);
    }
}

#[test]
fn golden_file_is_the_transcription() {
    let m = tgr24();
    let rels: Vec<Relation> = (0..2)
        .map(|j| Relation {
            class: vec![1, 0],
            moved_class: vec![1, 0],
            weyl: None,
            lhs: tgr24_transcription(m.table(), j),
            rhs_degree: vec![1],
            kind: RelationKind::BetheQ1,
        })
        .collect();
    assert_eq!(render_bethe_system(&m, &rels), GOLDEN);
}

#[test]
fn transcription_and_general_formula_differ() {
    // The two forms are inverse up to the constant -h^4, so the golden
    // transcription cannot be matched exactly.
    let m = tgr24();
    for j in 0..2 {
        let prod = tgr24_general_formula(m.table(), j).mul(&tgr24_transcription(m.table(), j));
        assert_eq!(prod, ExactScalar::term(Monomial::hbar(4), rat(-1)));
    }
    assert_ne!(render_bethe_system(&m, &tgr24_specialized_q1(&m)), GOLDEN);
}

#[test]
fn empty_relation_set_renders_empty() {
    let m = tp1();
    assert_eq!(render_bethe_system(&m, &[]), "");
}
