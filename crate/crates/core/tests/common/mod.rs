#![allow(dead_code)]

use coulombkit_core::coulomb::Model;
use coulombkit_core::exactring::{ExactScalar, LaurentPoly, Monomial, Var, VariableTable};
use coulombkit_core::hypertoric::GaugeData;

/// T*P^n: n+1 hypermultiplets of weight 1.
pub fn tpn(n: usize) -> Model {
    Model::new(GaugeData::new(vec![vec![1]; n + 1], vec![1]).unwrap()).unwrap()
}

pub fn tp1() -> Model {
    tpn(1)
}

/// The A_2 surface: weights (1,0), (0,1), (-1,-1) with theta = (2,1).
pub fn a2_data() -> GaugeData {
    GaugeData::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![2, 1]).unwrap()
}

pub fn a2() -> Model {
    Model::new(a2_data()).unwrap()
}

/// Rank one with weights 1 and -1.
pub fn conifold_data(theta: i64) -> GaugeData {
    GaugeData::new(vec![vec![1], vec![-1]], vec![theta]).unwrap()
}

pub fn mono(t: &VariableTable, v: Var, e: i32) -> Monomial {
    Monomial::of(t, v, e)
}

/// Descendents used across the vertex checks: 1, s_1 and a_1 s_1 - h.
pub fn descendents(t: &VariableTable) -> Vec<LaurentPoly> {
    let s1 = mono(t, Var::S(0), 1);
    let a1 = mono(t, Var::A(0), 1);
    let mut third = LaurentPoly::monomial(a1.mul(&s1));
    third.add_term(Monomial::hbar(1), coulombkit_core::exactring::rat(-1));
    vec![LaurentPoly::one(), LaurentPoly::monomial(s1), third]
}

pub fn scalar(m: Monomial) -> ExactScalar {
    ExactScalar::from_monomial(m)
}

/// The abelianization of T*Gr(2,4): rows `(f, j)` at index `4j + f` with
/// weight `e_j`, one block of size 2.
pub fn tgr24_data() -> GaugeData {
    let mut chi = Vec::new();
    for j in 0..2 {
        for _ in 0..4 {
            let mut row = vec![0, 0];
            row[j] = 1;
            chi.push(row);
        }
    }
    GaugeData::new(chi, vec![1, 1])
        .unwrap()
        .with_blocks(vec![2])
        .unwrap()
}

pub fn tgr24() -> Model {
    Model::new(tgr24_data()).unwrap()
}

/// `a_{(f, j)} -> a_f^{-1}`.
pub fn tgr24_specialization(t: &VariableTable) -> coulombkit_core::exactring::MonomialMap {
    let mut map = coulombkit_core::exactring::MonomialMap::identity();
    for j in 0..2 {
        for f in 0..4 {
            map.set(t.index(Var::A(4 * j + f)), mono(t, Var::A(f), -1));
        }
    }
    map
}
