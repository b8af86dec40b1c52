//! The algebra generated by the Cartan coefficients and `r_d`, in
//! left-coefficient normal form `sum_d f_d(a, s, q, h) r_d`.
//!
//! Moving `r_c` to the right of a coefficient replaces `s_j` by
//! `q^{-c_j} s_j`. Products of generators follow the structure constants
//! below; everything else is bilinear extension.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::{ExactScalar, Monomial, MonomialMap, Var, VariableTable};
use crate::hypertoric::{
    circuits, eff_cone, fixed_points, mixed_polarization, permute, weyl_group, Circuit, Cone,
    FixedPoint, GaugeData, Polarization,
};
use crate::lattice::{det, solve_integer, subsets};
use crate::pochhammer::{hbar_ratio, poch, sign_kernel};

/// The sign function.
pub fn epsilon(c: i64) -> i64 {
    c.signum()
}

/// `0` if `c` and `d` have the same sign (or one vanishes), else `min(|c|, |d|)`.
pub fn delta(c: i64, d: i64) -> i64 {
    if c.signum() * d.signum() < 0 {
        c.abs().min(d.abs())
    } else {
        0
    }
}

/// A finite sum `sum_d f_d r_d` with coefficients on the left.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AlgebraElement {
    terms: BTreeMap<Vec<i64>, ExactScalar>,
}

/// A finite sum `sum_c f_c t_c` in the right module.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModuleElement {
    terms: BTreeMap<Vec<i64>, ExactScalar>,
}

pub(crate) fn add_into(terms: &mut BTreeMap<Vec<i64>, ExactScalar>, d: Vec<i64>, f: ExactScalar) {
    if f.is_zero() {
        return;
    }
    match terms.get_mut(&d) {
        Some(g) => {
            let s = g.add(&f);
            if s.is_zero() {
                terms.remove(&d);
            } else {
                *g = s;
            }
        }
        None => {
            terms.insert(d, f);
        }
    }
}

macro_rules! graded_sum {
    ($ty:ident) => {
        impl $ty {
            pub fn zero() -> Self {
                $ty::default()
            }

            /// `f` in degree `d`.
            pub fn term(d: Vec<i64>, f: ExactScalar) -> Self {
                let mut out = $ty::zero();
                out.add_term(d, f);
                out
            }

            /// The basis element of degree `d` with coefficient 1.
            pub fn generator(d: Vec<i64>) -> Self {
                $ty::term(d, ExactScalar::one())
            }

            pub fn add_term(&mut self, d: Vec<i64>, f: ExactScalar) {
                $crate::coulomb::add_into(&mut self.terms, d, f);
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &ExactScalar)> {
                self.terms.iter()
            }

            pub fn coefficient(&self, d: &[i64]) -> ExactScalar {
                self.terms.get(d).cloned().unwrap_or_else(ExactScalar::zero)
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (d, f) in other.terms.iter() {
                    out.add_term(d.clone(), f.clone());
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.scale(&ExactScalar::from_int(-1)))
            }

            /// Multiply every coefficient on the left by `f`.
            pub fn scale(&self, f: &ExactScalar) -> Self {
                let mut out = $ty::zero();
                for (d, g) in self.terms.iter() {
                    out.add_term(d.clone(), f.mul(g));
                }
                out
            }

            /// The only term, if there is exactly one.
            pub fn single_term(&self) -> Option<(&Vec<i64>, &ExactScalar)> {
                if self.terms.len() == 1 {
                    self.terms.iter().next()
                } else {
                    None
                }
            }

            /// Apply a coefficient-wise map, dropping terms that become zero.
            pub fn map_coefficients<F: Fn(&Vec<i64>, &ExactScalar) -> Result<ExactScalar>>(
                &self,
                f: F,
            ) -> Result<Self> {
                let mut out = $ty::zero();
                for (d, g) in self.terms.iter() {
                    out.add_term(d.clone(), f(d, g)?);
                }
                Ok(out)
            }
        }
    };
}

pub(crate) use graded_sum;

graded_sum!(AlgebraElement);
graded_sum!(ModuleElement);

impl AlgebraElement {
    pub fn identity(k: usize) -> Self {
        AlgebraElement::generator(vec![0; k])
    }

    /// A Cartan element `f r_0`.
    pub fn scalar(f: ExactScalar, k: usize) -> Self {
        AlgebraElement::term(vec![0; k], f)
    }
}

#[cfg(feature = "std")]
type CacheKey = (Vec<i64>, Vec<i64>, Polarization);

/// A gauge datum together with its derived combinatorics and a memo of
/// structure constants.
#[derive(Debug)]
pub struct Model {
    data: GaugeData,
    table: VariableTable,
    circuits: Vec<Circuit>,
    eff: Cone,
    fixed_points: Vec<FixedPoint>,
    #[cfg(feature = "std")]
    cache: std::sync::RwLock<BTreeMap<CacheKey, ExactScalar>>,
}

impl Clone for Model {
    fn clone(&self) -> Self {
        Model {
            data: self.data.clone(),
            table: self.table,
            circuits: self.circuits.clone(),
            eff: self.eff.clone(),
            fixed_points: self.fixed_points.clone(),
            #[cfg(feature = "std")]
            cache: std::sync::RwLock::new(BTreeMap::new()),
        }
    }
}

impl Model {
    pub fn new(data: GaugeData) -> Result<Self> {
        data.validate()?;
        let circuits = circuits(&data)?;
        let eff = eff_cone(&data)?;
        let fixed_points = fixed_points(&data)?;
        Ok(Model {
            table: data.table(),
            data,
            circuits,
            eff,
            fixed_points,
            #[cfg(feature = "std")]
            cache: std::sync::RwLock::new(BTreeMap::new()),
        })
    }

    pub fn data(&self) -> &GaugeData {
        &self.data
    }

    pub fn table(&self) -> &VariableTable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.data.n()
    }

    pub fn k(&self) -> usize {
        self.data.k()
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn eff_cone(&self) -> &Cone {
        &self.eff
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.fixed_points
    }

    pub fn fixed_point(&self, index: usize) -> Result<&FixedPoint> {
        self.fixed_points
            .get(index)
            .ok_or(Error::InvalidFixedPoint(index))
    }

    pub fn is_effective(&self, d: &[i64]) -> bool {
        self.eff.contains(d)
    }

    pub fn x(&self, i: usize) -> Monomial {
        self.data.x_monomial(i)
    }

    pub fn s(&self, j: usize) -> Monomial {
        Monomial::of(&self.table, Var::S(j), 1)
    }

    pub fn a(&self, i: usize) -> Monomial {
        Monomial::of(&self.table, Var::A(i), 1)
    }

    fn s_indices(&self) -> Vec<usize> {
        self.table.s_range().collect()
    }

    /// `f` with `s_j` replaced by `q^{m_j} s_j`.
    pub fn shift(&self, f: &ExactScalar, m: &[i64]) -> ExactScalar {
        f.q_shift_many(&self.s_indices(), m)
    }

    /// `f` with `s_j` replaced by `q^{-c_j} s_j`: the coefficient obtained by
    /// moving `f` to the left of `r_c`.
    pub fn move_left(&self, f: &ExactScalar, c: &[i64]) -> ExactScalar {
        let neg: Vec<i64> = c.iter().map(|x| -x).collect();
        self.shift(f, &neg)
    }

    /// The scalar `gamma` with `r_c r_d = gamma r_{c+d}` in polarization `pol`.
    pub fn structure_constant(&self, c: &[i64], d: &[i64], pol: &Polarization) -> ExactScalar {
        #[cfg(feature = "std")]
        {
            let key = (c.to_vec(), d.to_vec(), pol.clone());
            if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
                return v.clone();
            }
            let v = self.structure_constant_uncached(c, d, pol);
            self.cache
                .write()
                .expect("cache lock")
                .entry(key)
                .or_insert_with(|| v.clone());
            v
        }
        #[cfg(not(feature = "std"))]
        {
            self.structure_constant_uncached(c, d, pol)
        }
    }

    fn structure_constant_uncached(&self, c: &[i64], d: &[i64], pol: &Polarization) -> ExactScalar {
        let mut out = ExactScalar::one();
        for i in 0..self.n() {
            let ci = self.data.pairing(i, c);
            let di = self.data.pairing(i, d);
            let e = epsilon(ci);
            let m = e * delta(ci, di);
            if m == 0 {
                continue;
            }
            let y = self.x(i).mul(&Monomial::q(-ci as i32));
            let base = hbar_ratio(&y, m);
            let exp = if pol.contains(i) { -e } else { e };
            out = out.mul(&base.pow(exp as i32).expect("nonzero Pochhammer ratio"));
        }
        out
    }

    /// Product in the algebra with polarization `pol`.
    pub fn mul_pol(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
        pol: &Polarization,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, f) in a.terms() {
            for (d, g) in b.terms() {
                let coeff = f
                    .mul(&self.move_left(g, c))
                    .mul(&self.structure_constant(c, d, pol));
                let deg: Vec<i64> = c.iter().zip(d).map(|(x, y)| x + y).collect();
                out.add_term(deg, coeff);
            }
        }
        out
    }

    /// Product with the canonical polarization.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.mul_pol(a, b, &Polarization::canonical(self.n()))
    }

    /// Product of a sequence of elements, left to right.
    pub fn mul_all(&self, factors: &[AlgebraElement]) -> AlgebraElement {
        factors
            .iter()
            .fold(AlgebraElement::identity(self.k()), |acc, f| {
                self.mul(&acc, f)
            })
    }

    /// The anti-automorphism fixing coefficients with `r_d -> r_{-d}`.
    pub fn tau(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (d, f) in a.terms() {
            // tau(f r_d) = r_{-d} f = f(q^d s) r_{-d}
            let neg: Vec<i64> = d.iter().map(|x| -x).collect();
            out.add_term(neg, self.shift(f, d));
        }
        out
    }

    /// `r_d` expressed through the generator of polarization `pol`:
    /// `prod_{i not in pol} [sk(-D_i) (h x_i)_{-D_i} / (q x_i)_{-D_i}]^{-eps(D_i)} r_d`.
    pub fn change_of_polarization(&self, d: &[i64], pol: &Polarization) -> AlgebraElement {
        let mut coeff = ExactScalar::one();
        for i in 0..self.n() {
            let di = self.data.pairing(i, d);
            if pol.contains(i) || di == 0 {
                continue;
            }
            let base = hbar_ratio(&self.x(i), -di);
            coeff = coeff.mul(
                &base
                    .pow(-epsilon(di) as i32)
                    .expect("nonzero Pochhammer ratio"),
            );
        }
        AlgebraElement::term(d.to_vec(), coeff)
    }

    /// The generator `r_d` of mixed polarization: polarized by the cochamber
    /// containing `d` (or `-d`) when one of them is effective, `r_d` otherwise.
    pub fn mixed_generator(&self, d: &[i64]) -> AlgebraElement {
        if d.iter().all(|&x| x == 0) {
            return AlgebraElement::identity(self.k());
        }
        let neg: Vec<i64> = d.iter().map(|x| -x).collect();
        if self.is_effective(d) {
            self.change_of_polarization(d, &mixed_polarization(&self.data, d))
        } else if self.is_effective(&neg) {
            self.change_of_polarization(d, &mixed_polarization(&self.data, &neg))
        } else {
            AlgebraElement::generator(d.to_vec())
        }
    }

    /// The left coefficient of the mixed generator in degree `d`.
    pub fn mixed_coefficient(&self, d: &[i64]) -> ExactScalar {
        self.mixed_generator(d).coefficient(d)
    }

    /// `r_{-d} r_d` for mixed generators as a Cartan scalar.
    pub fn mixed_norm(&self, d: &[i64]) -> ExactScalar {
        let neg: Vec<i64> = d.iter().map(|x| -x).collect();
        let prod = self.mul(&self.mixed_generator(&neg), &self.mixed_generator(d));
        prod.coefficient(&vec![0; self.k()])
    }

    /// Right action `t_c r_d = prod_{D_i<0} [sk(D_i) (q^{1-C_i} x_i)_{-D_i} / (q^{-C_i} h x_i)_{-D_i}] t_{c+d}`.
    pub fn module_act(&self, t: &ModuleElement, a: &AlgebraElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (c, f) in t.terms() {
            for (d, g) in a.terms() {
                let mut coeff = f.mul(&self.move_left(g, c));
                for i in 0..self.n() {
                    let di = self.data.pairing(i, d);
                    if di >= 0 {
                        continue;
                    }
                    let ci = self.data.pairing(i, c);
                    let y = self.x(i).mul(&Monomial::q(-ci as i32));
                    coeff =
                        coeff.mul(&hbar_ratio(&y, -di).inv().expect("nonzero Pochhammer ratio"));
                }
                let deg: Vec<i64> = c.iter().zip(d).map(|(x, y)| x + y).collect();
                out.add_term(deg, coeff);
            }
        }
        out
    }

    /// `sum_i sk(-D_i) (h x_i)_{-D_i} / (q x_i)_{-D_i}` over all `i`: the
    /// closed form of `r_d r_{-d}` for effective `d`.
    pub fn closed_form_forward_norm(&self, d: &[i64]) -> ExactScalar {
        (0..self.n()).fold(ExactScalar::one(), |acc, i| {
            acc.mul(&hbar_ratio(&self.x(i), -self.data.pairing(i, d)))
        })
    }

    /// `prod_i [sk(D_i) (h x_i)_{D_i} / (q x_i)_{D_i}]^{-1}`: the closed form
    /// of `r_{-d} r_d` for effective `d`.
    pub fn closed_form_backward_norm(&self, d: &[i64]) -> ExactScalar {
        (0..self.n()).fold(ExactScalar::one(), |acc, i| {
            acc.mul(
                &hbar_ratio(&self.x(i), self.data.pairing(i, d))
                    .inv()
                    .expect("nonzero Pochhammer ratio"),
            )
        })
    }

    /// Action of a coordinate permutation `w` within blocks: permutes `s`,
    /// the `a` of rows carried into each other, and degree keys.
    pub fn weyl_act(&self, w: &[usize], a: &AlgebraElement) -> AlgebraElement {
        let map = self.weyl_map(w);
        let mut out = AlgebraElement::zero();
        for (d, f) in a.terms() {
            out.add_term(
                permute(d, w),
                f.substitute(&map)
                    .expect("variable permutations have no poles"),
            );
        }
        out
    }

    fn weyl_map(&self, w: &[usize]) -> MonomialMap {
        let t = &self.table;
        let mut map = MonomialMap::identity();
        for (j, &wj) in w.iter().enumerate() {
            map.set(t.index(Var::S(j)), Monomial::of(t, Var::S(wj), 1));
        }
        let mut used = vec![false; self.n()];
        for i in 0..self.n() {
            let target = permute(&self.data.chi[i], w);
            if let Some(r) = (0..self.n()).find(|&r| !used[r] && self.data.chi[r] == target) {
                used[r] = true;
                map.set(t.index(Var::A(i)), Monomial::of(t, Var::A(r), 1));
            }
        }
        map
    }

    /// Weyl-averaged generator for a dominant `d`:
    /// `(1/|W|) sum_w prod_{<alpha, wd> > 0} [sk(m) (q s^alpha)_{-m} / (h s^alpha)_{-m}] r_{wd}`.
    pub fn symmetrized_generator(&self, d: &[i64]) -> Result<AlgebraElement> {
        let blocks = self.data.blocks.as_ref().ok_or(Error::NoBlockStructure)?;
        let mut offset = 0;
        for &b in blocks {
            if (offset..offset + b - 1).any(|j| d[j] < d[j + 1]) {
                return Err(Error::NotDominant(d.to_vec()));
            }
            offset += b;
        }
        let group = weyl_group(blocks);
        let mut out = AlgebraElement::zero();
        for w in group.iter() {
            let wd = permute(d, w);
            let mut coeff = ExactScalar::one();
            for (a, b) in self.roots() {
                let m = wd[a] - wd[b];
                if m <= 0 {
                    continue;
                }
                let sa = self.s(a).div(&self.s(b));
                let num = poch(&sa.mul(&Monomial::q(1)), -m);
                let den = poch(&sa.mul(&Monomial::hbar(1)), -m);
                coeff = coeff
                    .mul(&sign_kernel(m))
                    .mul(&num.div(&den).expect("nonzero Pochhammer symbol"));
            }
            out = out.add(&self.mixed_generator(&wd).scale(&coeff));
        }
        let inv = ExactScalar::from_rational(num_rational::BigRational::new(
            1.into(),
            (group.len() as i64).into(),
        ));
        Ok(out.scale(&inv))
    }

    /// Ordered pairs `(a, b)`, `a != b` in one block: the roots `e_a - e_b`.
    pub fn roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if let Some(blocks) = &self.data.blocks {
            let mut offset = 0;
            for &b in blocks {
                for a in offset..offset + b {
                    for c in offset..offset + b {
                        if a != c {
                            out.push((a, c));
                        }
                    }
                }
                offset += b;
            }
        }
        out
    }

    /// `s^alpha` for the root `e_a - e_b`.
    pub fn root_monomial(&self, root: (usize, usize)) -> Monomial {
        self.s(root.0).div(&self.s(root.1))
    }
}

/// The rank-`n` abelian point: weights `e_1, .., e_n`, multiplied by
/// rewriting words in `r_{+-b_i}` with only the rank-one relations
/// `r_{-b} r_b = sk(-1) (1 - q x)/(1 - h x)`, `r_b r_{-b} = sk(-1) (1 - x)/(1 - q^{-1} h x)`,
/// commutation across coordinates and the shift of Cartan variables past generators.
#[derive(Clone, Debug)]
pub struct AbelianPoint {
    n: usize,
    table: VariableTable,
}

impl AbelianPoint {
    pub fn new(n: usize) -> Self {
        AbelianPoint {
            n,
            table: VariableTable::new(n, n),
        }
    }

    pub fn table(&self) -> &VariableTable {
        &self.table
    }

    fn xt(&self, i: usize) -> Monomial {
        Monomial::of(&self.table, Var::A(i), 1).mul(&Monomial::of(&self.table, Var::S(i), 1))
    }

    /// `elem * r_{sign b_i}`.
    pub fn mul_generator(&self, elem: &AlgebraElement, i: usize, sign: i64) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (e, f) in elem.terms() {
            let mut deg = e.clone();
            deg[i] += sign;
            let coeff = if e[i] * sign >= 0 {
                f.clone()
            } else {
                let x = self.xt(i);
                let g = if sign > 0 {
                    // r_{-b} r_b
                    ExactScalar::one_minus(&x.mul(&Monomial::q(1)))
                        .div(&ExactScalar::one_minus(&x.mul(&Monomial::hbar(1))))
                } else {
                    // r_b r_{-b}
                    ExactScalar::one_minus(&x).div(&ExactScalar::one_minus(
                        &x.mul(&Monomial::hbar(1)).mul(&Monomial::q(-1)),
                    ))
                }
                .expect("nonzero binomial")
                .mul(&sign_kernel(-1));
                // g sits right of r_{deg_i b_i}; only that factor moves x_i.
                let g = g.q_shift(self.table.index(Var::S(i)), -deg[i] as i32);
                f.mul(&g)
            };
            out.add_term(deg, coeff);
        }
        out
    }

    /// The word `prod_{e_i>0} r_{b_i}^{e_i} prod_{e_i<0} r_{-b_i}^{-e_i}` applied on the right.
    pub fn mul_word(&self, elem: &AlgebraElement, e: &[i64]) -> AlgebraElement {
        let mut out = elem.clone();
        for i in 0..self.n {
            for _ in 0..e[i].abs() {
                out = self.mul_generator(&out, i, e[i].signum());
            }
        }
        out
    }

    pub fn word(&self, e: &[i64]) -> AlgebraElement {
        self.mul_word(&AlgebraElement::identity(self.n), e)
    }
}

/// `iota(d) = (<chi_1, d>, .., <chi_n, d>)`.
pub fn iota(model: &Model, d: &[i64]) -> Vec<i64> {
    model.data().pairings(d)
}

/// The lift of `r_d` to the abelian point, as a word in `r_{+-b_i}`.
pub fn abelian_point_lift(model: &Model, d: &[i64]) -> (AbelianPoint, AlgebraElement) {
    let ap = AbelianPoint::new(model.n());
    let w = ap.word(&iota(model, d));
    (ap, w)
}

/// Hamiltonian reduction of an abelian-point element: `s~_i -> s^{chi_i}`
/// and degree `iota(m) -> m`.
pub fn reduce_from_abelian_point(
    model: &Model,
    ap: &AbelianPoint,
    elem: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut map = MonomialMap::identity();
    for i in 0..model.n() {
        let mut m = Monomial::one();
        for j in 0..model.k() {
            m = m.mul(&model.s(j).pow(model.data().chi[i][j] as i32));
        }
        map.set(ap.table().index(Var::S(i)), m);
    }
    let k = model.k();
    let basis = subsets(model.n(), k)
        .into_iter()
        .find(|sub| {
            let rows: Vec<Vec<i64>> = sub.iter().map(|&i| model.data().chi[i].clone()).collect();
            det(&rows) != 0
        })
        .ok_or(Error::RankDeficient)?;
    let rows: Vec<Vec<i64>> = basis.iter().map(|&i| model.data().chi[i].clone()).collect();
    let mut out = AlgebraElement::zero();
    for (e, f) in elem.terms() {
        let v: Vec<i64> = basis.iter().map(|&i| e[i]).collect();
        let m = solve_integer(&rows, &v)
            .filter(|m| iota(model, m) == *e)
            .ok_or_else(|| Error::InvalidInput("degree is not in the image of iota".into()))?;
        out.add_term(m, f.substitute(&map)?);
    }
    Ok(out)
}

/// Structure constant of the abelian-point words, reduced to the model.
pub fn structure_constant_via_lift(model: &Model, c: &[i64], d: &[i64]) -> Result<ExactScalar> {
    let (ap, lc) = abelian_point_lift(model, c);
    let prod = ap.mul_word(&lc, &iota(model, d));
    let reduced = reduce_from_abelian_point(model, &ap, &prod)?;
    let deg: Vec<i64> = c.iter().zip(d).map(|(x, y)| x + y).collect();
    Ok(reduced.coefficient(&deg))
}
