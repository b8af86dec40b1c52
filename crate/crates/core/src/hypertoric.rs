//! Lattice combinatorics of a hypertoric model: walls and circuits, fixed
//! points with their restriction maps, effective cones and polarizations.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::{Monomial, MonomialMap, Var, VariableTable};
use crate::lattice::{det, dot, inverse_unimodular, primitive_normal, rank, subsets};

/// Weights `chi` (one row per hypermultiplet) of a torus of rank `k`, with a
/// stability parameter `theta` and optional general-linear blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeData {
    pub chi: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    /// Sizes of consecutive coordinate blocks; `None` for a torus.
    pub blocks: Option<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

impl GaugeData {
    pub fn new(chi: Vec<Vec<i64>>, theta: Vec<i64>) -> Result<Self> {
        let data = GaugeData {
            chi,
            theta,
            blocks: None,
            labels: None,
        };
        data.validate()?;
        Ok(data)
    }

    pub fn with_blocks(mut self, blocks: Vec<usize>) -> Result<Self> {
        self.blocks = Some(blocks);
        self.validate()?;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.chi.len()
    }

    pub fn k(&self) -> usize {
        self.theta.len()
    }

    pub fn table(&self) -> VariableTable {
        VariableTable::new(self.n(), self.k())
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::DimensionMismatch("theta is empty".into()));
        }
        for (i, row) in self.chi.iter().enumerate() {
            if row.len() != k {
                return Err(Error::DimensionMismatch(alloc::format!(
                    "row {} has length {}, expected {k}",
                    i + 1,
                    row.len()
                )));
            }
            if row.iter().all(|&x| x == 0) {
                return Err(Error::ZeroRow(i));
            }
        }
        if rank(&self.chi, k) != k {
            return Err(Error::RankDeficient);
        }
        if let Some(blocks) = &self.blocks {
            if blocks.iter().sum::<usize>() != k || blocks.contains(&0) {
                return Err(Error::InvalidBlocks(
                    "block sizes must be positive and sum to k".into(),
                ));
            }
            for w in weyl_group(blocks) {
                let mut a: Vec<Vec<i64>> = self.chi.clone();
                let mut b: Vec<Vec<i64>> = self.chi.iter().map(|r| permute(r, &w)).collect();
                a.sort();
                b.sort();
                if a != b {
                    return Err(Error::InvalidBlocks(
                        "weight rows are not invariant under block permutations".into(),
                    ));
                }
                if permute(&self.theta, &w) != self.theta {
                    return Err(Error::InvalidBlocks("theta is not Weyl invariant".into()));
                }
            }
        }
        Ok(())
    }

    /// `<chi_i, d>`.
    pub fn pairing(&self, i: usize, d: &[i64]) -> i64 {
        dot(&self.chi[i], d)
    }

    pub fn pairings(&self, d: &[i64]) -> Vec<i64> {
        (0..self.n()).map(|i| self.pairing(i, d)).collect()
    }

    /// The grading `<theta, d>`.
    pub fn level(&self, d: &[i64]) -> i64 {
        dot(&self.theta, d)
    }

    /// `x_i = a_i s^{chi_i}`.
    pub fn x_monomial(&self, i: usize) -> Monomial {
        let t = self.table();
        let mut exps = vec![0i32; t.len()];
        exps[t.index(Var::A(i))] = 1;
        for j in 0..self.k() {
            exps[t.index(Var::S(j))] = self.chi[i][j] as i32;
        }
        Monomial::from_exponents(exps)
    }

    /// Same data with another stability parameter.
    pub fn with_theta(&self, theta: Vec<i64>) -> Result<Self> {
        let mut out = self.clone();
        out.theta = theta;
        out.validate()?;
        Ok(out)
    }
}

/// Apply the coordinate permutation `w` (`out[w[j]] = v[j]`).
pub fn permute(v: &[i64], w: &[usize]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (j, &x) in v.iter().enumerate() {
        out[w[j]] = x;
    }
    out
}

/// All permutations of `0..k` preserving the consecutive blocks, identity first.
pub fn weyl_group(blocks: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let mut offset = 0;
    for &b in blocks {
        let perms = permutations(b);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for prefix in out.iter() {
            for p in perms.iter() {
                let mut w = prefix.clone();
                w.extend(p.iter().map(|&x| x + offset));
                next.push(w);
            }
        }
        out = next;
        offset += b;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in (0..n).rev() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Primitive normal of a wall, oriented positively against `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub vector: Vec<i64>,
    /// The `(k-1)`-subsets of rows spanning the wall.
    pub walls: Vec<Vec<usize>>,
}

/// One circuit per wall, ordered by the first subset of rows spanning it.
pub fn circuits(data: &GaugeData) -> Result<Vec<Circuit>> {
    circuits_for(data, &data.theta)
}

fn circuits_for(data: &GaugeData, theta: &[i64]) -> Result<Vec<Circuit>> {
    let k = data.k();
    let mut found: Vec<Circuit> = Vec::new();
    for sub in subsets(data.n(), k - 1) {
        let rows: Vec<Vec<i64>> = sub.iter().map(|&i| data.chi[i].clone()).collect();
        let Some(mut rho) = primitive_normal(&rows, k) else {
            continue;
        };
        let l = dot(theta, &rho);
        if l == 0 {
            return Err(Error::ThetaOnWall(sub));
        }
        if l < 0 {
            rho.iter_mut().for_each(|x| *x = -*x);
        }
        match found.iter_mut().find(|c| c.vector == rho) {
            Some(c) => c.walls.push(sub),
            None => found.push(Circuit {
                vector: rho,
                walls: vec![sub],
            }),
        }
    }
    Ok(found)
}

/// A torus-fixed point of the hypertoric variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub support: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// Coefficients of `theta = sum_j c_j chi_j` over the support.
    pub coeffs: Vec<i64>,
    /// Image of each `s_j`, a monomial in `a` and `h`.
    pub restriction: Vec<Monomial>,
    /// Boundary rays of `Eff(p)`, dual to the support rows.
    pub rays: Vec<Vec<i64>>,
}

impl FixedPoint {
    pub fn is_plus(&self, i: usize) -> bool {
        self.plus.contains(&i)
    }

    /// The substitution `s_j -> s_j|_p`.
    pub fn restriction_map(&self, table: &VariableTable) -> MonomialMap {
        let mut map = MonomialMap::identity();
        for (j, m) in self.restriction.iter().enumerate() {
            map.set(table.index(Var::S(j)), m.clone());
        }
        map
    }

    /// The substitution `s_j -> q^{m_j} s_j|_p`.
    pub fn shifted_restriction_map(&self, table: &VariableTable, m: &[i64]) -> MonomialMap {
        let mut map = MonomialMap::identity();
        for (j, r) in self.restriction.iter().enumerate() {
            map.set(table.index(Var::S(j)), r.mul(&Monomial::q(m[j] as i32)));
        }
        map
    }

    /// Human-readable label such as `p13`.
    pub fn label(&self) -> String {
        let mut s = String::from("p");
        for i in &self.support {
            s.push_str(&alloc::format!("{}", i + 1));
        }
        s
    }
}

/// All fixed points, one per unimodular `k`-subset, in lexicographic order.
pub fn fixed_points(data: &GaugeData) -> Result<Vec<FixedPoint>> {
    let k = data.k();
    let t = data.table();
    let mut out = Vec::new();
    for sub in subsets(data.n(), k) {
        let b: Vec<Vec<i64>> = sub.iter().map(|&i| data.chi[i].clone()).collect();
        let d = det(&b);
        if d == 0 {
            continue;
        }
        let binv = inverse_unimodular(&b).ok_or_else(|| Error::NonUnimodular(sub.clone()))?;
        let coeffs: Vec<i64> = (0..k)
            .map(|l| (0..k).map(|t| data.theta[t] * binv[t][l]).sum())
            .collect();
        if let Some(l) = coeffs.iter().position(|&c| c == 0) {
            let rows: Vec<usize> = (0..k).filter(|&j| j != l).map(|j| sub[j]).collect();
            return Err(Error::ThetaOnWall(rows));
        }
        let plus: Vec<usize> = (0..k).filter(|&j| coeffs[j] > 0).map(|j| sub[j]).collect();
        let minus: Vec<usize> = (0..k).filter(|&j| coeffs[j] < 0).map(|j| sub[j]).collect();
        // s^{chi_j} = a_j^{-1} h^{-[j in p-]}, solved with the inverse basis matrix.
        let restriction: Vec<Monomial> = (0..k)
            .map(|l| {
                let mut exps = vec![0i32; t.len()];
                for (j, &i) in sub.iter().enumerate() {
                    let e = binv[l][j] as i32;
                    exps[t.index(Var::A(i))] -= e;
                    if coeffs[j] < 0 {
                        exps[t.index(Var::HbarHalf)] -= 2 * e;
                    }
                }
                Monomial::from_exponents(exps)
            })
            .collect();
        let rays: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                let sign = if coeffs[j] > 0 { 1 } else { -1 };
                (0..k).map(|l| sign * binv[l][j]).collect()
            })
            .collect();
        out.push(FixedPoint {
            support: sub,
            plus,
            minus,
            coeffs,
            restriction,
            rays,
        });
    }
    Ok(out)
}

/// A rational polyhedral cone with both descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub generators: Vec<Vec<i64>>,
    /// Inward normals: `d` is in the cone iff every normal pairs nonnegatively.
    pub facet_normals: Vec<Vec<i64>>,
}

impl Cone {
    /// Cone spanned by full-rank generators; facets are found among the
    /// hyperplanes through `k-1` generators.
    pub fn from_generators(generators: Vec<Vec<i64>>, k: usize) -> Cone {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
        for sub in subsets(gens.len(), k - 1) {
            let rows: Vec<Vec<i64>> = sub.iter().map(|&i| gens[i].clone()).collect();
            let Some(nv) = primitive_normal(&rows, k) else {
                continue;
            };
            let vals: Vec<i64> = gens.iter().map(|g| dot(&nv, g)).collect();
            if vals.iter().all(|&v| v >= 0) {
                normals.insert(nv);
            } else if vals.iter().all(|&v| v <= 0) {
                normals.insert(nv.iter().map(|x| -x).collect());
            }
        }
        Cone {
            generators: gens,
            facet_normals: normals.into_iter().collect(),
        }
    }

    pub fn contains(&self, d: &[i64]) -> bool {
        self.facet_normals.iter().all(|nv| dot(nv, d) >= 0)
    }

    /// Extremal generators: those lying on at least `k-1` independent facets.
    pub fn rays(&self, k: usize) -> Vec<Vec<i64>> {
        self.generators
            .iter()
            .filter(|g| {
                let tight: Vec<Vec<i64>> = self
                    .facet_normals
                    .iter()
                    .filter(|nv| dot(nv, g) == 0)
                    .cloned()
                    .collect();
                rank(&tight, k) + 1 >= k
            })
            .cloned()
            .collect()
    }

    /// The dual cone, described by swapping generators and normals.
    pub fn dual(&self) -> Cone {
        Cone {
            generators: self.facet_normals.clone(),
            facet_normals: self.generators.clone(),
        }
    }
}

/// `Eff(X)`, the cone generated by the circuits.
pub fn eff_cone(data: &GaugeData) -> Result<Cone> {
    let gens = circuits(data)?.into_iter().map(|c| c.vector).collect();
    Ok(Cone::from_generators(gens, data.k()))
}

/// `Eff(p)`, cut out by `<chi_j, d> >= 0` on `p+` and `<= 0` on `p-`.
pub fn eff_cone_fp(data: &GaugeData, p: &FixedPoint) -> Cone {
    let normals = p
        .support
        .iter()
        .map(|&i| {
            let sign = if p.is_plus(i) { 1 } else { -1 };
            data.chi[i].iter().map(|x| sign * x).collect()
        })
        .collect();
    Cone {
        generators: p.rays.clone(),
        facet_normals: normals,
    }
}

/// A choice, per index, of which half of each hypermultiplet counts as matter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polarization(pub Vec<bool>);

impl Polarization {
    /// Every index polarized, the standard choice.
    pub fn canonical(n: usize) -> Self {
        Polarization(vec![true; n])
    }

    pub fn empty(n: usize) -> Self {
        Polarization(vec![false; n])
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut v = vec![false; n];
        for &i in indices {
            v[i] = true;
        }
        Polarization(v)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i]).collect()
    }
}

/// `{i : <chi_i, d> >= 0}`.
pub fn mixed_polarization(data: &GaugeData, d: &[i64]) -> Polarization {
    Polarization((0..data.n()).map(|i| data.pairing(i, d) >= 0).collect())
}

/// Lattice points `d` of `cone` with `0 <= <theta, d> <= order`, sorted by
/// level and then lexicographically.
pub fn enumerate_degrees(cone: &Cone, theta: &[i64], order: i64) -> Result<Vec<Vec<i64>>> {
    let k = theta.len();
    let mut bound = vec![0i64; k];
    for g in &cone.generators {
        let l = dot(theta, g);
        if l <= 0 {
            return Err(Error::InvalidInput("cone not pointed for grading".into()));
        }
        for j in 0..k {
            // |d_j| <= order * sum_g |g_j| / l(g), by Caratheodory.
            bound[j] += (order * g[j].abs() + l - 1) / l;
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    box_scan(0, &bound, &mut cur, &mut |d| {
        let l = dot(theta, d);
        if (0..=order).contains(&l) && cone.contains(d) {
            out.push(d.to_vec());
        }
    });
    out.sort_by(|a, b| dot(theta, a).cmp(&dot(theta, b)).then_with(|| a.cmp(b)));
    Ok(out)
}

fn box_scan<F: FnMut(&[i64])>(j: usize, bound: &[i64], cur: &mut Vec<i64>, f: &mut F) {
    if j == bound.len() {
        f(cur);
        return;
    }
    for v in -bound[j]..=bound[j] {
        cur[j] = v;
        box_scan(j + 1, bound, cur, f);
    }
}

/// Split the circuits of `data` into those reversed by moving to `theta2`
/// and those kept.
pub fn separating_circuits(
    data: &GaugeData,
    theta2: &[i64],
) -> Result<(Vec<Circuit>, Vec<Circuit>)> {
    if theta2.len() != data.k() {
        return Err(Error::DimensionMismatch(
            "theta2 has the wrong length".into(),
        ));
    }
    let all = circuits(data)?;
    let mut reversing = Vec::new();
    let mut kept = Vec::new();
    for c in all {
        let l = dot(theta2, &c.vector);
        if l == 0 {
            return Err(Error::Theta2OnWall(c.walls[0].clone()));
        }
        if l < 0 {
            reversing.push(c);
        } else {
            kept.push(c);
        }
    }
    Ok((reversing, kept))
}

/// Normals of the cowalls: hyperplanes in cocharacter space spanned by
/// circuits.
pub fn cowall_normals(data: &GaugeData) -> Result<Vec<Vec<i64>>> {
    let k = data.k();
    let circ: Vec<Vec<i64>> = circuits(data)?.into_iter().map(|c| c.vector).collect();
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for sub in subsets(circ.len(), k - 1) {
        let rows: Vec<Vec<i64>> = sub.iter().map(|&i| circ[i].clone()).collect();
        if let Some(mut nv) = primitive_normal(&rows, k) {
            if nv.iter().find(|&&x| x != 0).copied().unwrap_or(0) < 0 {
                nv.iter_mut().for_each(|x| *x = -*x);
            }
            out.insert(nv);
        }
    }
    Ok(out.into_iter().collect())
}
