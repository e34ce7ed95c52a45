//! The orbifold algebra `Â = A ⊗ K[J]` of a J-Hopf algebra, its ribbon
//! data, and the isomorphism `Ψ` from the orbifold of `D^J(G)` to `D(H)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ExactMatrix, Field};
use crate::doubles::{drinfeld_double, equivariant_double, Double};
use crate::error::{Error, Result};
use crate::groupoids::{inertia_groupoid, ActionGroupoid};
use crate::groups::{FiniteGroup, GroupExtension};
use crate::hopf::{
    check_hopf_map, group_algebra, AxiomReport, Element, HopfData, JHopfDecoration, RibbonDecoration, Sparse, Tensor,
};

/// `Â` with basis `e_a ⊗ j` at index `a * |J| + j`.
#[derive(Clone, Debug)]
pub struct Orbifold<S> {
    pub hopf: HopfData<S>,
    pub j: Arc<FiniteGroup>,
    pub a_dim: usize,
    /// `(1 ⊗ j^{-1})^{-1} = c_{j,j^{-1}}^{-1} ⊗ j`, per `j`.
    pub shift_inv: Vec<Sparse<S>>,
}

impl<S: Field> Orbifold<S> {
    pub fn index(&self, a: usize, j: usize) -> usize {
        a * self.j.order() + j
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// `x ⊗ 1`.
    pub fn embed(&self, x: &Element<S>) -> Sparse<S> {
        x.iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(a, s)| (self.index(a, 0), s.clone()))
            .collect()
    }

    /// `1_A ⊗ j`.
    pub fn shift(&self, h: &HopfData<S>, j: usize) -> Sparse<S> {
        h.unit_sparse()
            .iter()
            .map(|(a, s)| (self.index(*a, j), s.clone()))
            .collect()
    }
}

fn sparse_of<S: Field>(x: &Element<S>) -> Sparse<S> {
    HopfData::sparsify(x)
}

/// Builds `Â` from a J-Hopf algebra.
pub fn orbifold_algebra<S: Field>(h: &HopfData<S>, dec: &JHopfDecoration<S>) -> Result<Orbifold<S>> {
    let jg = dec.j.clone();
    let nj = jg.order();
    let da = h.dim();
    let d = da * nj;
    let c_sparse: Vec<Vec<Sparse<S>>> = dec.c.iter().map(|row| row.iter().map(sparse_of).collect()).collect();

    let mult: Vec<Sparse<S>> = (0..d * d)
        .into_par_iter()
        .map(|xy| {
            let (x, y) = (xy / d, xy % d);
            let (a, i) = (x / nj, x % nj);
            let (b, j) = (y / nj, y % nj);
            let ab = h.mul_sparse(&vec![(a, S::one())], &dec.phi[i][b]);
            let abc = h.mul_sparse(&ab, &c_sparse[i][j]);
            let ij = jg.mul(i, j);
            abc.into_iter().map(|(k, s)| (k * nj + ij, s)).collect()
        })
        .collect();
    let unit: Sparse<S> = h.unit_sparse().iter().map(|(a, s)| (a * nj, s.clone())).collect();
    let comult = (0..d)
        .map(|x| {
            let (a, j) = (x / nj, x % nj);
            h.coproduct(a)
                .iter()
                .map(|(p, q, s)| (p * nj + j, q * nj + j, s.clone()))
                .collect()
        })
        .collect();
    let counit = (0..d).map(|x| h.counit_of(x / nj).clone()).collect();

    let mut cinv = Vec::with_capacity(nj);
    let mut shift_inv = Vec::with_capacity(nj);
    for j in 0..nj {
        let ji = jg.inv(j);
        let c = h
            .invert(&dec.c[ji][j])
            .map_err(|_| Error::construction(format!("c_{{{},{}}} is not invertible", jg.label(ji), jg.label(j))))?;
        cinv.push(sparse_of(&c));
        let c2 = h
            .invert(&dec.c[j][ji])
            .map_err(|_| Error::construction(format!("c_{{{},{}}} is not invertible", jg.label(j), jg.label(ji))))?;
        shift_inv.push(sparse_of(&c2).into_iter().map(|(a, s)| (a * nj + j, s)).collect());
    }
    let antipode = (0..d)
        .map(|x| {
            let (a, j) = (x / nj, x % nj);
            let ji = jg.inv(j);
            let sa = h.antipode_of(a);
            let mut phi_sa = BTreeMap::new();
            for (k, s) in sa {
                for (m, u) in &dec.phi[ji][*k] {
                    let e = phi_sa.entry(*m).or_insert_with(S::zero);
                    *e = e.clone() + &(s.clone() * u);
                }
            }
            let phi_sa: Sparse<S> = phi_sa.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            h.mul_sparse(&cinv[j], &phi_sa)
                .into_iter()
                .map(|(k, s)| (k * nj + ji, s))
                .collect()
        })
        .collect();
    let labels = (0..d)
        .map(|x| format!("{}⊗{}", h.label(x / nj), jg.label(x % nj)))
        .collect();
    let hopf = HopfData::from_parts(labels, mult, unit, comult, counit, antipode)?;
    Ok(Orbifold {
        hopf,
        j: jg,
        a_dim: da,
        shift_inv,
    })
}

/// `R̂`, `R̂^{-1}`, `θ̂`, `θ̂^{-1}` on `Â`.
///
/// In the second leg of `R̂` the shift uses the degree `i` of the first leg.
pub fn orbifold_ribbon<S: Field>(
    orb: &Orbifold<S>,
    h: &HopfData<S>,
    dec: &JHopfDecoration<S>,
    rib: &RibbonDecoration<S>,
) -> RibbonDecoration<S> {
    let jg = &orb.j;
    let nj = jg.order();
    let oh = &orb.hopf;
    let gr = &dec.grading;
    let mut r = Tensor::new();
    for ((a, b), s) in &rib.r {
        let i = gr[*a];
        for (k, u) in oh.mul_sparse(&orb.shift_inv[i], &vec![(b * nj, S::one())]) {
            add(&mut r, (a * nj, k), s.clone() * &u);
        }
    }
    let mut r_inv = Tensor::new();
    for ((a, b), s) in &rib.r_inv {
        let i = gr[*a];
        for (k, u) in oh.mul_sparse(&vec![(b * nj, S::one())], &orb.shift(h, jg.inv(i))) {
            add(&mut r_inv, (a * nj, k), s.clone() * &u);
        }
    }
    let mut theta = oh.zero();
    let mut theta_inv = oh.zero();
    for j in 0..nj {
        let part = |x: &Element<S>| -> Element<S> {
            x.iter()
                .zip(gr)
                .map(|(v, &d)| if d == j { v.clone() } else { S::zero() })
                .collect()
        };
        let ti = orb.embed(&part(&rib.theta_inv));
        let t = orb.embed(&part(&rib.theta));
        let inv_term = oh.densify(&oh.mul_sparse(&orb.shift_inv[j], &ti));
        let term = oh.densify(&oh.mul_sparse(&t, &orb.shift(h, jg.inv(j))));
        theta_inv = oh.add(&theta_inv, &inv_term);
        theta = oh.add(&theta, &term);
    }
    RibbonDecoration {
        r,
        r_inv,
        theta,
        theta_inv,
    }
}

fn add<S: Field>(t: &mut Tensor<S>, k: (usize, usize), v: S) {
    let e = t.entry(k).or_insert_with(S::zero);
    *e = e.clone() + &v;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// Outcome of the five `Ψ` checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiReport {
    pub bijective: bool,
    pub product: bool,
    pub coproduct: bool,
    pub rmatrix: bool,
    pub twist: bool,
    /// First failing basis pair for the product check, as labels.
    pub product_witness: Vec<String>,
}

impl PsiReport {
    pub fn all_pass(&self) -> bool {
        self.bijective && self.product && self.coproduct && self.rmatrix && self.twist
    }
}

/// The orbifold of `D^J(G)` with its ribbon data and the double `D(H)`.
pub struct PsiSetup<S> {
    pub jdouble: Double<S>,
    pub orbifold: Orbifold<S>,
    pub orbifold_ribbon: RibbonDecoration<S>,
    pub big: Double<S>,
}

pub fn psi_setup<S: Field>(ext: &GroupExtension) -> Result<PsiSetup<S>> {
    let jdouble: Double<S> = equivariant_double(ext)?;
    let orbifold = orbifold_algebra(&jdouble.hopf, &jdouble.jdec)?;
    let orbifold_ribbon = orbifold_ribbon(&orbifold, &jdouble.hopf, &jdouble.jdec, &jdouble.ribbon);
    let big = drinfeld_double(ext.h());
    Ok(PsiSetup {
        jdouble,
        orbifold,
        orbifold_ribbon,
        big,
    })
}

/// `Ψ(δ_h ⊗ g ⊗ j) = δ_h ⊗ g s(j)` as a table of target indices.
pub fn psi_permutation(ext: &GroupExtension, section: &[usize]) -> Vec<usize> {
    let (hg, n, m, nj) = (ext.h(), ext.h().order(), ext.g().order(), ext.j().order());
    (0..n * m * nj)
        .map(|x| {
            let (a, j) = (x / nj, x % nj);
            let (h, g) = (a / m, a % m);
            h * n + hg.mul(ext.g_in_h(g), section[j])
        })
        .collect()
}

/// Checks `Ψ` with the extension's own section.
pub fn psi_check(ext: &GroupExtension) -> Result<PsiReport> {
    psi_check_with_section(ext, ext.section())
}

/// Checks `Ψ` built from `section` against the orbifold built from the
/// extension's own (normalized) section.
pub fn psi_check_with_section(ext: &GroupExtension, section: &[usize]) -> Result<PsiReport> {
    type Q = crate::algebra::Rational;
    if section.len() != ext.j().order() || section.iter().enumerate().any(|(j, &x)| ext.pi(x) != j) {
        return Err(Error::usage("section table does not project to J"));
    }
    let setup: PsiSetup<Q> = psi_setup(ext)?;
    let psi = psi_permutation(ext, section);
    let (oh, bh) = (&setup.orbifold.hopf, &setup.big.hopf);
    let d = oh.dim();

    let mut seen = vec![false; bh.dim()];
    for &t in &psi {
        seen[t] = true;
    }
    let bijective = d == bh.dim() && seen.iter().all(|&s| s);
    let map = |v: &Sparse<Q>| -> Sparse<Q> {
        let mut out: Sparse<Q> = v.iter().map(|(i, s)| (psi[*i], s.clone())).collect();
        out.sort_by_key(|p| p.0);
        out
    };
    let map_t = |t: &Tensor<Q>| -> Tensor<Q> { t.iter().map(|((a, b), s)| ((psi[*a], psi[*b]), s.clone())).collect() };

    let product_fail = (0..d).into_par_iter().find_map_first(|x| {
        (0..d).find_map(|y| {
            let lhs = map(oh.product(x, y));
            let rhs = bh.product(psi[x], psi[y]);
            (lhs != *rhs).then_some((x, y))
        })
    });
    let product_unit = map(oh.unit_sparse()) == *bh.unit_sparse();
    let coproduct = (0..d).into_par_iter().all(|x| {
        let lhs: Tensor<Q> = map_t(&oh.delta_sparse(&vec![(x, Q::from_integer(1.into()))]));
        lhs == bh.delta_sparse(&vec![(psi[x], Q::from_integer(1.into()))]) && oh.counit_of(x) == bh.counit_of(psi[x])
    });
    let rmatrix = map_t(&setup.orbifold_ribbon.r) == setup.big.ribbon.r;
    let twist =
        map(&HopfData::sparsify(&setup.orbifold_ribbon.theta_inv)) == HopfData::sparsify(&setup.big.ribbon.theta_inv);
    Ok(PsiReport {
        bijective,
        product: product_fail.is_none() && product_unit,
        coproduct,
        rmatrix,
        twist,
        product_witness: product_fail
            .map(|(x, y)| vec![oh.label(x).to_string(), oh.label(y).to_string()])
            .unwrap_or_default(),
    })
}

/// A module over an algebra, one action matrix per basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraModule<S: Field> {
    pub dim: usize,
    pub action: Vec<ExactMatrix<S>>,
}

impl<S: Field> AlgebraModule<S> {
    pub fn regular(h: &HopfData<S>) -> Self {
        AlgebraModule {
            dim: h.dim(),
            action: (0..h.dim()).map(|a| h.left_multiplication(&h.basis(a))).collect(),
        }
    }

    /// Action of an arbitrary element.
    pub fn act(&self, x: &Sparse<S>) -> ExactMatrix<S> {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for (a, s) in x {
            m = m.add(&self.action[*a].scale(s)).expect("square blocks");
        }
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                ExactMatrix::from_fn(n, n, |r, c| match (r < self.dim, c < self.dim) {
                    (true, true) => a[(r, c)].clone(),
                    (false, false) => b[(r - self.dim, c - self.dim)].clone(),
                    _ => S::zero(),
                })
            })
            .collect();
        AlgebraModule { dim: n, action }
    }

    /// `ρ(e_a) ρ(e_b) = ρ(e_a e_b)` and `ρ(1) = id`.
    pub fn is_module(&self, h: &HopfData<S>) -> bool {
        if !self.act(h.unit_sparse()).is_identity() {
            return false;
        }
        (0..h.dim()).into_par_iter().all(|a| {
            (0..h.dim()).all(|b| self.action[a].matmul(&self.action[b]).expect("square") == self.act(h.product(a, b)))
        })
    }
}

/// An `A`-module with the maps `ψ_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantModule<S: Field> {
    pub rho: AlgebraModule<S>,
    pub psi: Vec<ExactMatrix<S>>,
}

/// `ρ(a) = ρ̃(a ⊗ 1)` and `ψ_j = ρ̃(1 ⊗ j^{-1})^{-1}`.
pub fn to_equivariant<S: Field>(
    orb: &Orbifold<S>,
    h: &HopfData<S>,
    m: &AlgebraModule<S>,
) -> Result<EquivariantModule<S>> {
    let rho = AlgebraModule {
        dim: m.dim,
        action: (0..orb.a_dim).map(|a| m.action[orb.index(a, 0)].clone()).collect(),
    };
    let psi = (0..orb.j.order())
        .map(|j| m.act(&orb.shift(h, orb.j.inv(j))).inverse())
        .collect::<Result<_>>()?;
    Ok(EquivariantModule { rho, psi })
}

/// `ρ̃(a ⊗ j) = ρ(a) ψ_{j^{-1}}^{-1}`.
pub fn from_equivariant<S: Field>(orb: &Orbifold<S>, e: &EquivariantModule<S>) -> Result<AlgebraModule<S>> {
    let nj = orb.j.order();
    let psi_inv = (0..nj)
        .map(|j| e.psi[orb.j.inv(j)].inverse())
        .collect::<Result<Vec<_>>>()?;
    let mut action = Vec::with_capacity(orb.dim());
    for a in 0..orb.a_dim {
        for pj in &psi_inv {
            action.push(e.rho.action[a].matmul(pj)?);
        }
    }
    Ok(AlgebraModule { dim: e.rho.dim, action })
}

/// `dim Z(A)`, the number of simple modules of a split semisimple algebra.
pub fn center_dimension<S: Field>(h: &HopfData<S>) -> usize {
    let d = h.dim();
    let rows: Vec<Vec<S>> = (0..d)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut block = vec![vec![S::zero(); d]; d];
            for x in 0..d {
                for (k, s) in h.product(x, b) {
                    block[*k][x] = block[*k][x].clone() + s;
                }
                for (k, s) in h.product(b, x) {
                    block[*k][x] = block[*k][x].clone() - s;
                }
            }
            block.into_iter()
        })
        .collect();
    let rows: Vec<Vec<S>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() {
        return d;
    }
    let m = ExactMatrix::from_fn(rows.len(), d, |r, c| rows[r][c].clone());
    d - m.rank()
}

/// `|Iso Λ(H//H)|`, the number of simple `D(H)`-modules.
pub fn double_simple_count(h: &Arc<FiniteGroup>) -> usize {
    inertia_groupoid(&ActionGroupoid::conjugation(h.clone())).orbits().len()
}

/// `A -> Â` and `Â -> K[J]`, each checked as a Hopf map, and their composite
/// checked to be `ε` followed by the unit.
pub fn exact_sequence_check<S: Field>(h: &HopfData<S>, orb: &Orbifold<S>) -> AxiomReport {
    let nj = orb.j.order();
    let kj: HopfData<S> = group_algebra(&orb.j);
    let incl: Vec<Sparse<S>> = (0..h.dim()).map(|a| vec![(orb.index(a, 0), S::one())]).collect();
    let proj: Vec<Sparse<S>> = (0..orb.dim())
        .map(|x| {
            let e = h.counit_of(x / nj).clone();
            if e.is_zero() {
                vec![]
            } else {
                vec![(x % nj, e)]
            }
        })
        .collect();
    let mut rep = check_hopf_map(h, &orb.hopf, &incl);
    rep.extend(check_hopf_map(&orb.hopf, &kj, &proj));
    let composite_ok = (0..h.dim()).all(|a| {
        let e = h.counit_of(a);
        let got = &proj[orb.index(a, 0)];
        if e.is_zero() {
            got.is_empty()
        } else {
            got == &vec![(0, e.clone())]
        }
    });
    rep.results.push(crate::hopf::AxiomResult {
        axiom: "composite_is_counit".into(),
        status: if composite_ok {
            crate::hopf::AxiomStatus::Pass
        } else {
            crate::hopf::AxiomStatus::Fail
        },
        witness: vec![],
    });
    rep
}

/// Result of the search for a Hopf splitting `K[J] -> Â`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingDiagnostic {
    /// `j ↦ u_{g_j} ⊗ j` is a Hopf splitting for these G-indices.
    Found(Vec<usize>),
    /// No splitting among the group-likes searched; no claim is made.
    Inconclusive { searched: u64 },
}

/// Searches the group-likes `u_g ⊗ j` (with `u_g = Σ_h δ_h ⊗ g`) of the
/// orbifold of `D^J(G)` for a Hopf algebra map `K[J] -> Â` splitting the
/// projection. `budget` bounds the number of assignments tried.
pub fn splitting_diagnostic(ext: &GroupExtension, budget: u64) -> SplittingDiagnostic {
    let (gg, jg, hg) = (ext.g(), ext.j(), ext.h());
    let (m, nj) = (gg.order(), jg.order());
    // g_i ρ_i(g_j) c_ij = g_ij, computed in H as (g_i s(i)) (g_j s(j)) = g_ij s(ij)
    let lift = |g: usize, j: usize| hg.mul(ext.g_in_h(g), ext.s(j));
    let mut assign = vec![0usize; nj];
    let mut searched = 0u64;
    fn rec(
        k: usize,
        assign: &mut Vec<usize>,
        searched: &mut u64,
        budget: u64,
        m: usize,
        ok: &dyn Fn(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        if k == assign.len() {
            *searched += 1;
            return ok(assign).then(|| assign.clone());
        }
        for g in 0..m {
            if *searched >= budget {
                return None;
            }
            assign[k] = g;
            if let Some(r) = rec(k + 1, assign, searched, budget, m, ok) {
                return Some(r);
            }
        }
        None
    }
    let ok = |a: &[usize]| {
        a[0] == 0
            && (0..nj)
                .all(|i| (0..nj).all(|j| hg.mul(lift(a[i], i), lift(a[j], j)) == lift(a[jg.mul(i, j)], jg.mul(i, j))))
    };
    match rec(0, &mut assign, &mut searched, budget, m, &ok) {
        Some(a) => SplittingDiagnostic::Found(a),
        None => SplittingDiagnostic::Inconclusive { searched },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::groups::catalogue_extension;
    use crate::hopf::{check_hopf_axioms, check_ribbon_invertibility, CheckMode};

    type Q = Rational;

    #[test]
    fn a3_s3_orbifold() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let setup: PsiSetup<Q> = psi_setup(&ext).unwrap();
        assert_eq!(setup.orbifold.dim(), 36);
        let rep = check_hopf_axioms(&setup.orbifold.hopf, CheckMode::Exhaustive);
        assert!(rep.all_pass(), "{rep:?}");
        assert!(check_ribbon_invertibility(&setup.orbifold.hopf, &setup.orbifold_ribbon).all_pass());
        assert!(setup.orbifold_ribbon.r.len() <= 36);
        assert!(exact_sequence_check(&setup.jdouble.hopf, &setup.orbifold).all_pass());
    }

    #[test]
    fn trivial_j_orbifold_is_identical() {
        let s3 = crate::groups::catalogue_group("S3").unwrap();
        let d: Double<Q> = drinfeld_double(&s3);
        let orb = orbifold_algebra(&d.hopf, &d.jdec).unwrap();
        for x in 0..36 {
            for y in 0..36 {
                assert_eq!(orb.hopf.product(x, y), d.hopf.product(x, y));
            }
            assert_eq!(orb.hopf.antipode_of(x), d.hopf.antipode_of(x));
        }
        let rib = orbifold_ribbon(&orb, &d.hopf, &d.jdec, &d.ribbon);
        assert_eq!(rib.r, d.ribbon.r);
        assert_eq!(rib.theta, d.ribbon.theta);
    }

    #[test]
    fn psi_passes() {
        for name in ["A3-S3", "Z2-Z4"] {
            let rep = psi_check(&catalogue_extension(name).unwrap()).unwrap();
            assert!(rep.all_pass(), "{name}: {rep:?}");
        }
    }

    #[test]
    fn psi_with_unnormalized_section_fails_product() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let mut sec = ext.section().to_vec();
        sec[0] = ext.g_in_h(1);
        let rep = psi_check_with_section(&ext, &sec).unwrap();
        assert!(rep.bijective);
        assert!(!rep.product);
        assert_eq!(rep.product_witness.len(), 2);
    }

    #[test]
    fn unconjugated_twist_breaks_psi() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let mut d: Double<Q> = equivariant_double(&ext).unwrap();
        d.ribbon.theta_inv = crate::doubles::unconjugated_twist_inverse(&ext);
        let orb = orbifold_algebra(&d.hopf, &d.jdec).unwrap();
        let rib = orbifold_ribbon(&orb, &d.hopf, &d.jdec, &d.ribbon);
        let big: Double<Q> = drinfeld_double(ext.h());
        let psi = psi_permutation(&ext, ext.section());
        let mut mapped: Sparse<Q> = HopfData::sparsify(&rib.theta_inv)
            .into_iter()
            .map(|(i, s)| (psi[i], s))
            .collect();
        mapped.sort_by_key(|p| p.0);
        assert_ne!(mapped, HopfData::sparsify(&big.ribbon.theta_inv));
    }

    #[test]
    fn module_round_trip_and_center() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let setup: PsiSetup<Q> = psi_setup(&ext).unwrap();
        let (orb, a) = (&setup.orbifold, &setup.jdouble.hopf);
        let reg = AlgebraModule::regular(&orb.hopf);
        assert!(reg.is_module(&orb.hopf));
        let e = to_equivariant(orb, a, &reg).unwrap();
        assert!(e.rho.is_module(a));
        assert_eq!(from_equivariant(orb, &e).unwrap(), reg);
        assert_eq!(center_dimension(&orb.hopf), double_simple_count(ext.h()));
        assert_eq!(center_dimension(&orb.hopf), 8);
    }

    #[test]
    fn splitting() {
        let split = splitting_diagnostic(&catalogue_extension("A3-S3").unwrap(), 1000);
        assert!(matches!(split, SplittingDiagnostic::Found(_)));
        let ns = splitting_diagnostic(&catalogue_extension("Z2-Z4").unwrap(), 1000);
        assert!(matches!(ns, SplittingDiagnostic::Inconclusive { .. }));
    }
}
