//! Finite-dimensional Hopf algebras by sparse structure constants, with
//! exact axiom checkers for the Hopf, J-Hopf and ribbon data.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ExactMatrix, Field};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Sparse vector: sorted `(index, coefficient)` pairs with no zeros.
pub type Sparse<S> = Vec<(usize, S)>;
/// Dense element of an algebra.
pub type Element<S> = Vec<S>;
/// Sparse element of `A ⊗ A`.
pub type Tensor<S> = BTreeMap<(usize, usize), S>;
/// Sparse element of `A ⊗ A ⊗ A`.
pub type Tensor3<S> = BTreeMap<(usize, usize, usize), S>;

fn add_into<K: Ord, S: Field>(map: &mut BTreeMap<K, S>, k: K, v: S) {
    if v.is_zero() {
        return;
    }
    match map.remove(&k) {
        Some(old) => {
            let s = old + v;
            if !s.is_zero() {
                map.insert(k, s);
            }
        }
        None => {
            map.insert(k, v);
        }
    }
}

fn to_sparse<S: Field>(map: BTreeMap<usize, S>) -> Sparse<S> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `(A, m, 1, Δ, ε, S)` with sparse structure constants.
#[derive(Clone, Debug)]
pub struct HopfData<S> {
    labels: Vec<String>,
    mult: Vec<Sparse<S>>,
    unit: Sparse<S>,
    comult: Vec<Vec<(usize, usize, S)>>,
    counit: Vec<S>,
    antipode: Vec<Sparse<S>>,
}

/// Outcome of a single axiom check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomStatus {
    Pass,
    Fail,
    /// Passed on a random sample only.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: AxiomStatus,
    /// Basis labels (or other data) of the first failing instance.
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status != AxiomStatus::Fail)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| r.status == AxiomStatus::Fail).collect()
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }

    fn push(&mut self, axiom: &str, mode: CheckMode, failure: Option<Vec<String>>) {
        let (status, witness) = match failure {
            Some(w) => (AxiomStatus::Fail, w),
            None if matches!(mode, CheckMode::Sampled { .. }) => (AxiomStatus::Sampled, vec![]),
            None => (AxiomStatus::Pass, vec![]),
        };
        self.results.push(AxiomResult {
            axiom: axiom.to_string(),
            status,
            witness,
        });
    }
}

/// Exhaustive iteration over basis tuples, or a seeded random sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl CheckMode {
    /// First tuple in `[0, d)^arity` (lexicographic, or in sample order) on
    /// which `ok` fails.
    fn first_failure<F>(self, d: usize, arity: usize, ok: F) -> Option<Vec<usize>>
    where
        F: Fn(&[usize]) -> bool + Sync,
    {
        match self {
            CheckMode::Exhaustive => (0..d).into_par_iter().find_map_first(|a| {
                let mut t = vec![0; arity];
                t[0] = a;
                loop {
                    if !ok(&t) {
                        return Some(t);
                    }
                    let mut k = arity - 1;
                    loop {
                        if k == 0 {
                            return None;
                        }
                        t[k] += 1;
                        if t[k] < d {
                            break;
                        }
                        t[k] = 0;
                        k -= 1;
                    }
                }
            }),
            CheckMode::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let tuples: Vec<Vec<usize>> = (0..samples)
                    .map(|_| (0..arity).map(|_| rng.gen_range(0..d)).collect())
                    .collect();
                tuples.into_par_iter().find_map_first(|t| (!ok(&t)).then_some(t))
            }
        }
    }
}

impl<S: Field> HopfData<S> {
    pub fn from_parts(
        labels: Vec<String>,
        mult: Vec<Sparse<S>>,
        unit: Sparse<S>,
        comult: Vec<Vec<(usize, usize, S)>>,
        counit: Vec<S>,
        antipode: Vec<Sparse<S>>,
    ) -> Result<Self> {
        let d = labels.len();
        if mult.len() != d * d || comult.len() != d || counit.len() != d || antipode.len() != d {
            return Err(Error::dim("structure constants do not match the basis size"));
        }
        let in_range = |v: &Sparse<S>| v.iter().all(|(i, _)| *i < d);
        if !mult.iter().all(in_range) || !in_range(&unit) || !antipode.iter().all(in_range) {
            return Err(Error::dim("structure constant index out of range"));
        }
        if comult.iter().flatten().any(|(i, j, _)| *i >= d || *j >= d) {
            return Err(Error::dim("coproduct index out of range"));
        }
        let clean = |v: Sparse<S>| -> Sparse<S> {
            let mut m = BTreeMap::new();
            for (i, s) in v {
                add_into(&mut m, i, s);
            }
            to_sparse(m)
        };
        Ok(HopfData {
            labels,
            mult: mult.into_iter().map(clean).collect(),
            unit: clean(unit),
            comult,
            counit,
            antipode: antipode.into_iter().map(clean).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// `e_a e_b`.
    pub fn product(&self, a: usize, b: usize) -> &Sparse<S> {
        &self.mult[a * self.dim() + b]
    }

    pub fn coproduct(&self, a: usize) -> &[(usize, usize, S)] {
        &self.comult[a]
    }

    pub fn counit_of(&self, a: usize) -> &S {
        &self.counit[a]
    }

    pub fn antipode_of(&self, a: usize) -> &Sparse<S> {
        &self.antipode[a]
    }

    pub fn unit_sparse(&self) -> &Sparse<S> {
        &self.unit
    }

    pub fn set_product(&mut self, a: usize, b: usize, v: Sparse<S>) {
        let d = self.dim();
        self.mult[a * d + b] = v;
    }

    pub fn set_antipode(&mut self, a: usize, v: Sparse<S>) {
        self.antipode[a] = v;
    }

    pub fn set_coproduct(&mut self, a: usize, v: Vec<(usize, usize, S)>) {
        self.comult[a] = v;
    }

    pub fn set_counit(&mut self, a: usize, v: S) {
        self.counit[a] = v;
    }

    // ---- element arithmetic ----

    pub fn zero(&self) -> Element<S> {
        vec![S::zero(); self.dim()]
    }

    pub fn basis(&self, a: usize) -> Element<S> {
        let mut x = self.zero();
        x[a] = S::one();
        x
    }

    pub fn one(&self) -> Element<S> {
        self.densify(&self.unit)
    }

    pub fn densify(&self, v: &Sparse<S>) -> Element<S> {
        let mut x = self.zero();
        for (i, s) in v {
            x[*i] = s.clone();
        }
        x
    }

    pub fn sparsify(x: &Element<S>) -> Sparse<S> {
        x.iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i, s.clone()))
            .collect()
    }

    pub fn add(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        x.iter().zip(y).map(|(a, b)| a.clone() + b).collect()
    }

    pub fn scale(&self, x: &Element<S>, s: &S) -> Element<S> {
        x.iter().map(|a| a.clone() * s).collect()
    }

    pub fn multiply(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let coeff = xa.clone() * yb;
                for (k, s) in self.product(a, b) {
                    out[*k] = std::mem::replace(&mut out[*k], S::zero()) + &(coeff.clone() * s);
                }
            }
        }
        out
    }

    pub fn mul_sparse(&self, x: &Sparse<S>, y: &Sparse<S>) -> Sparse<S> {
        let mut m = BTreeMap::new();
        for (a, xa) in x {
            for (b, yb) in y {
                let coeff = xa.clone() * yb;
                for (k, s) in self.product(*a, *b) {
                    add_into(&mut m, *k, coeff.clone() * s);
                }
            }
        }
        to_sparse(m)
    }

    pub fn delta(&self, x: &Element<S>) -> Tensor<S> {
        let mut t = Tensor::new();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (p, q, s) in &self.comult[a] {
                add_into(&mut t, (*p, *q), xa.clone() * s);
            }
        }
        t
    }

    pub fn epsilon(&self, x: &Element<S>) -> S {
        x.iter()
            .zip(&self.counit)
            .fold(S::zero(), |acc, (a, b)| acc + &(a.clone() * b))
    }

    pub fn apply_antipode(&self, x: &Element<S>) -> Element<S> {
        self.apply_linear(&self.antipode, x)
    }

    /// Applies a linear map given by the sparse images of basis vectors.
    pub fn apply_linear(&self, images: &[Sparse<S>], x: &Element<S>) -> Element<S> {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (k, s) in &images[a] {
                out[*k] = std::mem::replace(&mut out[*k], S::zero()) + &(xa.clone() * s);
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_multiplication(&self, x: &Element<S>) -> ExactMatrix<S> {
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for b in 0..d {
            let col = self.multiply(x, &self.basis(b));
            for (r, v) in col.into_iter().enumerate() {
                m[(r, b)] = v;
            }
        }
        m
    }

    /// Two-sided inverse by exact solve of `x y = 1`.
    pub fn invert(&self, x: &Element<S>) -> Result<Element<S>> {
        let lx = self.left_multiplication(x);
        let one = ExactMatrix::column(self.one());
        let sol = lx.solve(&one)?;
        let singular = || Error::NotInvertible {
            reason: "x y = 1 has no solution".into(),
            witness: lx
                .kernel()
                .first()
                .map(|v| v.entries().iter().map(|e| e.to_string()).collect())
                .unwrap_or_default(),
        };
        let y = sol.ok_or_else(singular)?.into_entries();
        if self.multiply(&y, x) != self.one() {
            return Err(singular());
        }
        Ok(y)
    }

    pub fn tensor_one(&self) -> Tensor<S> {
        let mut t = Tensor::new();
        for (a, sa) in &self.unit {
            for (b, sb) in &self.unit {
                add_into(&mut t, (*a, *b), sa.clone() * sb);
            }
        }
        t
    }

    pub fn tensor_mul(&self, x: &Tensor<S>, y: &Tensor<S>) -> Tensor<S> {
        let mut t = Tensor::new();
        for ((a, b), s) in x {
            for ((c, e), u) in y {
                let left = self.product(*a, *c);
                let right = self.product(*b, *e);
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let coeff = s.clone() * u;
                for (p, sp) in left {
                    for (q, sq) in right {
                        add_into(&mut t, (*p, *q), coeff.clone() * sp * sq);
                    }
                }
            }
        }
        t
    }

    pub fn flip(t: &Tensor<S>) -> Tensor<S> {
        t.iter().map(|((a, b), s)| ((*b, *a), s.clone())).collect()
    }

    pub fn delta_sparse(&self, x: &Sparse<S>) -> Tensor<S> {
        let mut t = Tensor::new();
        for (a, xa) in x {
            for (p, q, s) in &self.comult[*a] {
                add_into(&mut t, (*p, *q), xa.clone() * s);
            }
        }
        t
    }

    fn wit(&self, t: &[usize]) -> Vec<String> {
        t.iter().map(|&i| format!("{}:{}", i, self.labels[i])).collect()
    }
}

/// Checks every Hopf algebra axiom on basis tuples.
pub fn check_hopf_axioms<S: Field>(h: &HopfData<S>, mode: CheckMode) -> AxiomReport {
    let d = h.dim();
    let mut rep = AxiomReport::default();
    let one = h.unit.clone();
    let basis = |a: usize| vec![(a, S::one())];

    let f = mode.first_failure(d, 3, |t| {
        let left = h.mul_sparse(h.product(t[0], t[1]), &basis(t[2]));
        let right = h.mul_sparse(&basis(t[0]), h.product(t[1], t[2]));
        left == right
    });
    rep.push("associativity", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        let x = basis(t[0]);
        h.mul_sparse(&one, &x) == x && h.mul_sparse(&x, &one) == x
    });
    rep.push("unit", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (p, q, s) in h.coproduct(t[0]) {
            for (p1, p2, s1) in h.coproduct(*p) {
                add_into(&mut left, (*p1, *p2, *q), s.clone() * s1);
            }
            for (q1, q2, s2) in h.coproduct(*q) {
                add_into(&mut right, (*p, *q1, *q2), s.clone() * s2);
            }
        }
        left == right
    });
    rep.push("coassociativity", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (p, q, s) in h.coproduct(t[0]) {
            add_into(&mut left, *q, s.clone() * h.counit_of(*p));
            add_into(&mut right, *p, s.clone() * h.counit_of(*q));
        }
        let x = basis(t[0]);
        to_sparse(left) == x && to_sparse(right) == x
    });
    rep.push("counit", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 2, |t| {
        let left = h.delta_sparse(h.product(t[0], t[1]));
        let da = h.delta_sparse(&basis(t[0]));
        let db = h.delta_sparse(&basis(t[1]));
        left == h.tensor_mul(&da, &db)
    });
    rep.push("coproduct_multiplicative", mode, f.map(|t| h.wit(&t)));

    let unital = h.delta_sparse(&one) == h.tensor_one();
    rep.push(
        "coproduct_unital",
        CheckMode::Exhaustive,
        (!unital).then(|| vec!["unit".into()]),
    );

    let eps = |v: &Sparse<S>| {
        v.iter()
            .fold(S::zero(), |acc, (i, s)| acc + &(s.clone() * h.counit_of(*i)))
    };
    let f = mode.first_failure(d, 2, |t| {
        eps(h.product(t[0], t[1])) == h.counit_of(t[0]).clone() * h.counit_of(t[1])
    });
    rep.push("counit_multiplicative", mode, f.map(|t| h.wit(&t)));
    let unital = eps(&one).is_one();
    rep.push(
        "counit_unital",
        CheckMode::Exhaustive,
        (!unital).then(|| vec!["unit".into()]),
    );

    let f = mode.first_failure(d, 1, |t| {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (p, q, s) in h.coproduct(t[0]) {
            for (k, v) in h.mul_sparse(h.antipode_of(*p), &basis(*q)) {
                add_into(&mut left, k, s.clone() * &v);
            }
            for (k, v) in h.mul_sparse(&basis(*p), h.antipode_of(*q)) {
                add_into(&mut right, k, s.clone() * &v);
            }
        }
        let expect: Sparse<S> = to_sparse(one.iter().map(|(i, u)| (*i, u.clone() * h.counit_of(t[0]))).collect());
        to_sparse(left) == expect && to_sparse(right) == expect
    });
    rep.push("antipode", mode, f.map(|t| h.wit(&t)));
    rep
}

/// `S(ab) = S(b)S(a)` on basis pairs.
pub fn check_antipode_antihomomorphism<S: Field>(h: &HopfData<S>, mode: CheckMode) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let f = mode.first_failure(h.dim(), 2, |t| {
        let mut left = BTreeMap::new();
        for (k, s) in h.product(t[0], t[1]) {
            for (i, u) in h.antipode_of(*k) {
                add_into(&mut left, *i, s.clone() * u);
            }
        }
        to_sparse(left) == h.mul_sparse(h.antipode_of(t[1]), h.antipode_of(t[0]))
    });
    rep.push("antipode_antihomomorphism", mode, f.map(|t| h.wit(&t)));
    rep
}

/// Grading, weak action and coherence data making a Hopf algebra J-Hopf.
#[derive(Clone, Debug)]
pub struct JHopfDecoration<S> {
    pub j: Arc<FiniteGroup>,
    /// J-degree of each basis vector.
    pub grading: Vec<usize>,
    /// `phi[j][a] = phi_j(e_a)`.
    pub phi: Vec<Vec<Sparse<S>>>,
    /// `c[i][j] = c_{i,j}`.
    pub c: Vec<Vec<Element<S>>>,
}

impl<S: Field> JHopfDecoration<S> {
    /// The decoration with `J = {1}`.
    pub fn trivial(h: &HopfData<S>) -> Self {
        JHopfDecoration {
            j: Arc::new(FiniteGroup::cyclic(1)),
            grading: vec![0; h.dim()],
            phi: vec![(0..h.dim()).map(|a| vec![(a, S::one())]).collect()],
            c: vec![vec![h.one()]],
        }
    }

    pub fn component(&self, j: usize) -> Vec<usize> {
        (0..self.grading.len()).filter(|&a| self.grading[a] == j).collect()
    }

    /// The unit of `A_j`.
    pub fn unit_of(&self, h: &HopfData<S>, j: usize) -> Element<S> {
        let mut x = h.one();
        for (a, v) in x.iter_mut().enumerate() {
            if self.grading[a] != j {
                *v = S::zero();
            }
        }
        x
    }

    pub fn apply_phi(&self, h: &HopfData<S>, j: usize, x: &Element<S>) -> Element<S> {
        h.apply_linear(&self.phi[j], x)
    }
}

fn degrees_of<S: Field>(dec: &JHopfDecoration<S>, v: &Sparse<S>) -> Vec<usize> {
    let mut d: Vec<usize> = v.iter().map(|(i, _)| dec.grading[*i]).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Checks the J-Hopf conditions and their consequences.
pub fn check_jhopf_axioms<S: Field>(h: &HopfData<S>, dec: &JHopfDecoration<S>, mode: CheckMode) -> AxiomReport {
    let d = h.dim();
    let jg = &dec.j;
    let nj = jg.order();
    let mut rep = AxiomReport::default();
    let shape_ok = dec.grading.len() == d
        && dec.grading.iter().all(|&g| g < nj)
        && dec.phi.len() == nj
        && dec.phi.iter().all(|p| p.len() == d)
        && dec.c.len() == nj
        && dec.c.iter().all(|r| r.len() == nj && r.iter().all(|x| x.len() == d));
    if !shape_ok {
        rep.push("decoration_shape", CheckMode::Exhaustive, Some(vec!["shape".into()]));
        return rep;
    }
    let jw = |t: &[usize]| -> Vec<String> { t.iter().map(|&x| format!("j{}:{}", x, jg.label(x))).collect() };

    let f = mode.first_failure(d, 2, |t| {
        let prod = h.product(t[0], t[1]);
        let (da, db) = (dec.grading[t[0]], dec.grading[t[1]]);
        if da != db {
            prod.is_empty()
        } else {
            prod.iter().all(|(k, _)| dec.grading[*k] == da)
        }
    });
    rep.push("grading_direct_sum_of_algebras", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        let j = dec.grading[t[0]];
        let mut ok = true;
        for (p, q, _) in h.coproduct(t[0]) {
            ok &= jg.mul(dec.grading[*p], dec.grading[*q]) == j;
        }
        ok
    });
    rep.push("coproduct_graded", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        (0..nj).all(|i| {
            let target = jg.conj(i, dec.grading[t[0]]);
            degrees_of(dec, &dec.phi[i][t[0]]).iter().all(|&g| g == target)
        })
    });
    rep.push("action_conjugates_degree", mode, f.map(|t| h.wit(&t)));

    // phi_i is a Hopf algebra automorphism
    let f = (0..nj).find_map(|i| {
        let phi = |v: &Sparse<S>| -> Sparse<S> {
            let mut m = BTreeMap::new();
            for (a, s) in v {
                for (k, u) in &dec.phi[i][*a] {
                    add_into(&mut m, *k, s.clone() * u);
                }
            }
            to_sparse(m)
        };
        if phi(&h.unit) != h.unit {
            return Some(vec![format!("phi_{i}"), "unit".into()]);
        }
        let mult = mode.first_failure(d, 2, |t| {
            phi(h.product(t[0], t[1])) == h.mul_sparse(&dec.phi[i][t[0]], &dec.phi[i][t[1]])
        });
        if let Some(t) = mult {
            let mut w = vec![format!("phi_{i}"), "product".into()];
            w.extend(h.wit(&t));
            return Some(w);
        }
        let co = mode.first_failure(d, 1, |t| {
            let left = h.delta_sparse(&dec.phi[i][t[0]]);
            let mut right = Tensor::new();
            for (p, q, s) in h.coproduct(t[0]) {
                for (a, sa) in &dec.phi[i][*p] {
                    for (b, sb) in &dec.phi[i][*q] {
                        add_into(&mut right, (*a, *b), s.clone() * sa * sb);
                    }
                }
            }
            let eps = dec.phi[i][t[0]]
                .iter()
                .fold(S::zero(), |acc, (k, s)| acc + &(s.clone() * h.counit_of(*k)));
            let anti_l = phi(h.antipode_of(t[0]));
            let mut anti_r = BTreeMap::new();
            for (k, s) in &dec.phi[i][t[0]] {
                for (m, u) in h.antipode_of(*k) {
                    add_into(&mut anti_r, *m, s.clone() * u);
                }
            }
            left == right && &eps == h.counit_of(t[0]) && anti_l == to_sparse(anti_r)
        });
        co.map(|t| {
            let mut w = vec![format!("phi_{i}"), "coalgebra_or_antipode".into()];
            w.extend(h.wit(&t));
            w
        })
    });
    rep.push("action_by_hopf_automorphisms", mode, f);

    // phi_i phi_j (x) c_ij = c_ij phi_ij(x)
    let f = mode.first_failure(d, 1, |t| {
        let x = h.basis(t[0]);
        (0..nj).all(|i| {
            (0..nj).all(|j| {
                let lhs = h.multiply(&dec.apply_phi(h, i, &dec.apply_phi(h, j, &x)), &dec.c[i][j]);
                let rhs = h.multiply(&dec.c[i][j], &dec.apply_phi(h, jg.mul(i, j), &x));
                lhs == rhs
            })
        })
    });
    rep.push("composition_up_to_inner", mode, f.map(|t| h.wit(&t)));

    let mut cocycle = None;
    'outer: for i in 0..nj {
        for j in 0..nj {
            for k in 0..nj {
                let lhs = h.multiply(&dec.apply_phi(h, i, &dec.c[j][k]), &dec.c[i][jg.mul(j, k)]);
                let rhs = h.multiply(&dec.c[i][j], &dec.c[jg.mul(i, j)][k]);
                if lhs != rhs {
                    cocycle = Some(jw(&[i, j, k]));
                    break 'outer;
                }
            }
        }
    }
    rep.push("coherence_cocycle", CheckMode::Exhaustive, cocycle);

    let unital = dec.c[0][0] == h.one();
    rep.push(
        "coherence_normalized",
        CheckMode::Exhaustive,
        (!unital).then(|| jw(&[0, 0])),
    );

    let mut grouplike = None;
    let mut invertible = None;
    for i in 0..nj {
        for j in 0..nj {
            let c = &dec.c[i][j];
            let dc = h.delta(c);
            let mut cc = Tensor::new();
            for (a, sa) in c.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                for (b, sb) in c.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    add_into(&mut cc, (a, b), sa.clone() * sb);
                }
            }
            if grouplike.is_none() && (dc != cc || !h.epsilon(c).is_one()) {
                grouplike = Some(jw(&[i, j]));
            }
            if invertible.is_none() && h.invert(c).is_err() {
                invertible = Some(jw(&[i, j]));
            }
        }
    }
    rep.push("coherence_grouplike", CheckMode::Exhaustive, grouplike);
    rep.push("coherence_invertible", CheckMode::Exhaustive, invertible);

    let f = mode.first_failure(d, 1, |t| dec.grading[t[0]] == 0 || h.counit_of(t[0]).is_zero());
    rep.push("counit_vanishes_off_neutral", mode, f.map(|t| h.wit(&t)));

    let f = mode.first_failure(d, 1, |t| {
        let target = jg.inv(dec.grading[t[0]]);
        degrees_of(dec, h.antipode_of(t[0])).iter().all(|&g| g == target)
    });
    rep.push("antipode_inverts_degree", mode, f.map(|t| h.wit(&t)));
    rep
}

/// R-matrix and twist with their inverses.
#[derive(Clone, Debug)]
pub struct RibbonDecoration<S> {
    pub r: Tensor<S>,
    pub r_inv: Tensor<S>,
    pub theta: Element<S>,
    pub theta_inv: Element<S>,
}

/// `R R^{-1} = 1⊗1 = R^{-1} R` and `θ θ^{-1} = 1 = θ^{-1} θ`.
pub fn check_ribbon_invertibility<S: Field>(h: &HopfData<S>, rib: &RibbonDecoration<S>) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let one2 = h.tensor_one();
    let r_ok = h.tensor_mul(&rib.r, &rib.r_inv) == one2 && h.tensor_mul(&rib.r_inv, &rib.r) == one2;
    rep.push("r_invertible", CheckMode::Exhaustive, (!r_ok).then(|| vec!["R".into()]));
    let one = h.one();
    let t_ok = h.multiply(&rib.theta, &rib.theta_inv) == one && h.multiply(&rib.theta_inv, &rib.theta) == one;
    rep.push(
        "theta_invertible",
        CheckMode::Exhaustive,
        (!t_ok).then(|| vec!["theta".into()]),
    );
    rep
}

/// `Δ^op(x) R = R Δ(x)`, `(Δ⊗id)R = R13 R23`, `(id⊗Δ)R = R13 R12`.
pub fn check_quasitriangular<S: Field>(h: &HopfData<S>, r: &Tensor<S>, mode: CheckMode) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let f = mode.first_failure(h.dim(), 1, |t| {
        let dx = h.delta_sparse(&vec![(t[0], S::one())]);
        h.tensor_mul(&HopfData::flip(&dx), r) == h.tensor_mul(r, &dx)
    });
    rep.push("r_intertwines_coproduct", mode, f.map(|t| h.wit(&t)));

    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for ((a, b), s) in r {
        for (p, q, u) in h.coproduct(*a) {
            add_into(&mut left, (*p, *q, *b), s.clone() * u);
        }
    }
    for ((a, b), s) in r {
        for ((a2, b2), s2) in r {
            for (bb, u) in h.product(*b, *b2) {
                add_into(&mut right, (*a, *a2, *bb), s.clone() * s2 * u);
            }
        }
    }
    rep.push(
        "r_first_leg_coproduct",
        CheckMode::Exhaustive,
        (left != right).then(|| vec!["R".into()]),
    );

    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for ((a, b), s) in r {
        for (p, q, u) in h.coproduct(*b) {
            add_into(&mut left, (*a, *p, *q), s.clone() * u);
        }
    }
    for ((a, b), s) in r {
        for ((a2, b2), s2) in r {
            for (aa, u) in h.product(*a, *a2) {
                add_into(&mut right, (*aa, *b2, *b), s.clone() * s2 * u);
            }
        }
    }
    rep.push(
        "r_second_leg_coproduct",
        CheckMode::Exhaustive,
        (left != right).then(|| vec!["R".into()]),
    );
    rep
}

/// Whether a linear map given by basis images preserves product, unit,
/// coproduct, counit and antipode.
pub fn check_hopf_map<S: Field>(src: &HopfData<S>, tgt: &HopfData<S>, images: &[Sparse<S>]) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let f = |v: &Sparse<S>| -> Sparse<S> {
        let mut m = BTreeMap::new();
        for (a, s) in v {
            for (k, u) in &images[*a] {
                add_into(&mut m, *k, s.clone() * u);
            }
        }
        to_sparse(m)
    };
    let mode = CheckMode::Exhaustive;
    let fail = mode.first_failure(src.dim(), 2, |t| {
        f(src.product(t[0], t[1])) == tgt.mul_sparse(&images[t[0]], &images[t[1]])
    });
    rep.push("map_multiplicative", mode, fail.map(|t| src.wit(&t)));
    let unital = f(&src.unit) == tgt.unit;
    rep.push("map_unital", mode, (!unital).then(|| vec!["unit".into()]));
    let fail = mode.first_failure(src.dim(), 1, |t| {
        let mut left = Tensor::new();
        for (p, q, s) in src.coproduct(t[0]) {
            for (a, sa) in &images[*p] {
                for (b, sb) in &images[*q] {
                    add_into(&mut left, (*a, *b), s.clone() * sa * sb);
                }
            }
        }
        let eps = images[t[0]]
            .iter()
            .fold(S::zero(), |acc, (k, s)| acc + &(s.clone() * tgt.counit_of(*k)));
        let anti = f(src.antipode_of(t[0]));
        let mut anti_t = BTreeMap::new();
        for (k, s) in &images[t[0]] {
            for (m, u) in tgt.antipode_of(*k) {
                add_into(&mut anti_t, *m, s.clone() * u);
            }
        }
        left == tgt.delta_sparse(&images[t[0]]) && &eps == src.counit_of(t[0]) && anti == to_sparse(anti_t)
    });
    rep.push("map_coalgebra_and_antipode", mode, fail.map(|t| src.wit(&t)));
    rep
}

/// Group algebra `K[G]`.
pub fn group_algebra<S: Field>(g: &FiniteGroup) -> HopfData<S> {
    let n = g.order();
    let labels = g.labels().to_vec();
    let mult = (0..n * n).map(|ab| vec![(g.mul(ab / n, ab % n), S::one())]).collect();
    let comult = (0..n).map(|a| vec![(a, a, S::one())]).collect();
    let counit = vec![S::one(); n];
    let antipode = (0..n).map(|a| vec![(g.inv(a), S::one())]).collect();
    HopfData::from_parts(labels, mult, vec![(0, S::one())], comult, counit, antipode).expect("group algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};
    use crate::groups::catalogue_group;

    #[test]
    fn group_algebra_is_hopf() {
        let h: HopfData<Rational> = group_algebra(&catalogue_group("S3").unwrap());
        let rep = check_hopf_axioms(&h, CheckMode::Exhaustive);
        assert!(rep.all_pass(), "{rep:?}");
        assert!(check_antipode_antihomomorphism(&h, CheckMode::Exhaustive).all_pass());
        assert!(check_jhopf_axioms(&h, &JHopfDecoration::trivial(&h), CheckMode::Exhaustive).all_pass());
    }

    #[test]
    fn corrupted_antipode_is_named() {
        let mut h: HopfData<Rational> = group_algebra(&catalogue_group("S3").unwrap());
        h.set_antipode(2, vec![(2, rat(1, 1))]);
        let rep = check_hopf_axioms(&h, CheckMode::Exhaustive);
        let r = rep.get("antipode").unwrap();
        assert_eq!(r.status, AxiomStatus::Fail);
        assert!(r.witness[0].starts_with("2:"));
    }

    #[test]
    fn sampled_mode_reports_sampled() {
        let h: HopfData<Rational> = group_algebra(&catalogue_group("S3").unwrap());
        let rep = check_hopf_axioms(&h, CheckMode::Sampled { samples: 20, seed: 7 });
        assert_eq!(rep.get("associativity").unwrap().status, AxiomStatus::Sampled);
        assert!(rep.all_pass());
    }

    #[test]
    fn invert_elements() {
        let h: HopfData<Rational> = group_algebra(&FiniteGroup::cyclic(3));
        let x = vec![rat(2, 1), rat(1, 1), rat(0, 1)];
        let y = h.invert(&x).unwrap();
        assert_eq!(h.multiply(&x, &y), h.one());
        // 1 + g + g^2 is a multiple of an idempotent, not a unit
        let e = vec![rat(1, 1); 3];
        assert!(matches!(h.invert(&e), Err(Error::NotInvertible { .. })));
        assert_eq!(h.multiply(&h.one(), &x), x);
    }
}
