//! Modules over `D^J(G)` as H-graded spaces with a G-action, the J-equivariant
//! ribbon structure on them, diagram checks, S-matrices and modularity.

use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat, Cyclotomic};
use crate::doubles::{equivariant_double, trivial_extension, Double};
use crate::error::{Error, Result};
use crate::groupoids::{character_table, simple_objects, ActionGroupoid, GroupoidRep};
use crate::groups::{FiniteGroup, GroupExtension};
use crate::orbifold::psi_check;
use crate::Matrix;

pub const DEFAULT_SMATRIX_BOUND: usize = 24;

/// An H-graded vector space with a compatible G-action, in a homogeneous
/// basis: basis vector `b` lies in `V_{labels[b]}`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    ext: Arc<GroupExtension>,
    labels: Vec<usize>,
    action: Vec<Matrix>,
    pub name: String,
}

fn same_ext(a: &GroupExtension, b: &GroupExtension) -> bool {
    std::ptr::eq(a, b) || (a.name() == b.name() && a.section() == b.section() && a.h() == b.h())
}

impl GradedModule {
    pub fn new(ext: Arc<GroupExtension>, labels: Vec<usize>, action: Vec<Matrix>, name: &str) -> Result<Self> {
        let m = GradedModule {
            ext,
            labels,
            action,
            name: name.to_string(),
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let (gg, hg) = (self.ext.g(), self.ext.h());
        let d = self.dim();
        if self.action.len() != gg.order() || self.action.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::dim("one d×d matrix per element of G is required"));
        }
        if self.labels.iter().any(|&l| l >= hg.order()) {
            return Err(Error::construction("grading label outside H"));
        }
        if !self.action[0].is_identity() {
            return Err(Error::construction("identity does not act trivially"));
        }
        for g in 0..gg.order() {
            let x = self.ext.g_in_h(g);
            let a = &self.action[g];
            for r in 0..d {
                for c in 0..d {
                    if !a[(r, c)].is_zero() && self.labels[r] != hg.conj(x, self.labels[c]) {
                        return Err(Error::construction(format!(
                            "g = {} does not map V_h into V_ghg^-1",
                            gg.label(g)
                        )));
                    }
                }
            }
            for g2 in 0..gg.order() {
                if a.matmul(&self.action[g2])? != self.action[gg.mul(g, g2)] {
                    return Err(Error::construction("action is not a homomorphism"));
                }
            }
        }
        Ok(())
    }

    /// The tensor unit: `K` in degree `1 ∈ H` with trivial action.
    pub fn unit(ext: Arc<GroupExtension>) -> Self {
        let n = ext.g().order();
        GradedModule {
            ext,
            labels: vec![0],
            action: vec![Matrix::identity(1); n],
            name: "1".into(),
        }
    }

    /// A representation of `H//G` (points = elements of `H`).
    pub fn from_groupoid_rep(ext: Arc<GroupExtension>, rep: &GroupoidRep, name: &str) -> Result<Self> {
        if rep.groupoid().points() != ext.h().order() {
            return Err(Error::dim("groupoid points must be the elements of H"));
        }
        let mut labels = Vec::with_capacity(rep.dim());
        for (h, &d) in rep.dims().iter().enumerate() {
            labels.extend(std::iter::repeat_n(h, d));
        }
        GradedModule::new(ext, labels, rep.matrices().to_vec(), name)
    }

    pub fn ext(&self) -> &Arc<GroupExtension> {
        &self.ext
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    /// `dim V_h` per `h ∈ H`.
    pub fn graded_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.ext.h().order()];
        for &l in &self.labels {
            out[l] += 1;
        }
        out
    }

    /// The J-degree if the module is homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let first = self.ext.pi(*self.labels.first()?);
        self.labels.iter().all(|&l| self.ext.pi(l) == first).then_some(first)
    }

    fn require_degree(&self) -> Result<usize> {
        self.degree()
            .ok_or_else(|| Error::usage(format!("module {} is not homogeneous", self.name)))
    }

    /// Action of `x ∈ H` lying in `G`.
    pub fn act_h(&self, x: usize) -> Result<&Matrix> {
        let g = self
            .ext
            .h_to_g(x)
            .ok_or_else(|| Error::construction(format!("{} is not in G", self.ext.h().label(x))))?;
        Ok(&self.action[g])
    }

    /// Action of the basis element `δ_h ⊗ g` of `D^J(G)`: `P_h ρ(g)`.
    pub fn act_basis(&self, h: usize, g: usize) -> Matrix {
        let a = &self.action[g];
        Matrix::from_fn(self.dim(), self.dim(), |r, c| {
            if self.labels[r] == h {
                a[(r, c)].clone()
            } else {
                Cyclotomic::zero()
            }
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !same_ext(&self.ext, &other.ext) {
            return Err(Error::usage("modules over different extensions"));
        }
        let (a, b) = (self.dim(), other.dim());
        let n = a + b;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                Matrix::from_fn(n, n, |r, c| match (r < a, c < a) {
                    (true, true) => x[(r, c)].clone(),
                    (false, false) => y[(r - a, c - a)].clone(),
                    _ => Cyclotomic::zero(),
                })
            })
            .collect();
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Ok(GradedModule {
            ext: self.ext.clone(),
            labels,
            action,
            name: format!("{}+{}", self.name, other.name),
        })
    }

    /// Splits into homogeneous summands, one per occurring degree.
    pub fn split_by_degree(&self) -> Vec<(usize, GradedModule)> {
        let nj = self.ext.j().order();
        (0..nj)
            .filter_map(|j| {
                let idx: Vec<usize> = (0..self.dim()).filter(|&b| self.ext.pi(self.labels[b]) == j).collect();
                if idx.is_empty() {
                    return None;
                }
                let action = self.action.iter().map(|a| a.submatrix(&idx, &idx)).collect();
                let labels = idx.iter().map(|&b| self.labels[b]).collect();
                Some((
                    j,
                    GradedModule {
                        ext: self.ext.clone(),
                        labels,
                        action,
                        name: format!("{}[{}]", self.name, self.ext.j().label(j)),
                    },
                ))
            })
            .collect()
    }
}

/// Whether `m: src -> tgt` preserves the grading and commutes with `G`.
pub fn is_module_map(src: &GradedModule, tgt: &GradedModule, m: &Matrix) -> bool {
    if m.rows() != tgt.dim() || m.cols() != src.dim() {
        return false;
    }
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() && tgt.labels[r] != src.labels[c] {
                return false;
            }
        }
    }
    (0..src.ext.g().order())
        .all(|g| m.matmul(&src.action[g]).expect("shapes") == tgt.action[g].matmul(m).expect("shapes"))
}

/// A morphism of graded modules with its matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: GradedModule,
    pub target: GradedModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: GradedModule, target: GradedModule, matrix: Matrix) -> Result<Self> {
        if !is_module_map(&source, &target, &matrix) {
            return Err(Error::construction("matrix is not a morphism of graded modules"));
        }
        Ok(ModuleMap { source, target, matrix })
    }
}

/// `V ⊗ W` with `(V ⊗ W)_h = ⊕_{st=h} V_s ⊗ W_t`, basis index `v * dim W + w`.
pub fn fuse(v: &GradedModule, w: &GradedModule) -> Result<GradedModule> {
    if !same_ext(&v.ext, &w.ext) {
        return Err(Error::usage("modules over different extensions"));
    }
    let hg = v.ext.h();
    let labels = v
        .labels
        .iter()
        .flat_map(|&s| w.labels.iter().map(move |&t| hg.mul(s, t)))
        .collect();
    let action = v.action.iter().zip(&w.action).map(|(a, b)| a.kron(b)).collect();
    Ok(GradedModule {
        ext: v.ext.clone(),
        labels,
        action,
        name: format!("({}⊗{})", v.name, w.name),
    })
}

/// `^x V`: `(^x V)_h = V_{y h y^{-1}}` with `g` acting as `y g y^{-1}`, where `y = s(x^{-1})`.
pub fn j_act(x: usize, v: &GradedModule) -> GradedModule {
    let ext = &v.ext;
    let (hg, jg, gg) = (ext.h(), ext.j(), ext.g());
    let y = ext.s(jg.inv(x));
    let yi = hg.inv(y);
    let labels = v.labels.iter().map(|&l| hg.conj(yi, l)).collect();
    let action = (0..gg.order())
        .map(|g| {
            let k = ext.h_to_g(hg.conj(y, ext.g_in_h(g))).expect("G is normal");
            v.action[k].clone()
        })
        .collect();
    GradedModule {
        ext: ext.clone(),
        labels,
        action,
        name: if x == 0 {
            v.name.clone()
        } else {
            format!("^{}{}", jg.label(x), v.name)
        },
    }
}

/// `α_{i,j}(V): ^i(^j V) -> ^{ij} V`, acting by `c_{j^{-1},i^{-1}}^{-1}`.
pub fn compositor(i: usize, j: usize, v: &GradedModule) -> Matrix {
    let ext = &v.ext;
    let (hg, jg) = (ext.h(), ext.j());
    let c = ext.coherence_in_h(jg.inv(j), jg.inv(i));
    v.act_h(hg.inv(c)).expect("coherence elements lie in G").clone()
}

/// `V^∨`: labels inverted, `g` acting by `ρ(g^{-1})^T`.
pub fn dual(v: &GradedModule) -> GradedModule {
    let (hg, gg) = (v.ext.h(), v.ext.g());
    GradedModule {
        ext: v.ext.clone(),
        labels: v.labels.iter().map(|&l| hg.inv(l)).collect(),
        action: (0..gg.order()).map(|g| v.action[gg.inv(g)].transpose()).collect(),
        name: format!("{}*", v.name),
    }
}

/// The braiding and twist, parametrised by the element `y_j ∈ H_{j^{-1}}`
/// used for objects of degree `j` (normally `s(j^{-1})`).
#[derive(Clone, Debug)]
pub struct Braiding {
    pub shift: Vec<usize>,
}

impl Braiding {
    pub fn standard(ext: &GroupExtension) -> Self {
        let jg = ext.j();
        Braiding {
            shift: (0..jg.order()).map(|j| ext.s(jg.inv(j))).collect(),
        }
    }

    /// `c_{V,W}: V ⊗ W -> ^j W ⊗ V`, `v ⊗ w ↦ (y_j h).w ⊗ v` for `v ∈ V_h`.
    pub fn braid(&self, v: &GradedModule, w: &GradedModule) -> Result<Matrix> {
        let j = v.require_degree()?;
        let hg = v.ext.h();
        let (dv, dw) = (v.dim(), w.dim());
        let mut out = Matrix::zeros(dv * dw, dv * dw);
        for (vi, &h) in v.labels.iter().enumerate() {
            let m = w.act_h(hg.mul(self.shift[j], h))?;
            for wc in 0..dw {
                for wr in 0..dw {
                    let x = &m[(wr, wc)];
                    if !x.is_zero() {
                        out[(wr * dv + vi, vi * dw + wc)] = x.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `θ_V: V -> ^j V`, `v ↦ (y_j h).v` for `v ∈ V_h`.
    pub fn twist(&self, v: &GradedModule) -> Result<Matrix> {
        let j = v.require_degree()?;
        let hg = v.ext.h();
        let d = v.dim();
        let mut out = Matrix::zeros(d, d);
        for (c, &h) in v.labels.iter().enumerate() {
            let m = v.act_h(hg.mul(self.shift[j], h))?;
            for r in 0..d {
                out[(r, c)] = m[(r, c)].clone();
            }
        }
        Ok(out)
    }
}

pub fn braid(v: &GradedModule, w: &GradedModule) -> Result<Matrix> {
    Braiding::standard(&v.ext).braid(v, w)
}

pub fn twist(v: &GradedModule) -> Result<Matrix> {
    Braiding::standard(&v.ext).twist(v)
}

/// One diagram instantiated on all tuples of a sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramResult {
    pub diagram: String,
    pub tuples: usize,
    pub failures: usize,
    /// Module names of the first failing tuple.
    pub witness: Vec<String>,
}

impl DiagramResult {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub results: Vec<DiagramResult>,
}

impl DiagramReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass())
    }

    pub fn get(&self, diagram: &str) -> Option<&DiagramResult> {
        self.results.iter().find(|r| r.diagram == diagram)
    }
}

fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.matmul(b).expect("composable maps")
}

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}

fn run_diagram<T: Sync>(
    name: &str,
    tuples: &[T],
    names: impl Fn(&T) -> Vec<String> + Sync,
    holds: impl Fn(&T) -> Result<bool> + Sync,
) -> DiagramResult {
    let outcomes: Vec<bool> = tuples.par_iter().map(|t| holds(t).unwrap_or(false)).collect();
    let failures = outcomes.iter().filter(|ok| !**ok).count();
    let witness = outcomes
        .iter()
        .position(|ok| !ok)
        .map(|k| names(&tuples[k]))
        .unwrap_or_default();
    DiagramResult {
        diagram: name.to_string(),
        tuples: tuples.len(),
        failures,
        witness,
    }
}

/// Instantiates every structural diagram on all tuples drawn from `sample`
/// (homogeneous modules) and compares both sides exactly.
pub fn check_equivariant_diagrams(sample: &[GradedModule], br: &Braiding) -> Result<DiagramReport> {
    let Some(first) = sample.first() else {
        return Ok(DiagramReport::default());
    };
    let ext = first.ext.clone();
    for m in sample {
        m.require_degree()?;
        if !same_ext(&m.ext, &ext) {
            return Err(Error::usage("sample modules over different extensions"));
        }
    }
    let jg = ext.j().clone();
    let nj = jg.order();
    let deg = |m: &GradedModule| m.degree().expect("checked homogeneous");
    let n = sample.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .collect();
    let act_pairs: Vec<(usize, usize, usize)> = (0..nj)
        .flat_map(|i| pairs.iter().map(move |&(a, b)| (i, a, b)))
        .collect();
    let act_single: Vec<(usize, usize)> = (0..nj).flat_map(|i| (0..n).map(move |a| (i, a))).collect();
    let nm2 = |t: &(usize, usize)| vec![sample[t.0].name.clone(), sample[t.1].name.clone()];
    let nm3 = |t: &(usize, usize, usize)| {
        vec![
            sample[t.0].name.clone(),
            sample[t.1].name.clone(),
            sample[t.2].name.clone(),
        ]
    };
    let nmi2 = |t: &(usize, usize, usize)| {
        vec![
            jg.label(t.0).to_string(),
            sample[t.1].name.clone(),
            sample[t.2].name.clone(),
        ]
    };
    let nmi1 = |t: &(usize, usize)| vec![jg.label(t.0).to_string(), sample[t.1].name.clone()];
    let mut report = DiagramReport::default();

    report
        .results
        .push(run_diagram("braiding_is_module_map", &pairs, nm2, |&(a, b)| {
            let (u, v) = (&sample[a], &sample[b]);
            let c = br.braid(u, v)?;
            let src = fuse(u, v)?;
            let tgt = fuse(&j_act(deg(u), v), u)?;
            Ok(is_module_map(&src, &tgt, &c) && c.inverse().is_ok())
        }));

    report.results.push(run_diagram(
        "twist_is_module_map",
        &act_single[..n],
        |t| nmi1(t),
        |&(_, a)| {
            let v = &sample[a];
            let t = br.twist(v)?;
            Ok(is_module_map(v, &j_act(deg(v), v), &t) && t.inverse().is_ok())
        },
    ));

    report
        .results
        .push(run_diagram("hexagon_left", &triples, nm3, |&(a, b, c)| {
            let (u, v, w) = (&sample[a], &sample[b], &sample[c]);
            let lhs = br.braid(u, &fuse(v, w)?)?;
            let i = deg(u);
            let first = br.braid(u, v)?.kron(&id(w.dim()));
            let second = id(j_act(i, v).dim()).kron(&br.braid(u, w)?);
            Ok(lhs == mm(&second, &first))
        }));

    report
        .results
        .push(run_diagram("hexagon_right", &triples, nm3, |&(a, b, c)| {
            let (u, v, w) = (&sample[a], &sample[b], &sample[c]);
            let (i, j) = (deg(u), deg(v));
            let lhs = br.braid(&fuse(u, v)?, w)?;
            let step1 = id(u.dim()).kron(&br.braid(v, w)?);
            let step2 = br.braid(u, &j_act(j, w))?.kron(&id(v.dim()));
            let step3 = compositor(i, j, w).kron(&id(u.dim() * v.dim()));
            Ok(lhs == mm(&step3, &mm(&step2, &step1)))
        }));

    report.results.push(run_diagram(
        "action_braiding_compatibility",
        &act_pairs,
        nmi2,
        |&(i, a, b)| {
            let (u, v) = (&sample[a], &sample[b]);
            let j = deg(u);
            let iu = j_act(i, u);
            let iv = j_act(i, v);
            let top = mm(&compositor(i, j, v).kron(&id(u.dim())), &br.braid(u, v)?);
            let iji = jg.mul(jg.mul(i, j), jg.inv(i));
            let bottom = mm(&compositor(iji, i, v).kron(&id(u.dim())), &br.braid(&iu, &iv)?);
            Ok(top == bottom)
        },
    ));

    report
        .results
        .push(run_diagram("twist_braiding", &pairs, nm2, |&(a, b)| {
            let (u, v) = (&sample[a], &sample[b]);
            let (i, j) = (deg(u), deg(v));
            let lhs = br.twist(&fuse(u, v)?)?;
            let iu = j_act(i, u);
            let jv = j_act(j, v);
            let ijv = j_act(jg.mul(i, j), v);
            let iji = jg.mul(jg.mul(i, j), jg.inv(i));
            let s1 = br.twist(u)?.kron(&br.twist(v)?);
            let s2 = br.braid(&iu, &jv)?;
            let s3 = compositor(i, j, v).kron(&id(u.dim()));
            let s4 = br.braid(&ijv, &iu)?;
            let s5 = compositor(iji, i, u).kron(&id(v.dim()));
            Ok(lhs == mm(&s5, &mm(&s4, &mm(&s3, &mm(&s2, &s1)))))
        }));

    report.results.push(run_diagram(
        "twist_duality",
        &act_single[..n],
        |t| nmi1(t),
        |&(_, a)| {
            let v = &sample[a];
            let j = deg(v);
            let x = dual(&j_act(j, v));
            let lhs = br.twist(v)?.transpose();
            let rhs = mm(&compositor(jg.inv(j), j, &dual(v)), &br.twist(&x)?);
            Ok(lhs == rhs)
        },
    ));

    report
        .results
        .push(run_diagram("twist_action", &act_single, nmi1, |&(i, a)| {
            let v = &sample[a];
            let j = deg(v);
            let iji = jg.mul(jg.mul(i, j), jg.inv(i));
            let lhs = mm(&compositor(i, j, v), &br.twist(v)?);
            let rhs = mm(&compositor(iji, i, v), &br.twist(&j_act(i, v))?);
            Ok(lhs == rhs)
        }));

    report
        .results
        .push(run_diagram("compositor_coherence", &act_single, nmi1, |&(i, a)| {
            // α_{ij,k} ∘ α_{i,j}(^k V) = α_{i,jk} ∘ ^i(α_{j,k}) for all j, k
            let v = &sample[a];
            Ok((0..nj).all(|j| {
                (0..nj).all(|k| {
                    let lhs = mm(&compositor(jg.mul(i, j), k, v), &compositor(i, j, &j_act(k, v)));
                    let rhs = mm(&compositor(i, jg.mul(j, k), v), &compositor(j, k, v));
                    lhs == rhs
                })
            }))
        }));

    report
        .results
        .push(run_diagram("braid_naturality", &pairs, nm2, |&(a, b)| {
            // f: V -> V ⊕ V, v ↦ (v, 2v)
            let (v, w) = (&sample[a], &sample[b]);
            let vv = v.direct_sum(v)?;
            let d = v.dim();
            let two = Cyclotomic::from(2);
            let f = Matrix::from_fn(2 * d, d, |r, c| {
                if r == c {
                    Cyclotomic::one()
                } else if r == c + d {
                    two.clone()
                } else {
                    Cyclotomic::zero()
                }
            });
            let lhs = mm(&br.braid(&vv, w)?, &f.kron(&id(w.dim())));
            let rhs = mm(&id(w.dim()).kron(&f), &br.braid(v, w)?);
            Ok(lhs == rhs)
        }));
    Ok(report)
}

/// Checks that the braiding is the flip composed with the action of `R`, and
/// the twist is the action of `θ^{-1}`, for the R-matrix of `D^J(G)`.
pub fn check_r_matrix_consistency(sample: &[GradedModule]) -> Result<DiagramReport> {
    let Some(first) = sample.first() else {
        return Ok(DiagramReport::default());
    };
    let ext = first.ext.clone();
    let dbl: Double<Cyclotomic> = equivariant_double(&ext)?;
    let m = ext.g().order();
    let act = |v: &GradedModule, a: usize| v.act_basis(a / m, a % m);
    let n = sample.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut report = DiagramReport::default();
    report.results.push(run_diagram(
        "braid_is_flip_of_r_action",
        &pairs,
        |t| vec![sample[t.0].name.clone(), sample[t.1].name.clone()],
        |&(a, b)| {
            let (v, w) = (&sample[a], &sample[b]);
            let (dv, dw) = (v.dim(), w.dim());
            let mut r_act = Matrix::zeros(dv * dw, dv * dw);
            for ((x, y), s) in &dbl.ribbon.r {
                let term = act(v, *x).kron(&act(w, *y)).scale(s);
                r_act = r_act.add(&term)?;
            }
            let flip = Matrix::from_fn(dv * dw, dv * dw, |r, c| {
                let (wi, vi) = (r / dv, r % dv);
                if c == vi * dw + wi {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                }
            });
            Ok(mm(&flip, &r_act) == braid(v, w)?)
        },
    ));
    report.results.push(run_diagram(
        "twist_is_theta_inverse_action",
        &(0..n).collect::<Vec<_>>(),
        |&a| vec![sample[a].name.clone()],
        |&a| {
            let v = &sample[a];
            let mut t = Matrix::zeros(v.dim(), v.dim());
            for (x, s) in dbl.ribbon.theta_inv.iter().enumerate() {
                if !s.is_zero() {
                    t = t.add(&act(v, x).scale(s))?;
                }
            }
            Ok(t == twist(v)?)
        },
    ));
    Ok(report)
}

/// Simple `D^J(G)`-modules: simples of `H//G`, labelled `(orbit, irrep)` with
/// orbits ordered by smallest element of `H`.
pub fn simples_of_double(ext: &Arc<GroupExtension>) -> Result<Vec<GradedModule>> {
    let all: Vec<usize> = (0..ext.h().order()).collect();
    let gamma = Arc::new(ActionGroupoid::conjugation_on_subset(
        ext.h(),
        ext.g().clone(),
        |g| ext.g_in_h(g),
        &all,
    )?);
    let orbits = gamma.orbits();
    simple_objects(&gamma)?
        .iter()
        .map(|rep| {
            let (o, i) = rep.label.expect("simples are labelled");
            let name = format!("[{}]χ{}", ext.h().label(orbits[o][0]), i);
            GradedModule::from_groupoid_rep(ext.clone(), rep, &name)
        })
        .collect()
}

/// Simple `D(H)`-modules.
pub fn simples_of_drinfeld_double(h: &FiniteGroup) -> Result<Vec<GradedModule>> {
    simples_of_double(&Arc::new(trivial_extension(h)))
}

/// `tr(c_{Y,X} ∘ c_{X,Y})` for `J` trivial, evaluated vector by vector.
pub fn double_braiding_trace(x: &GradedModule, y: &GradedModule) -> Result<Cyclotomic> {
    let br = Braiding::standard(&x.ext);
    // c_{X,Y}(x ⊗ y) = ρ_Y(s h_x) y ⊗ x, then c_{Y,X}(y' ⊗ x) = ρ_X(s h_{y'}) x ⊗ y'
    let hg = x.ext.h();
    let (jx, jy) = (x.require_degree()?, y.require_degree()?);
    let mut acc = Cyclotomic::zero();
    for (xi, &hx) in x.labels.iter().enumerate() {
        let my = y.act_h(hg.mul(br.shift[jx], hx))?;
        for yi in 0..y.dim() {
            for yp in 0..y.dim() {
                let a = &my[(yp, yi)];
                if a.is_zero() {
                    continue;
                }
                let mx = x.act_h(hg.mul(br.shift[jy], y.labels[yp]))?;
                // coefficient of x ⊗ y requires y' = y
                if yp == yi {
                    acc = acc + &(a.clone() * &mx[(xi, xi)]);
                }
            }
        }
    }
    Ok(acc)
}

/// Unnormalised S-matrix of `D(H)`.
#[derive(Clone, Debug, Serialize)]
pub struct SMatrix {
    pub labels: Vec<String>,
    pub entries: Matrix,
    /// `|H|`, for consumers that normalise.
    pub group_order: usize,
}

impl SMatrix {
    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }

    pub fn determinant(&self) -> Cyclotomic {
        self.entries.det().expect("square")
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }
}

fn check_bound(h: &FiniteGroup, bound: usize) -> Result<()> {
    if h.order() > bound {
        return Err(Error::Resource {
            what: format!("S-matrix of D({})", h.name()),
            needed: format!("|H| = {}", h.order()),
            budget: format!("|H| <= {bound}"),
        });
    }
    Ok(())
}

/// `s_{XY} = tr(c_{Y,X} ∘ c_{X,Y})` on the simples of `D(H)`.
pub fn s_matrix(h: &FiniteGroup, bound: usize) -> Result<SMatrix> {
    check_bound(h, bound)?;
    let simples = simples_of_drinfeld_double(h)?;
    let k = simples.len();
    let vals: Vec<Result<Cyclotomic>> = (0..k * k)
        .into_par_iter()
        .map(|xy| double_braiding_trace(&simples[xy / k], &simples[xy % k]))
        .collect();
    let mut entries = Matrix::zeros(k, k);
    for (xy, v) in vals.into_iter().enumerate() {
        entries[(xy / k, xy % k)] = v?;
    }
    Ok(SMatrix {
        labels: simples.iter().map(|s| s.name.clone()).collect(),
        entries,
        group_order: h.order(),
    })
}

/// The same matrix from class representatives and centraliser character
/// tables alone: `s_{XY} = Σ_{h∈[a], k∈[b], hk=kh} χ_X(h,k) χ_Y(k,h)` with
/// `χ_X(h,k) = χ(r^{-1} k r)` for any `r` with `r a r^{-1} = h`.
pub fn s_matrix_from_characters(h: &FiniteGroup, bound: usize) -> Result<SMatrix> {
    check_bound(h, bound)?;
    let cd = h.conjugacy_data();
    // orbits of conjugation ordered by smallest element are the classes
    struct Block {
        rep: usize,
        class: Vec<usize>,
        transport: Vec<usize>,
        pos: Vec<usize>,
        table: crate::groupoids::CharacterTable,
    }
    let mut blocks = Vec::new();
    for class in &cd.classes {
        let a = class[0];
        let cent: Vec<usize> = (0..h.order()).filter(|&g| h.commute(g, a)).collect();
        let (c, embed) = h.subgroup("C", &cent)?;
        let mut pos = vec![usize::MAX; h.order()];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i;
        }
        let transport = class
            .iter()
            .map(|&x| (0..h.order()).find(|&g| h.conj(g, a) == x).expect("class member"))
            .collect();
        blocks.push(Block {
            rep: a,
            class: class.clone(),
            transport,
            pos,
            table: character_table(&c)?,
        });
    }
    let mut labels = Vec::new();
    let mut index = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for row in 0..b.table.len() {
            labels.push(format!("[{}]χ{}", h.label(b.rep), row));
            index.push((bi, row));
        }
    }
    let chi = |b: &Block, row: usize, hi: usize, k: usize| -> Cyclotomic {
        let r = b.transport[hi];
        let g = h.mul(h.mul(h.inv(r), k), r);
        b.table.value(row, b.pos[g]).clone()
    };
    let k = index.len();
    let mut entries = Matrix::zeros(k, k);
    for (x, &(bx, rx)) in index.iter().enumerate() {
        for (y, &(by, ry)) in index.iter().enumerate() {
            let (bx, by) = (&blocks[bx], &blocks[by]);
            let mut acc = Cyclotomic::zero();
            for (hi, &hh) in bx.class.iter().enumerate() {
                for (ki, &kk) in by.class.iter().enumerate() {
                    if h.commute(hh, kk) {
                        acc = acc + &(chi(bx, rx, hi, kk) * &chi(by, ry, ki, hh));
                    }
                }
            }
            entries[(x, y)] = acc;
        }
    }
    Ok(SMatrix {
        labels,
        entries,
        group_order: h.order(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularityVerdict {
    pub orbifold_modular: bool,
    pub j_modular_claim: bool,
    pub psi_isomorphism: bool,
    pub s_matrix_size: usize,
    /// What the J-modular claim rests on.
    pub basis: String,
}

/// Orbifold modularity from the S-matrix of `D(H)`, transported along `Ψ`.
pub fn modularity_verdict(ext: &GroupExtension, bound: usize) -> Result<ModularityVerdict> {
    let psi = psi_check(ext)?.all_pass();
    let s = s_matrix(ext.h(), bound)?;
    let orbifold_modular = psi && s.is_invertible();
    Ok(ModularityVerdict {
        orbifold_modular,
        j_modular_claim: orbifold_modular,
        psi_isomorphism: psi,
        s_matrix_size: s.labels.len(),
        basis:
            "orbifold of D^J(G) is D(H) via Psi; J-modularity is equivalent to modularity of the orbifold category"
                .into(),
    })
}

/// Quantum dimensions `s_{1,X}` relative to `s_{1,1}`.
pub fn unit_row(s: &SMatrix) -> Vec<Cyclotomic> {
    let s11 = s.entries[(0, 0)].clone();
    let inv = s11.inverse().unwrap_or_else(|| Cyclotomic::from(rat(0, 1)));
    (0..s.labels.len()).map(|x| s.entries[(0, x)].clone() * &inv).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalogue_extension, catalogue_group};

    fn ext(name: &str) -> Arc<GroupExtension> {
        Arc::new(catalogue_extension(name).unwrap())
    }

    #[test]
    fn d_z2_simples_and_twist() {
        let simples = simples_of_drinfeld_double(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(simples.len(), 4);
        assert!(simples.iter().all(|s| s.dim() == 1));
        // (1, sign): labels at the nontrivial element, sign character
        let s = simples
            .iter()
            .find(|s| s.labels()[0] == 1 && s.action(1)[(0, 0)] == Cyclotomic::from(-1))
            .unwrap();
        assert_eq!(twist(s).unwrap()[(0, 0)], Cyclotomic::from(-1));
    }

    #[test]
    fn ds3_simples() {
        let simples = simples_of_drinfeld_double(&catalogue_group("S3").unwrap()).unwrap();
        assert_eq!(simples.len(), 8);
        assert_eq!(simples.iter().map(|s| s.dim() * s.dim()).sum::<usize>(), 36);
    }

    #[test]
    fn a3_s3_simples_and_sectors() {
        let e = ext("A3-S3");
        let simples = simples_of_double(&e).unwrap();
        let twisted: Vec<_> = simples.iter().filter(|s| s.degree() == Some(1)).collect();
        assert_eq!(twisted.len(), 1);
        assert_eq!(twisted[0].dim(), 3);
        assert_eq!(simples.len(), 10);
    }

    #[test]
    fn unit_and_j_act_identity() {
        let e = ext("A3-S3");
        let simples = simples_of_double(&e).unwrap();
        let u = GradedModule::unit(e.clone());
        for s in &simples {
            let f = fuse(&u, s).unwrap();
            assert_eq!(f.labels(), s.labels());
            assert_eq!(braid(&u, s).unwrap(), Matrix::identity(s.dim()));
            let same = j_act(0, s);
            assert_eq!(same.labels(), s.labels());
        }
        assert_eq!(twist(&u).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn j_act_swaps_nontrivial_a3_characters() {
        let e = ext("A3-S3");
        let simples = simples_of_double(&e).unwrap();
        let neutral: Vec<_> = simples.iter().filter(|s| s.labels() == [0]).collect();
        assert_eq!(neutral.len(), 3);
        let gen = 1;
        for s in &neutral {
            let t = j_act(1, s);
            let v = s.action(gen)[(0, 0)].clone();
            let w = t.action(gen)[(0, 0)].clone();
            if v.is_one() {
                assert!(w.is_one());
            } else {
                assert_eq!(w, v.conjugate());
            }
        }
    }

    #[test]
    fn diagrams_a3_s3() {
        let e = ext("A3-S3");
        let simples = simples_of_double(&e).unwrap();
        let rep = check_equivariant_diagrams(&simples, &Braiding::standard(&e)).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(check_r_matrix_consistency(&simples).unwrap().all_pass());
    }

    #[test]
    fn diagrams_z2_z4() {
        let e = ext("Z2-Z4");
        let simples = simples_of_double(&e).unwrap();
        let rep = check_equivariant_diagrams(&simples, &Braiding::standard(&e)).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(check_r_matrix_consistency(&simples).unwrap().all_pass());
    }

    #[test]
    fn s_matrices_agree_with_character_formula() {
        for name in ["Z2", "Z3", "S3"] {
            let g = catalogue_group(name).unwrap();
            let a = s_matrix(&g, 24).unwrap();
            let b = s_matrix_from_characters(&g, 24).unwrap();
            assert_eq!(a.labels, b.labels, "{name}");
            assert_eq!(a.entries, b.entries, "{name}");
            assert!(a.is_symmetric());
            assert!(a.is_invertible());
        }
    }

    #[test]
    fn trivial_group_s_matrix() {
        let s = s_matrix(&FiniteGroup::cyclic(1), 24).unwrap();
        assert_eq!(s.entries, Matrix::identity(1));
    }

    #[test]
    fn verdict() {
        let v = modularity_verdict(&catalogue_extension("A3-S3").unwrap(), 24).unwrap();
        assert!(v.orbifold_modular && v.j_modular_claim);
    }
}
