use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{character_table, ActionGroupoid, ClassFunction};
use crate::algebra::{rat, Cyclotomic};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::Matrix;

/// An irreducible representation of a finite group with explicit matrices.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub degree: usize,
    /// Row of the group's character table.
    pub character_row: usize,
    /// One matrix per group element.
    pub matrices: Vec<Matrix>,
}

/// A representation of `M//G`: spaces `V_m` and maps `rho(g): V_m -> V_{g.m}`
/// assembled into one block matrix per group element.
#[derive(Clone, Debug)]
pub struct GroupoidRep {
    groupoid: Arc<ActionGroupoid>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    matrices: Vec<Matrix>,
    /// `(orbit, stabilizer irrep)` for simples.
    pub label: Option<(usize, usize)>,
}

impl GroupoidRep {
    pub fn new(groupoid: Arc<ActionGroupoid>, dims: Vec<usize>, matrices: Vec<Matrix>) -> Result<Self> {
        let rep = Self::unchecked(groupoid, dims, matrices);
        rep.validate()?;
        Ok(rep)
    }

    fn unchecked(groupoid: Arc<ActionGroupoid>, dims: Vec<usize>, matrices: Vec<Matrix>) -> Self {
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        for &d in &dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        GroupoidRep {
            groupoid,
            dims,
            offsets,
            matrices,
            label: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let gamma = &self.groupoid;
        let grp = gamma.group();
        let total = self.dim();
        if self.dims.len() != gamma.points() || self.matrices.len() != grp.order() {
            return Err(Error::construction("representation data has the wrong shape"));
        }
        if self.matrices.iter().any(|m| m.rows() != total || m.cols() != total) {
            return Err(Error::dim("action matrices must be square of the total dimension"));
        }
        if !self.matrices[0].is_identity() {
            return Err(Error::construction("rho(1) is not the identity"));
        }
        for (g, mat) in self.matrices.iter().enumerate() {
            for m in 0..gamma.points() {
                let target = gamma.act(g, m);
                for c in self.offsets[m]..self.offsets[m + 1] {
                    for r in 0..total {
                        let inside = r >= self.offsets[target] && r < self.offsets[target + 1];
                        if !inside && !mat[(r, c)].is_zero() {
                            return Err(Error::construction(format!("rho({g}) leaves the block of {m}")));
                        }
                    }
                }
            }
        }
        for a in 0..grp.order() {
            for b in 0..grp.order() {
                if self.matrices[a].matmul(&self.matrices[b])? != self.matrices[grp.mul(a, b)] {
                    return Err(Error::construction(format!("rho is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn groupoid(&self) -> &Arc<ActionGroupoid> {
        &self.groupoid
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().expect("offsets are non-empty")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// First basis index of `V_m`.
    pub fn offset(&self, m: usize) -> usize {
        self.offsets[m]
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Points where `V_m` is non-zero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&m| self.dims[m] > 0).collect()
    }

    /// `K(M) ⊗ K[G]` with basis `(m, x)` and `g.(m, x) = (g.m, gx)`.
    pub fn regular(groupoid: Arc<ActionGroupoid>) -> Self {
        let grp = groupoid.group().clone();
        let n = grp.order();
        let pts = groupoid.points();
        let matrices = (0..n)
            .map(|g| {
                let mut mat = Matrix::zeros(pts * n, pts * n);
                for m in 0..pts {
                    for x in 0..n {
                        mat[(groupoid.act(g, m) * n + grp.mul(g, x), m * n + x)] = Cyclotomic::one();
                    }
                }
                mat
            })
            .collect();
        Self::unchecked(groupoid, vec![n; pts], matrices)
    }
}

/// `chi(m,g) = Tr(rho(g) P(m))`.
pub fn character(rep: &GroupoidRep) -> ClassFunction {
    let gamma = rep.groupoid();
    let mut f = ClassFunction::zero(gamma);
    for m in 0..gamma.points() {
        for g in 0..gamma.group().order() {
            if gamma.act(g, m) != m {
                continue;
            }
            let mat = rep.matrix(g);
            let mut t = Cyclotomic::zero();
            for i in rep.offsets[m]..rep.offsets[m + 1] {
                t = t + &mat[(i, i)];
            }
            f.values[m][g] = t;
        }
    }
    f
}

/// Irreducible representations of `s` with explicit matrices, in the order
/// of its character table. Degree-one irreps are read off the table; higher
/// ones are realised on a minimal left ideal `K[S] e_chi f_lambda`.
pub fn stabilizer_irreps(s: &FiniteGroup) -> Result<Vec<Irrep>> {
    let table = character_table(s)?;
    let n = s.order();
    (0..table.len())
        .map(|row| {
            let d = table.degrees[row];
            if d == 1 {
                let matrices = (0..n)
                    .map(|x| Matrix::from_fn(1, 1, |_, _| table.value(row, x).clone()))
                    .collect();
                return Ok(Irrep {
                    degree: 1,
                    character_row: row,
                    matrices,
                });
            }
            let chi: Vec<Cyclotomic> = (0..n).map(|x| table.value(row, x).clone()).collect();
            let lambda = multiplicity_free_restriction(s, &chi)?;
            let matrices = ideal_matrices(s, &chi, d, &lambda)?;
            Ok(Irrep {
                degree: d,
                character_row: row,
                matrices,
            })
        })
        .collect()
}

/// A linear character of an abelian subgroup, as `(element, value)` pairs,
/// occurring exactly once in the restriction of `chi`.
fn multiplicity_free_restriction(s: &FiniteGroup, chi: &[Cyclotomic]) -> Result<Vec<(usize, Cyclotomic)>> {
    let n = s.order();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut by_order: Vec<usize> = (1..n).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(s.element_order(x)), x));
    for &x in &by_order {
        candidates.push(vec![x]);
    }
    for &x in &by_order {
        for &y in &by_order {
            if x < y && s.commute(x, y) {
                candidates.push(vec![x, y]);
            }
        }
    }
    let mut tried = std::collections::BTreeSet::new();
    for gens in candidates {
        let elems = s.generated_by(&gens);
        if !tried.insert(elems.clone()) {
            continue;
        }
        let (l, embed) = s.subgroup("L", &elems)?;
        let lt = character_table(&l)?;
        let inv_l = Cyclotomic::from(rat(1, l.order() as i64));
        for row in 0..lt.len() {
            let mut acc = Cyclotomic::zero();
            for (i, &x) in embed.iter().enumerate() {
                acc = acc + &(chi[x].clone() * &lt.value(row, i).conjugate());
            }
            if (acc * &inv_l).is_one() {
                return Ok(embed
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (x, lt.value(row, i).clone()))
                    .collect());
            }
        }
    }
    Err(Error::construction(format!(
        "no abelian subgroup of {} restricts this character multiplicity-freely",
        s.name()
    )))
}

fn ideal_matrices(
    s: &FiniteGroup,
    chi: &[Cyclotomic],
    d: usize,
    lambda: &[(usize, Cyclotomic)],
) -> Result<Vec<Matrix>> {
    let n = s.order();
    let ce = Cyclotomic::from(rat(d as i64, n as i64));
    let e: Vec<Cyclotomic> = (0..n).map(|g| chi[s.inv(g)].clone() * &ce).collect();
    let cl = Cyclotomic::from(rat(1, lambda.len() as i64));
    let mut p = vec![Cyclotomic::zero(); n];
    for (g, eg) in e.iter().enumerate() {
        if eg.is_zero() {
            continue;
        }
        for (l, val) in lambda {
            let coeff = eg.clone() * &val.conjugate() * &cl;
            let idx = s.mul(g, *l);
            p[idx] = std::mem::replace(&mut p[idx], Cyclotomic::zero()) + coeff;
        }
    }
    // left translate by t: (t.p)(x) = p(t^{-1} x)
    let translate = |t: usize| -> Vec<Cyclotomic> { (0..n).map(|x| p[s.mul(s.inv(t), x)].clone()).collect() };
    let mut gens = Vec::new();
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    for t in 0..n {
        let v = translate(t);
        let mut trial = rows.clone();
        trial.push(v);
        let m = Matrix::from_fn(trial.len(), n, |r, c| trial[r][c].clone());
        if m.rank() == trial.len() {
            rows = trial;
            gens.push(t);
        }
        if gens.len() == d {
            break;
        }
    }
    if gens.len() != d {
        return Err(Error::construction("left ideal has the wrong dimension"));
    }
    // basis as columns; choose d rows on which it is invertible
    let basis = Matrix::from_fn(n, d, |r, c| rows[c][r].clone());
    let (_, pivots) = basis.transpose().rref();
    let all: Vec<usize> = (0..d).collect();
    let inv = basis.submatrix(&pivots, &all).inverse()?;
    (0..n)
        .map(|t| {
            let images: Vec<Vec<Cyclotomic>> = gens.iter().map(|&b| translate(s.mul(t, b))).collect();
            let rhs = Matrix::from_fn(d, d, |r, c| images[c][pivots[r]].clone());
            inv.matmul(&rhs)
        })
        .collect()
}

/// Simple objects of `M//G`: for each orbit (by smallest point `m0`) and each
/// irrep of `Stab(m0)`, the induced representation with coset representatives
/// `r_m` = smallest `g` with `g.m0 = m`.
pub fn simple_objects(gamma: &Arc<ActionGroupoid>) -> Result<Vec<GroupoidRep>> {
    let grp = gamma.group().clone();
    let orbits = gamma.orbits();
    let per_orbit: Vec<Result<Vec<GroupoidRep>>> = orbits
        .par_iter()
        .enumerate()
        .map(|(oi, orbit)| {
            let m0 = orbit[0];
            let (stab, embed) = grp.subgroup("Stab", &gamma.stabilizer(m0))?;
            let mut pos = vec![usize::MAX; grp.order()];
            for (i, &x) in embed.iter().enumerate() {
                pos[x] = i;
            }
            let reps: Vec<usize> = orbit
                .iter()
                .map(|&m| gamma.transporter(m0, m).expect("point lies in the orbit"))
                .collect();
            let mut slot = vec![usize::MAX; gamma.points()];
            for (i, &m) in orbit.iter().enumerate() {
                slot[m] = i;
            }
            let irreps = stabilizer_irreps(&stab)?;
            Ok(irreps
                .into_iter()
                .enumerate()
                .map(|(ii, irrep)| {
                    let d = irrep.degree;
                    let dims: Vec<usize> = (0..gamma.points())
                        .map(|m| if slot[m] == usize::MAX { 0 } else { d })
                        .collect();
                    let mut offsets = vec![0; gamma.points()];
                    let mut acc = 0;
                    for m in 0..gamma.points() {
                        offsets[m] = acc;
                        acc += dims[m];
                    }
                    let matrices = (0..grp.order())
                        .map(|g| {
                            let mut mat = Matrix::zeros(acc, acc);
                            for (i, &m) in orbit.iter().enumerate() {
                                let target = gamma.act(g, m);
                                let rt = reps[slot[target]];
                                let st = grp.mul(grp.mul(grp.inv(rt), g), reps[i]);
                                let block = &irrep.matrices[pos[st]];
                                for r in 0..d {
                                    for c in 0..d {
                                        mat[(offsets[target] + r, offsets[m] + c)] = block[(r, c)].clone();
                                    }
                                }
                            }
                            mat
                        })
                        .collect();
                    let mut rep = GroupoidRep::unchecked(gamma.clone(), dims, matrices);
                    rep.label = Some((oi, ii));
                    rep
                })
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for r in per_orbit {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoids::{inertia_groupoid, pairing};
    use crate::groups::{catalogue_group, GROUP_NAMES};

    #[test]
    fn irreps_realise_their_characters() {
        for name in GROUP_NAMES {
            let g = catalogue_group(name).unwrap();
            let t = character_table(&g).unwrap();
            let irreps = stabilizer_irreps(&g).unwrap();
            for ir in &irreps {
                for a in 0..g.order() {
                    assert_eq!(&ir.matrices[a].trace(), t.value(ir.character_row, a), "{name}");
                    for b in 0..g.order() {
                        assert_eq!(
                            ir.matrices[a].matmul(&ir.matrices[b]).unwrap(),
                            ir.matrices[g.mul(a, b)]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn point_groupoid_of_z2() {
        let gamma = Arc::new(ActionGroupoid::point(Arc::new(FiniteGroup::cyclic(2))));
        let simples = simple_objects(&gamma).unwrap();
        assert_eq!(simples.len(), 2);
        assert!(simples.iter().all(|s| s.dim() == 1));
    }

    #[test]
    fn s3_conjugation_simples() {
        let s3 = Arc::new(catalogue_group("S3").unwrap());
        let gamma = Arc::new(ActionGroupoid::conjugation(s3));
        let simples = simple_objects(&gamma).unwrap();
        assert_eq!(simples.len(), 8);
        assert_eq!(simples.iter().map(|s| s.dim() * s.dim()).sum::<usize>(), 36);
        assert_eq!(simples.len(), inertia_groupoid(&gamma).orbits().len());
        for s in &simples {
            s.validate().unwrap();
        }
        let chars: Vec<ClassFunction> = simples.iter().map(character).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                assert_eq!(pairing(&gamma, a, b), expect);
            }
        }
        // standard character supported on the identity point
        let std = simples.iter().find(|s| s.dims()[0] == 2).unwrap();
        let chi = character(std);
        let vals: Vec<Cyclotomic> = [0usize, 1, 3].iter().map(|&g| chi.get(0, g).clone()).collect();
        let s3 = gamma.group();
        let orders: Vec<usize> = [0usize, 1, 3].iter().map(|&g| s3.element_order(g)).collect();
        for (v, o) in vals.iter().zip(orders) {
            let expect = match o {
                1 => 2,
                2 => 0,
                _ => -1,
            };
            assert_eq!(v, &Cyclotomic::from(expect));
        }
    }

    #[test]
    fn regular_character() {
        let s3 = Arc::new(catalogue_group("S3").unwrap());
        let gamma = Arc::new(ActionGroupoid::conjugation(s3));
        let reg = GroupoidRep::regular(gamma.clone());
        reg.validate().unwrap();
        let chi = character(&reg);
        for m in 0..6 {
            for g in 0..6 {
                let expect = if g == 0 { 6 } else { 0 };
                assert_eq!(chi.get(m, g), &Cyclotomic::from(expect));
            }
        }
        for s in simple_objects(&gamma).unwrap() {
            assert_eq!(pairing(&gamma, &chi, &character(&s)), Cyclotomic::from(s.dim() as i64));
        }
    }

    #[test]
    fn rejects_non_multiplicative_rep() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let gamma = Arc::new(ActionGroupoid::point(z2));
        let m = vec![Matrix::identity(1), Matrix::from_fn(1, 1, |_, _| Cyclotomic::from(2))];
        assert!(GroupoidRep::new(gamma, vec![1], m).is_err());
    }
}
