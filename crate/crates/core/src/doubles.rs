//! The Drinfel'd double `D(H)` and the equivariant double `D^J(G)`.
//!
//! Both use the basis `δ_h ⊗ g` ordered lexicographically by `(h, g)`; for
//! `D^J(G)` the second index runs over `G` only.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupExtension};
use crate::hopf::{AxiomReport, AxiomStatus, Element, HopfData, JHopfDecoration, RibbonDecoration, Sparse, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DoubleBasisLabel {
    /// Index in `H`.
    pub h: usize,
    /// Index in the second group (`H` for `D(H)`, `G` for `D^J(G)`).
    pub g: usize,
}

impl fmt::Display for DoubleBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}⊗{}", self.h, self.g)
    }
}

/// A double with its J-structure (trivial for `D(H)`) and ribbon data.
#[derive(Clone, Debug)]
pub struct Double<S> {
    pub ext: GroupExtension,
    pub hopf: HopfData<S>,
    pub jdec: JHopfDecoration<S>,
    pub ribbon: RibbonDecoration<S>,
}

impl<S: Field> Double<S> {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// Basis index of `δ_h ⊗ g` with `g` a G-index.
    pub fn index(&self, h: usize, g: usize) -> usize {
        h * self.ext.g().order() + g
    }

    pub fn label(&self, a: usize) -> DoubleBasisLabel {
        let m = self.ext.g().order();
        DoubleBasisLabel { h: a / m, g: a % m }
    }

    /// `θ_j^{-1}`: the degree-`j` part of `θ^{-1}`.
    pub fn theta_inv_component(&self, j: usize) -> Element<S> {
        graded_part(&self.ribbon.theta_inv, &self.jdec.grading, j)
    }

    /// `R_{i,j}`: the part of `R` with legs of degrees `i` and `j`.
    pub fn r_component(&self, i: usize, j: usize) -> Tensor<S> {
        let gr = &self.jdec.grading;
        self.ribbon
            .r
            .iter()
            .filter(|((a, b), _)| gr[*a] == i && gr[*b] == j)
            .map(|(k, v)| (*k, v.clone()))
            .collect()
    }
}

fn graded_part<S: Field>(x: &Element<S>, grading: &[usize], j: usize) -> Element<S> {
    x.iter()
        .zip(grading)
        .map(|(v, &d)| if d == j { v.clone() } else { S::zero() })
        .collect()
}

/// `H` as an extension of the trivial group by itself.
pub fn trivial_extension(h: &FiniteGroup) -> GroupExtension {
    let all: Vec<usize> = (0..h.order()).collect();
    let name = format!("{0}-{0}", h.name());
    GroupExtension::from_kernel(&name, h.clone(), &all, None).expect("whole group is normal")
}

/// `D(H)`.
pub fn drinfeld_double<S: Field>(h: &FiniteGroup) -> Double<S> {
    equivariant_double(&trivial_extension(h)).expect("trivial extension is valid")
}

/// `D^J(G) ⊂ D(H)` with grading, weak action, coherence elements, `R` and `θ`.
pub fn equivariant_double<S: Field>(ext: &GroupExtension) -> Result<Double<S>> {
    if !ext.is_normalized() {
        return Err(Error::construction("section is not normalized"));
    }
    let hg: &Arc<FiniteGroup> = ext.h();
    let gg = ext.g();
    let jg = ext.j();
    let (n, m, nj) = (hg.order(), gg.order(), jg.order());
    let d = n * m;
    let idx = |h: usize, g: usize| h * m + g;
    let one = || S::one();
    let to_g = |x: usize| -> Result<usize> {
        ext.h_to_g(x)
            .ok_or_else(|| Error::construction(format!("{} is not in the kernel", hg.label(x))))
    };
    let gh = |g: usize| ext.g_in_h(g);

    let labels = (0..d)
        .map(|a| format!("δ_{}⊗{}", hg.label(a / m), gg.label(a % m)))
        .collect();

    let mut mult: Vec<Sparse<S>> = vec![Vec::new(); d * d];
    for h1 in 0..n {
        for g1 in 0..m {
            let x = gh(g1);
            for g2 in 0..m {
                // the product is nonzero only for h2 = x^{-1} h1 x
                let h2 = hg.conj(hg.inv(x), h1);
                mult[idx(h1, g1) * d + idx(h2, g2)] = vec![(idx(h1, gg.mul(g1, g2)), one())];
            }
        }
    }
    let unit: Sparse<S> = (0..n).map(|h| (idx(h, 0), one())).collect();
    let comult = (0..d)
        .map(|a| {
            let (h, g) = (a / m, a % m);
            (0..n)
                .map(|h1| (idx(h1, g), idx(hg.mul(hg.inv(h1), h), g), one()))
                .collect()
        })
        .collect();
    let counit = (0..d).map(|a| if a / m == 0 { one() } else { S::zero() }).collect();
    let antipode = (0..d)
        .map(|a| {
            let (h, g) = (a / m, a % m);
            let x = gh(g);
            let xi = hg.inv(x);
            vec![(idx(hg.mul(hg.mul(xi, hg.inv(h)), x), gg.inv(g)), one())]
        })
        .collect();
    let hopf = HopfData::from_parts(labels, mult, unit, comult, counit, antipode)?;

    let grading: Vec<usize> = (0..d).map(|a| ext.pi(a / m)).collect();
    let mut phi = Vec::with_capacity(nj);
    for j in 0..nj {
        let s = ext.s(j);
        let mut row = Vec::with_capacity(d);
        for a in 0..d {
            let (h, g) = (a / m, a % m);
            let g2 = to_g(hg.conj(s, gh(g)))?;
            row.push(vec![(idx(hg.conj(s, h), g2), one())]);
        }
        phi.push(row);
    }
    let mut c = vec![Vec::with_capacity(nj); nj];
    for (i, row) in c.iter_mut().enumerate() {
        for j in 0..nj {
            let cij = to_g(ext.coherence_in_h(i, j))?;
            let mut x = vec![S::zero(); d];
            for h in 0..n {
                x[idx(h, cij)] = one();
            }
            row.push(x);
        }
    }
    let jdec = JHopfDecoration {
        j: jg.clone(),
        grading,
        phi,
        c,
    };

    let mut r = Tensor::new();
    let mut r_inv = Tensor::new();
    for h1 in 0..n {
        let i = ext.pi(h1);
        let y = ext.s(jg.inv(i));
        let leg = to_g(hg.mul(y, h1))?;
        let leg_inv = to_g(hg.mul(hg.inv(h1), hg.inv(y)))?;
        for h2 in 0..n {
            r.insert((idx(h1, 0), idx(h2, leg)), one());
            r_inv.insert((idx(h1, 0), idx(h2, leg_inv)), one());
        }
    }
    let mut theta = vec![S::zero(); d];
    let mut theta_inv = vec![S::zero(); d];
    for h in 0..n {
        let y = ext.s(jg.inv(ext.pi(h)));
        theta[idx(h, to_g(hg.mul(hg.inv(h), hg.inv(y)))?)] = one();
        theta_inv[idx(hg.conj(y, h), to_g(hg.mul(y, h))?)] = one();
    }
    let ribbon = RibbonDecoration {
        r,
        r_inv,
        theta,
        theta_inv,
    };
    Ok(Double {
        ext: ext.clone(),
        hopf,
        jdec,
        ribbon,
    })
}

/// `Σ_{h∈H_j} δ_h ⊗ s(j^{-1}) h`, the inverse twist without conjugating the
/// projector. Kept for comparison with [`Double::theta_inv_component`].
pub fn unconjugated_twist_inverse<S: Field>(ext: &GroupExtension) -> Element<S> {
    let (hg, jg) = (ext.h(), ext.j());
    let m = ext.g().order();
    let mut x = vec![S::zero(); hg.order() * m];
    for h in 0..hg.order() {
        let y = ext.s(jg.inv(ext.pi(h)));
        let g = ext.h_to_g(hg.mul(y, h)).expect("s(j^-1) h lies in G");
        x[h * m + g] = S::one();
    }
    x
}

/// `R_{i,j} R_{i,j}^{-1} = 1_i ⊗ 1_j` for every pair of degrees.
pub fn check_graded_r_inverse<S: Field>(dbl: &Double<S>) -> AxiomReport {
    let nj = dbl.ext.j().order();
    let gr = &dbl.jdec.grading;
    let mut failure = None;
    'outer: for i in 0..nj {
        for j in 0..nj {
            let r = dbl.r_component(i, j);
            let r_inv: Tensor<S> = dbl
                .ribbon
                .r_inv
                .iter()
                .filter(|((a, b), _)| gr[*a] == i && gr[*b] == j)
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            let ui = dbl.jdec.unit_of(&dbl.hopf, i);
            let uj = dbl.jdec.unit_of(&dbl.hopf, j);
            let mut expect = Tensor::new();
            for (a, x) in ui.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (b, y) in uj.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    expect.insert((a, b), x.clone() * y);
                }
            }
            let prod = dbl.hopf.tensor_mul(&r, &r_inv);
            if prod != expect || dbl.hopf.tensor_mul(&r_inv, &r) != expect {
                failure = Some(vec![format!("R_{{{},{}}}", dbl.ext.j().label(i), dbl.ext.j().label(j))]);
                break 'outer;
            }
        }
    }
    let mut rep = AxiomReport::default();
    rep.results.push(crate::hopf::AxiomResult {
        axiom: "graded_r_inverse".into(),
        status: if failure.is_some() {
            AxiomStatus::Fail
        } else {
            AxiomStatus::Pass
        },
        witness: failure.unwrap_or_default(),
    });
    rep
}

/// Whether the constants of `D^J(G)` are those of `D(H)` restricted to the
/// labels with second index in `G`.
pub fn restriction_check(ext: &GroupExtension) -> Result<bool> {
    type Q = crate::algebra::Rational;
    let small: Double<Q> = equivariant_double(ext)?;
    let big: Double<Q> = drinfeld_double(ext.h());
    let n = ext.h().order();
    let m = ext.g().order();
    let embed = |a: usize| (a / m) * n + ext.g_in_h(a % m);
    let map_sparse = |v: &Sparse<Q>| -> Sparse<Q> {
        let mut out: Sparse<Q> = v.iter().map(|(i, s)| (embed(*i), s.clone())).collect();
        out.sort_by_key(|p| p.0);
        out
    };
    let (a, b) = (&small.hopf, &big.hopf);
    let d = a.dim();
    for x in 0..d {
        for y in 0..d {
            if map_sparse(a.product(x, y)) != *b.product(embed(x), embed(y)) {
                return Ok(false);
            }
        }
        let mut co: Vec<(usize, usize, Q)> = a
            .coproduct(x)
            .iter()
            .map(|(p, q, s)| (embed(*p), embed(*q), s.clone()))
            .collect();
        let mut co_big = b.coproduct(embed(x)).to_vec();
        co.sort_by_key(|t| (t.0, t.1));
        co_big.sort_by_key(|t| (t.0, t.1));
        if co != co_big
            || a.counit_of(x) != b.counit_of(embed(x))
            || map_sparse(a.antipode_of(x)) != *b.antipode_of(embed(x))
        {
            return Ok(false);
        }
    }
    Ok(map_sparse(a.unit_sparse()) == *b.unit_sparse())
}

/// The degree-one component `A_1` with the projected coproduct.
pub fn neutral_component<S: Field>(h: &HopfData<S>, dec: &JHopfDecoration<S>) -> Result<HopfData<S>> {
    let keep = dec.component(0);
    let mut pos = vec![usize::MAX; h.dim()];
    for (i, &a) in keep.iter().enumerate() {
        pos[a] = i;
    }
    let k = keep.len();
    let restrict = |v: &Sparse<S>| -> Result<Sparse<S>> {
        v.iter()
            .map(|(i, s)| match pos[*i] {
                usize::MAX => Err(Error::construction("A_1 is not closed")),
                p => Ok((p, s.clone())),
            })
            .collect()
    };
    let mut mult = Vec::with_capacity(k * k);
    for &a in &keep {
        for &b in &keep {
            mult.push(restrict(h.product(a, b))?);
        }
    }
    let unit = restrict(&HopfData::sparsify(&dec.unit_of(h, 0)))?;
    let comult = keep
        .iter()
        .map(|&a| {
            h.coproduct(a)
                .iter()
                .filter(|(p, q, _)| pos[*p] != usize::MAX && pos[*q] != usize::MAX)
                .map(|(p, q, s)| (pos[*p], pos[*q], s.clone()))
                .collect()
        })
        .collect();
    let counit = keep.iter().map(|&a| h.counit_of(a).clone()).collect();
    let antipode = keep
        .iter()
        .map(|&a| restrict(h.antipode_of(a)))
        .collect::<Result<_>>()?;
    let labels = keep.iter().map(|&a| h.label(a).to_string()).collect();
    HopfData::from_parts(labels, mult, unit, comult, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};
    use crate::groups::{catalogue_extension, catalogue_group};
    use crate::hopf::{
        check_hopf_axioms, check_jhopf_axioms, check_quasitriangular, check_ribbon_invertibility, CheckMode,
    };

    type Q = Rational;

    #[test]
    fn small_doubles() {
        let d1: Double<Q> = drinfeld_double(&FiniteGroup::cyclic(1));
        assert_eq!(d1.dim(), 1);
        assert_eq!(d1.ribbon.theta, vec![rat(1, 1)]);
        assert_eq!(d1.ribbon.r.len(), 1);
        let d2: Double<Q> = drinfeld_double(&FiniteGroup::cyclic(2));
        assert_eq!(d2.dim(), 4);
        // δ_0⊗0 + δ_1⊗1
        let expect: Vec<Q> = [1, 0, 0, 1].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(d2.ribbon.theta, expect);
    }

    #[test]
    fn ds3_is_quasitriangular_ribbon() {
        let d: Double<Q> = drinfeld_double(&catalogue_group("S3").unwrap());
        assert_eq!(d.dim(), 36);
        assert!(check_hopf_axioms(&d.hopf, CheckMode::Exhaustive).all_pass());
        assert!(check_ribbon_invertibility(&d.hopf, &d.ribbon).all_pass());
        let qt = check_quasitriangular(&d.hopf, &d.ribbon.r, CheckMode::Exhaustive);
        assert!(qt.all_pass(), "{qt:?}");
    }

    #[test]
    fn product_and_antipode_formulas() {
        let s3 = catalogue_group("S3").unwrap();
        let d: Double<Q> = drinfeld_double(&s3);
        let n = 6;
        for g in 0..n {
            for h in 0..n {
                for g2 in 0..n {
                    for h2 in 0..n {
                        let p = d.hopf.product(g * n + h, g2 * n + h2);
                        if g == s3.conj(h, g2) {
                            assert_eq!(p, &vec![(g * n + s3.mul(h, h2), rat(1, 1))]);
                        } else {
                            assert!(p.is_empty());
                        }
                    }
                }
                let hi = s3.inv(h);
                let img = s3.mul(s3.mul(hi, s3.inv(g)), h);
                assert_eq!(d.hopf.antipode_of(g * n + h), &vec![(img * n + hi, rat(1, 1))]);
            }
        }
    }

    #[test]
    fn a3_s3_double() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let d: Double<Q> = equivariant_double(&ext).unwrap();
        assert_eq!(d.dim(), 18);
        assert_eq!(d.jdec.component(0).len(), 9);
        assert_eq!(d.jdec.component(1).len(), 9);
        assert!(check_hopf_axioms(&d.hopf, CheckMode::Exhaustive).all_pass());
        let rep = check_jhopf_axioms(&d.hopf, &d.jdec, CheckMode::Exhaustive);
        assert!(rep.all_pass(), "{rep:?}");
        assert!(check_graded_r_inverse(&d).all_pass());
        assert!(check_ribbon_invertibility(&d.hopf, &d.ribbon).all_pass());
        let a1 = neutral_component(&d.hopf, &d.jdec).unwrap();
        assert!(check_hopf_axioms(&a1, CheckMode::Exhaustive).all_pass());
    }

    #[test]
    fn z2_z4_coherence_is_nontrivial_grouplike() {
        let ext = catalogue_extension("Z2-Z4").unwrap();
        let d: Double<Q> = equivariant_double(&ext).unwrap();
        let c = &d.jdec.c[1][1];
        let g2 = ext.h_to_g(2).unwrap();
        for h in 0..4 {
            assert_eq!(c[d.index(h, g2)], rat(1, 1));
        }
        let rep = check_jhopf_axioms(&d.hopf, &d.jdec, CheckMode::Exhaustive);
        assert!(rep.all_pass());
    }

    #[test]
    fn non_grouplike_coherence_is_detected() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let mut d: Double<Q> = equivariant_double(&ext).unwrap();
        let one = d.hopf.one();
        d.jdec.c[1][1] = d.hopf.add(&d.jdec.c[1][1], &one);
        let rep = check_jhopf_axioms(&d.hopf, &d.jdec, CheckMode::Exhaustive);
        assert_eq!(rep.get("coherence_grouplike").unwrap().status, AxiomStatus::Fail);
    }

    #[test]
    fn trivial_j_gives_drinfeld_double() {
        let s3 = catalogue_group("S3").unwrap();
        let a: Double<Q> = drinfeld_double(&s3);
        let b: Double<Q> = equivariant_double(&trivial_extension(&s3)).unwrap();
        for x in 0..36 {
            for y in 0..36 {
                assert_eq!(a.hopf.product(x, y), b.hopf.product(x, y));
            }
        }
        assert_eq!(a.ribbon.r, b.ribbon.r);
    }

    #[test]
    fn restrictions() {
        for name in ["A3-S3", "Z2-Z4", "Z4-D4"] {
            assert!(
                restriction_check(&catalogue_extension(name).unwrap()).unwrap(),
                "{name}"
            );
        }
        assert!(restriction_check(&trivial_extension(&catalogue_group("S3").unwrap())).unwrap());
    }

    #[test]
    fn unconjugated_twist_differs_on_nonabelian_sector() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let d: Double<Q> = equivariant_double(&ext).unwrap();
        assert_ne!(unconjugated_twist_inverse::<Q>(&ext), d.ribbon.theta_inv);
        // in degree 1 the two agree since s(1) = 1
        let plain = unconjugated_twist_inverse::<Q>(&ext);
        assert_eq!(graded_part(&plain, &d.jdec.grading, 0), d.theta_inv_component(0));
    }
}
