use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupHom, GroupSpec};
use crate::error::{Error, Result};

/// A short exact sequence `G -> H -> J` with a set-theoretic section `s: J -> H`.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    name: String,
    g: Arc<FiniteGroup>,
    h: Arc<FiniteGroup>,
    j: Arc<FiniteGroup>,
    incl: GroupHom,
    proj: GroupHom,
    section: Vec<usize>,
    h_to_g: Vec<Option<usize>>,
    fibers: Vec<Vec<usize>>,
}

/// JSON form of an extension.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionSpec {
    #[serde(rename = "H")]
    pub h: GroupSpec,
    pub kernel: Vec<usize>,
    #[serde(default)]
    pub section: Option<Vec<usize>>,
}

impl GroupExtension {
    /// Builds the extension of `H` by a normal subgroup. The quotient `J` has
    /// one element per coset, ordered by the smallest index in the coset. The
    /// default section picks that smallest index.
    pub fn from_kernel(name: &str, h: FiniteGroup, kernel: &[usize], section: Option<Vec<usize>>) -> Result<Self> {
        if !h.is_normal_subgroup(kernel) {
            return Err(Error::construction("kernel is not a normal subgroup"));
        }
        let (g, embed) = h.subgroup(&format!("ker({name})"), kernel)?;
        let n = h.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != usize::MAX {
                continue;
            }
            for &k in &embed {
                coset[h.mul(x, k)] = reps.len();
            }
            reps.push(x);
        }
        let jt = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset[h.mul(a, b)]).collect())
            .collect();
        let jl = reps.iter().map(|&r| format!("[{}]", h.label(r))).collect();
        let j = FiniteGroup::from_table(&format!("coker({name})"), jt, jl)?;
        let mut h_to_g = vec![None; n];
        for (i, &x) in embed.iter().enumerate() {
            h_to_g[x] = Some(i);
        }
        let mut fibers = vec![Vec::new(); reps.len()];
        for x in 0..n {
            fibers[coset[x]].push(x);
        }
        let (g, h, j) = (Arc::new(g), Arc::new(h), Arc::new(j));
        let incl = GroupHom::new(g.clone(), h.clone(), embed)?;
        let proj = GroupHom::new(h.clone(), j.clone(), coset)?;
        let ext = GroupExtension {
            name: name.to_string(),
            g,
            h,
            j,
            incl,
            proj,
            section: reps,
            h_to_g,
            fibers,
        };
        match section {
            Some(s) => ext.with_section(s),
            None => Ok(ext),
        }
    }

    pub fn from_spec(name: &str, spec: &ExtensionSpec) -> Result<Self> {
        let h = FiniteGroup::from_spec(name, &spec.h)?;
        Self::from_kernel(name, h, &spec.kernel, spec.section.clone())
    }

    /// Replaces the section. Only `pi(s(j)) = j` is enforced here; a section
    /// with `s(1) != 1` is representable so that it can be rejected downstream.
    pub fn with_section(mut self, section: Vec<usize>) -> Result<Self> {
        if section.len() != self.j.order() {
            return Err(Error::construction("section length differs from |J|"));
        }
        for (jx, &hx) in section.iter().enumerate() {
            if hx >= self.h.order() || self.proj.apply(hx) != jx {
                return Err(Error::construction(format!("section is not a lift at j = {jx}")));
            }
        }
        self.section = section;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn h(&self) -> &Arc<FiniteGroup> {
        &self.h
    }

    pub fn j(&self) -> &Arc<FiniteGroup> {
        &self.j
    }

    pub fn incl(&self) -> &GroupHom {
        &self.incl
    }

    pub fn proj(&self) -> &GroupHom {
        &self.proj
    }

    pub fn section(&self) -> &[usize] {
        &self.section
    }

    #[inline]
    pub fn s(&self, j: usize) -> usize {
        self.section[j]
    }

    #[inline]
    pub fn pi(&self, h: usize) -> usize {
        self.proj.apply(h)
    }

    /// The H-index of a G-element.
    #[inline]
    pub fn g_in_h(&self, g: usize) -> usize {
        self.incl.apply(g)
    }

    /// The G-index of an H-element in the kernel.
    #[inline]
    pub fn h_to_g(&self, h: usize) -> Option<usize> {
        self.h_to_g[h]
    }

    /// `H_j = pi^{-1}(j)`, sorted.
    pub fn fiber(&self, j: usize) -> &[usize] {
        &self.fibers[j]
    }

    pub fn is_normalized(&self) -> bool {
        self.section[0] == 0
    }

    /// `s(i) s(j) s(ij)^{-1}` as an H-element.
    pub fn coherence_in_h(&self, i: usize, j: usize) -> usize {
        let h = &self.h;
        let ij = self.j.mul(i, j);
        h.mul(h.mul(self.s(i), self.s(j)), h.inv(self.s(ij)))
    }
}

/// A weak action of `J` on `G`: automorphisms `rho_j` and coherence elements
/// `c_{i,j}` with `rho_i rho_j = Inn(c_{i,j}) rho_{ij}` and the cocycle law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakAction {
    j: Arc<FiniteGroup>,
    g: Arc<FiniteGroup>,
    rho: Vec<Vec<usize>>,
    c: Vec<Vec<usize>>,
}

/// Witness `h_j` of an isomorphism of weak actions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakActionIso {
    pub h: Vec<usize>,
}

impl WeakAction {
    pub fn new(j: Arc<FiniteGroup>, g: Arc<FiniteGroup>, rho: Vec<Vec<usize>>, c: Vec<Vec<usize>>) -> Result<Self> {
        let (nj, ng) = (j.order(), g.order());
        if rho.len() != nj || rho.iter().any(|r| r.len() != ng) || c.len() != nj || c.iter().any(|r| r.len() != nj) {
            return Err(Error::construction("weak action data has the wrong shape"));
        }
        for (jx, r) in rho.iter().enumerate() {
            let hom = GroupHom::new(g.clone(), g.clone(), r.clone())
                .map_err(|e| Error::construction(format!("rho_{jx} is not a homomorphism: {e}")))?;
            if !hom.is_injective() {
                return Err(Error::construction(format!("rho_{jx} is not bijective")));
            }
        }
        if c[0][0] != 0 {
            return Err(Error::construction("c_{1,1} is not the identity"));
        }
        for a in 0..nj {
            for b in 0..nj {
                let ab = j.mul(a, b);
                let cab = c[a][b];
                for x in 0..ng {
                    if rho[a][rho[b][x]] != g.conj(cab, rho[ab][x]) {
                        return Err(Error::construction(format!(
                            "rho_{a} rho_{b} differs from Inn(c) rho_{ab} at {x}"
                        )));
                    }
                }
                for k in 0..nj {
                    let lhs = g.mul(rho[a][c[b][k]], c[a][j.mul(b, k)]);
                    let rhs = g.mul(cab, c[ab][k]);
                    if lhs != rhs {
                        return Err(Error::construction(format!("cocycle law fails at ({a}, {b}, {k})")));
                    }
                }
            }
        }
        Ok(WeakAction { j, g, rho, c })
    }

    pub fn j(&self) -> &Arc<FiniteGroup> {
        &self.j
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    #[inline]
    pub fn rho(&self, j: usize, x: usize) -> usize {
        self.rho[j][x]
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize) -> usize {
        self.c[i][j]
    }

    pub fn is_strict(&self) -> bool {
        self.c.iter().flatten().all(|&x| x == 0)
    }
}

/// `rho_j(g) = s(j) g s(j)^{-1}`, `c_{i,j} = s(i) s(j) s(ij)^{-1}`.
pub fn extension_to_weak_action(ext: &GroupExtension) -> Result<WeakAction> {
    if !ext.is_normalized() {
        return Err(Error::construction("section does not satisfy s(1) = 1"));
    }
    let (g, h, j) = (ext.g(), ext.h(), ext.j());
    let rho = (0..j.order())
        .map(|jx| {
            (0..g.order())
                .map(|x| {
                    let y = h.conj(ext.s(jx), ext.g_in_h(x));
                    ext.h_to_g(y).expect("kernel is normal")
                })
                .collect()
        })
        .collect();
    let c = (0..j.order())
        .map(|a| {
            (0..j.order())
                .map(|b| {
                    ext.h_to_g(ext.coherence_in_h(a, b))
                        .expect("coherence lies in the kernel")
                })
                .collect()
        })
        .collect();
    WeakAction::new(j.clone(), g.clone(), rho, c)
}

/// The group on `G x J` with `(g,i)(g',j) = (g rho_i(g') c_{i,j}, ij)`. The pair
/// `(g, j)` has index `j * |G| + g`, and the section is `s(j) = (1, j)`.
pub fn weak_action_to_extension(wa: &WeakAction) -> Result<GroupExtension> {
    let (g, j) = (wa.g(), wa.j());
    let ng = g.order();
    let n = ng * j.order();
    let table = (0..n)
        .map(|x| {
            let (gx, jx) = (x % ng, x / ng);
            (0..n)
                .map(|y| {
                    let (gy, jy) = (y % ng, y / ng);
                    let prod = g.mul(g.mul(gx, wa.rho(jx, gy)), wa.c(jx, jy));
                    j.mul(jx, jy) * ng + prod
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| format!("({},{})", g.label(x % ng), j.label(x / ng)))
        .collect();
    let name = format!("{}x~{}", g.name(), j.name());
    let h = FiniteGroup::from_table(&name, table, labels)?;
    let kernel: Vec<usize> = (0..ng).collect();
    let section = (0..j.order()).map(|jx| jx * ng).collect();
    GroupExtension::from_kernel(&name, h, &kernel, Some(section))
}

/// Exhaustive search for `h: J -> G` with `rho'_j = Inn(h_j) rho_j` and
/// `c'_{ij} h_{ij} = h_i rho_i(h_j) c_{ij}`.
pub fn weak_actions_isomorphic(wa: &WeakAction, wb: &WeakAction) -> Option<WeakActionIso> {
    if wa.g() != wb.g() || wa.j() != wb.j() {
        return None;
    }
    let (g, j) = (wa.g(), wa.j());
    let cands: Vec<Vec<usize>> = (0..j.order())
        .map(|jx| {
            (0..g.order())
                .filter(|&hx| (0..g.order()).all(|x| wb.rho(jx, x) == g.conj(hx, wa.rho(jx, x))))
                .collect()
        })
        .collect();
    let mut h = vec![usize::MAX; j.order()];
    fn consistent(wa: &WeakAction, wb: &WeakAction, h: &[usize], upto: usize) -> bool {
        let (g, j) = (wa.g(), wa.j());
        for a in 0..=upto {
            for b in 0..=upto {
                let ab = j.mul(a, b);
                if ab > upto {
                    continue;
                }
                let lhs = g.mul(wb.c(a, b), h[ab]);
                let rhs = g.mul(g.mul(h[a], wa.rho(a, h[b])), wa.c(a, b));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
    fn go(wa: &WeakAction, wb: &WeakAction, cands: &[Vec<usize>], h: &mut Vec<usize>, k: usize) -> bool {
        if k == h.len() {
            return true;
        }
        for &x in &cands[k] {
            h[k] = x;
            if consistent(wa, wb, h, k) && go(wa, wb, cands, h, k + 1) {
                return true;
            }
        }
        h[k] = usize::MAX;
        false
    }
    go(wa, wb, &cands, &mut h, 0).then_some(WeakActionIso { h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalogue_extension, catalogue_group, find_isomorphism, EXTENSION_NAMES};

    #[test]
    fn split_extension_is_strict() {
        // S3 is generated in BFS order, so the smallest transposition lifts j
        let ext = catalogue_extension("A3-S3").unwrap();
        let h = ext.h();
        let t = ext.fiber(1).iter().copied().find(|&x| h.element_order(x) == 2).unwrap();
        let ext = ext.with_section(vec![0, t]).unwrap();
        assert!(extension_to_weak_action(&ext).unwrap().is_strict());
    }

    #[test]
    fn z4_coherence_is_nontrivial() {
        let ext = catalogue_extension("Z2-Z4").unwrap();
        assert_eq!(ext.section(), &[0, 1]);
        let wa = extension_to_weak_action(&ext).unwrap();
        assert_eq!(ext.g_in_h(wa.c(1, 1)), 2);
    }

    #[test]
    fn trivial_extension_has_trivial_action() {
        let ext = catalogue_extension("S3-S3xZ2").unwrap();
        let wa = extension_to_weak_action(&ext).unwrap();
        assert!(wa.is_strict());
        for j in 0..2 {
            for x in 0..6 {
                assert_eq!(wa.rho(j, x), x);
            }
        }
    }

    #[test]
    fn unnormalized_section_is_rejected() {
        let ext = catalogue_extension("Z2-Z4").unwrap().with_section(vec![2, 1]).unwrap();
        assert!(matches!(extension_to_weak_action(&ext), Err(Error::Construction(_))));
    }

    #[test]
    fn inversion_action_builds_s3() {
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let wa = WeakAction::new(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]], vec![vec![0, 0], vec![0, 0]]).unwrap();
        let ext = weak_action_to_extension(&wa).unwrap();
        assert!(find_isomorphism(ext.h(), &catalogue_group("S3").unwrap()).is_some());
    }

    #[test]
    fn nontrivial_coherence_builds_z4() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let wa = WeakAction::new(
            z2.clone(),
            z2,
            vec![vec![0, 1], vec![0, 1]],
            vec![vec![0, 0], vec![0, 1]],
        )
        .unwrap();
        let ext = weak_action_to_extension(&wa).unwrap();
        assert!((0..4).any(|x| ext.h().element_order(x) == 4));
    }

    #[test]
    fn trivial_action_builds_product() {
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let wa = WeakAction::new(z2, z3, vec![vec![0, 1, 2]; 2], vec![vec![0, 0], vec![0, 0]]).unwrap();
        let ext = weak_action_to_extension(&wa).unwrap();
        assert!(find_isomorphism(ext.h(), &FiniteGroup::cyclic(6)).is_some());
    }

    #[test]
    fn isomorphism_witnesses() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let wa = extension_to_weak_action(&ext).unwrap();
        let iso = weak_actions_isomorphic(&wa, &wa).unwrap();
        assert!(iso.h.iter().all(|&x| x == 0));

        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let inv = WeakAction::new(
            z2.clone(),
            z3.clone(),
            vec![vec![0, 1, 2], vec![0, 2, 1]],
            vec![vec![0, 0]; 2],
        )
        .unwrap();
        let triv = WeakAction::new(z2, z3, vec![vec![0, 1, 2]; 2], vec![vec![0, 0]; 2]).unwrap();
        assert!(weak_actions_isomorphic(&inv, &triv).is_none());
    }

    #[test]
    fn section_changes_give_isomorphic_actions() {
        for name in EXTENSION_NAMES {
            let ext = catalogue_extension(name).unwrap();
            let wa = extension_to_weak_action(&ext).unwrap();
            // largest element of each fiber, identity kept at j = 1
            let sec: Vec<usize> = (0..ext.j().order())
                .map(|j| if j == 0 { 0 } else { *ext.fiber(j).last().unwrap() })
                .collect();
            let wb = extension_to_weak_action(&ext.clone().with_section(sec).unwrap()).unwrap();
            assert!(weak_actions_isomorphic(&wa, &wb).is_some(), "{name}");
        }
    }
}
