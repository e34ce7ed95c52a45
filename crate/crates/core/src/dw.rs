//! Presentations of fundamental groups, Hom counting, Dijkgraaf-Witten
//! invariants, twisted bundles and twisted Čech cohomology.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};
use crate::groupoids::ActionGroupoid;
use crate::groups::{FiniteGroup, GroupExtension, WeakAction};

/// Generators and relations; letters are signed 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Vec<i32>>,
}

pub const PRESENTATION_NAMES: &[&str] = &["S3sphere", "S2xS1", "circle", "T2", "T3", "RP3", "Sigma_g"];

impl Presentation {
    pub fn new(generators: usize, relations: Vec<Vec<i32>>) -> Result<Self> {
        for rel in &relations {
            for &l in rel {
                if l == 0 || l.unsigned_abs() as usize > generators {
                    return Err(Error::construction(format!("letter {l} is not a generator")));
                }
            }
        }
        Ok(Presentation { generators, relations })
    }

    /// Surface group of genus `g`: `prod [a_i, b_i] = 1`.
    pub fn surface(genus: usize) -> Self {
        if genus == 0 {
            return Presentation {
                generators: 0,
                relations: vec![],
            };
        }
        let mut rel = Vec::new();
        for i in 0..genus as i32 {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            rel.extend([a, b, -a, -b]);
        }
        Presentation {
            generators: 2 * genus,
            relations: vec![rel],
        }
    }

    /// Free abelian group of rank `r`.
    pub fn torus(r: usize) -> Self {
        let mut relations = Vec::new();
        for a in 1..=r as i32 {
            for b in a + 1..=r as i32 {
                relations.push(vec![a, b, -a, -b]);
            }
        }
        Presentation {
            generators: r,
            relations,
        }
    }

    /// Built-in presentation. `Sigma_<g>` gives the closed surface of genus g.
    pub fn named(name: &str) -> Result<Self> {
        Ok(match name {
            "S3sphere" => Presentation {
                generators: 0,
                relations: vec![],
            },
            "S2xS1" | "circle" => Presentation {
                generators: 1,
                relations: vec![],
            },
            "T2" => Self::torus(2),
            "T3" => Self::torus(3),
            "RP3" => Presentation {
                generators: 1,
                relations: vec![vec![1, 1]],
            },
            _ => match name.strip_prefix("Sigma_").and_then(|g| g.parse::<usize>().ok()) {
                Some(g) => Self::surface(g),
                None => return Err(Error::usage(format!("unknown presentation '{name}'"))),
            },
        })
    }

    fn eval(&self, grp: &FiniteGroup, rel: &[i32], images: &[usize]) -> usize {
        rel.iter().fold(0, |acc, &l| {
            let x = images[l.unsigned_abs() as usize - 1];
            grp.mul(acc, if l < 0 { grp.inv(x) } else { x })
        })
    }

    /// Relations grouped by the depth at which all their letters are assigned.
    fn checks_by_depth(&self) -> Vec<Vec<usize>> {
        let mut by = vec![Vec::new(); self.generators + 1];
        for (i, rel) in self.relations.iter().enumerate() {
            let depth = rel.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
            by[depth].push(i);
        }
        by
    }
}

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomBudget {
    pub max_generators: usize,
    /// Largest admissible `|G|^r` once `r` exceeds `max_generators`.
    pub max_tuples: u128,
}

impl Default for HomBudget {
    fn default() -> Self {
        HomBudget {
            max_generators: 4,
            max_tuples: 50_000_000,
        }
    }
}

impl HomBudget {
    fn admit(&self, what: &str, base: usize, r: usize) -> Result<()> {
        let tuples = (base as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        if r <= self.max_generators && tuples <= self.max_tuples.max(1 << 24) || tuples <= self.max_tuples {
            Ok(())
        } else {
            Err(Error::Resource {
                what: what.to_string(),
                needed: format!("{base}^{r} = {tuples} tuples"),
                budget: format!("{} tuples", self.max_tuples),
            })
        }
    }
}

/// Depth-first enumeration of relation-satisfying tuples where generator `i`
/// ranges over `choices[i]`. Parallel over the first generator.
fn enumerate(p: &Presentation, grp: &FiniteGroup, choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let checks = p.checks_by_depth();
    let r = p.generators;
    if checks[0].iter().any(|&i| p.eval(grp, &p.relations[i], &[]) != 0) {
        return vec![];
    }
    if r == 0 {
        return vec![vec![]];
    }
    fn go(
        p: &Presentation,
        grp: &FiniteGroup,
        choices: &[Vec<usize>],
        checks: &[Vec<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let depth = cur.len();
        if depth == p.generators {
            out.push(cur.clone());
            return;
        }
        for &x in &choices[depth] {
            cur.push(x);
            if checks[depth + 1]
                .iter()
                .all(|&i| p.eval(grp, &p.relations[i], cur) == 0)
            {
                go(p, grp, choices, checks, cur, out);
            }
            cur.pop();
        }
    }
    let parts: Vec<Vec<Vec<usize>>> = choices[0]
        .par_iter()
        .map(|&x| {
            let mut out = Vec::new();
            let mut cur = vec![x];
            if checks[1].iter().all(|&i| p.eval(grp, &p.relations[i], &cur) == 0) {
                go(p, grp, choices, &checks, &mut cur, &mut out);
            }
            out
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// All homomorphisms from the presented group to `grp`, as generator images.
pub fn enumerate_homs(p: &Presentation, grp: &FiniteGroup, budget: &HomBudget) -> Result<Vec<Vec<usize>>> {
    budget.admit("Hom enumeration", grp.order(), p.generators)?;
    let all: Vec<usize> = (0..grp.order()).collect();
    Ok(enumerate(p, grp, &vec![all; p.generators]))
}

/// `|Hom(pi_1(M), G)|`.
pub fn count_homs(p: &Presentation, grp: &FiniteGroup, budget: &HomBudget) -> Result<u64> {
    Ok(enumerate_homs(p, grp, budget)?.len() as u64)
}

/// `Z(M) = |Hom(pi_1(M), G)| / |G|`.
pub fn dw_invariant(p: &Presentation, grp: &FiniteGroup, budget: &HomBudget) -> Result<Rational> {
    Ok(rat(count_homs(p, grp, budget)? as i64, grp.order() as i64))
}

/// `Hom(pi_1(M), G)//G` by simultaneous conjugation.
pub fn hom_groupoid(p: &Presentation, grp: &Arc<FiniteGroup>, budget: &HomBudget) -> Result<ActionGroupoid> {
    let homs = enumerate_homs(p, grp, budget)?;
    conjugation_groupoid(homs, grp, grp.clone(), |g| g)
}

fn conjugation_groupoid(
    tuples: Vec<Vec<usize>>,
    ambient: &FiniteGroup,
    acting: Arc<FiniteGroup>,
    embed: impl Fn(usize) -> usize,
) -> Result<ActionGroupoid> {
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let action = (0..acting.order())
        .map(|g| {
            let gh = embed(g);
            tuples
                .iter()
                .map(|t| {
                    let c: Vec<usize> = t.iter().map(|&x| ambient.conj(gh, x)).collect();
                    index[c.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels = tuples
        .iter()
        .map(|t| {
            format!(
                "({})",
                t.iter().map(|&x| ambient.label(x)).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    ActionGroupoid::with_labels(acting, tuples.len(), action, labels)
}

/// Number of simultaneous-conjugation orbits of `Hom(pi_1(Sigma_g), G)`.
pub fn surface_state_dim(genus: usize, grp: &Arc<FiniteGroup>, budget: &HomBudget) -> Result<usize> {
    Ok(hom_groupoid(&Presentation::surface(genus), grp, budget)?.orbits().len())
}

/// A homomorphism from the presented group to `J`, given on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistHom {
    pub images: Vec<usize>,
}

impl TwistHom {
    pub fn new(p: &Presentation, j: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != p.generators || images.iter().any(|&x| x >= j.order()) {
            return Err(Error::construction("twist images have the wrong shape"));
        }
        for (i, rel) in p.relations.iter().enumerate() {
            if p.eval(j, rel, &images) != 0 {
                return Err(Error::construction(format!("relation {i} does not map to 1 in J")));
            }
        }
        Ok(TwistHom { images })
    }

    pub fn trivial(p: &Presentation) -> Self {
        TwistHom {
            images: vec![0; p.generators],
        }
    }
}

/// `Hom^omega(pi_1(M), H)//G`: lifts `mu` with `pi mu = omega`, with G acting
/// by simultaneous conjugation through the inclusion.
pub fn twisted_bundle_groupoid(
    p: &Presentation,
    ext: &GroupExtension,
    omega: &TwistHom,
    budget: &HomBudget,
) -> Result<ActionGroupoid> {
    TwistHom::new(p, ext.j(), omega.images.clone())?;
    budget.admit("twisted Hom enumeration", ext.g().order(), p.generators)?;
    let choices: Vec<Vec<usize>> = omega.images.iter().map(|&j| ext.fiber(j).to_vec()).collect();
    let tuples = enumerate(p, ext.h(), &choices);
    conjugation_groupoid(tuples, ext.h(), ext.g().clone(), |g| ext.g_in_h(g))
}

/// The twisted sector `H_j//G`.
pub fn twisted_sector(ext: &GroupExtension, j: usize) -> Result<ActionGroupoid> {
    ActionGroupoid::conjugation_on_subset(ext.h(), ext.g().clone(), |g| ext.g_in_h(g), ext.fiber(j))
}

/// Nerve of a finite cover: oriented edges `a < b` carrying `j_{ab}`, and
/// triangles `a < b < c` on which the cocycle condition is imposed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverNerve {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, usize)>,
    pub triangles: Vec<(usize, usize, usize)>,
}

impl CoverNerve {
    pub fn new(
        j: &FiniteGroup,
        vertices: usize,
        edges: Vec<(usize, usize, usize)>,
        triangles: Vec<(usize, usize, usize)>,
    ) -> Result<Self> {
        let nerve = CoverNerve {
            vertices,
            edges,
            triangles,
        };
        for &(a, b, jx) in &nerve.edges {
            if a >= b || b >= vertices || jx >= j.order() {
                return Err(Error::construction(format!(
                    "edge ({a},{b}) is not an oriented edge a < b"
                )));
            }
        }
        for &(a, b, c) in &nerve.triangles {
            if !(a < b && b < c) {
                return Err(Error::construction("triangle vertices must be increasing"));
            }
            let (jab, jbc, jac) = (nerve.edge(a, b)?, nerve.edge(b, c)?, nerve.edge(a, c)?);
            let (la, lb, lc) = (nerve.edges[jab].2, nerve.edges[jbc].2, nerve.edges[jac].2);
            if j.mul(la, lb) != lc {
                return Err(Error::construction(format!(
                    "J-labels are not a cocycle on ({a},{b},{c})"
                )));
            }
        }
        Ok(nerve)
    }

    fn edge(&self, a: usize, b: usize) -> Result<usize> {
        self.edges
            .iter()
            .position(|&(x, y, _)| x == a && y == b)
            .ok_or_else(|| Error::construction(format!("triangle edge ({a},{b}) is missing")))
    }

    /// Three arcs covering a circle with monodromy `j`: labels `1, 1, j^{-1}`
    /// on the edges `01, 12, 02`, and no triple overlaps.
    pub fn circle(jg: &FiniteGroup, j: usize) -> Self {
        Self::new(jg, 3, vec![(0, 1, 0), (1, 2, 0), (0, 2, jg.inv(j))], vec![]).expect("circle nerve")
    }

    /// Three sets with a common triple overlap (a disc).
    pub fn disc(jg: &FiniteGroup) -> Self {
        Self::new(jg, 3, vec![(0, 1, 0), (1, 2, 0), (0, 2, 0)], vec![(0, 1, 2)]).expect("disc nerve")
    }

    pub fn point() -> Self {
        CoverNerve {
            vertices: 1,
            edges: vec![],
            triangles: vec![],
        }
    }
}

/// Cohomology classes of twisted cocycles on a nerve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CechClasses {
    /// One representative per class, as G-elements per edge.
    pub classes: Vec<Vec<usize>>,
    pub count: usize,
}

/// Cocycles `g_ab rho_{j_ab}(g_bc) c_{j_ab, j_bc} = g_ac` on triangles, modulo
/// `g'_ab = k_a g_ab rho_{j_ab}(k_b)^{-1}`.
pub fn twisted_cech_h1(nerve: &CoverNerve, wa: &WeakAction, budget: &HomBudget) -> Result<CechClasses> {
    let g = wa.g();
    let ne = nerve.edges.len();
    budget.admit("Čech cochain enumeration", g.order(), ne)?;
    let tri: Vec<(usize, usize, usize)> = nerve
        .triangles
        .iter()
        .map(|&(a, b, c)| Ok((nerve.edge(a, b)?, nerve.edge(b, c)?, nerve.edge(a, c)?)))
        .collect::<Result<_>>()?;
    let satisfies = |cochain: &[usize]| {
        tri.iter().all(|&(ab, bc, ac)| {
            let (jab, jbc) = (nerve.edges[ab].2, nerve.edges[bc].2);
            let lhs = g.mul(g.mul(cochain[ab], wa.rho(jab, cochain[bc])), wa.c(jab, jbc));
            lhs == cochain[ac]
        })
    };
    let mut cocycles = Vec::new();
    let mut cur = vec![0usize; ne];
    loop {
        if satisfies(&cur) {
            cocycles.push(cur.clone());
        }
        // odometer over G^edges
        let mut k = 0;
        while k < ne {
            cur[k] += 1;
            if cur[k] < g.order() {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == ne {
            break;
        }
    }
    let index: HashMap<Vec<usize>, usize> = cocycles.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let mut seen = vec![false; cocycles.len()];
    let mut classes = Vec::new();
    for start in 0..cocycles.len() {
        if seen[start] {
            continue;
        }
        classes.push(cocycles[start].clone());
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for v in 0..nerve.vertices {
                for k in 0..g.order() {
                    let moved: Vec<usize> = nerve
                        .edges
                        .iter()
                        .zip(&cocycles[i])
                        .map(|(&(a, b, jx), &x)| {
                            let ka = if a == v { k } else { 0 };
                            let kb = if b == v { k } else { 0 };
                            g.mul(g.mul(ka, x), g.inv(wa.rho(jx, kb)))
                        })
                        .collect();
                    let j = *index
                        .get(&moved)
                        .ok_or_else(|| Error::construction("coboundary action left the cocycles"))?;
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
    }
    Ok(CechClasses {
        count: classes.len(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoids::groupoid_cardinality;
    use crate::groups::{catalogue_extension, catalogue_group, extension_to_weak_action};

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(catalogue_group("S3").unwrap())
    }

    #[test]
    fn hom_counts() {
        let b = HomBudget::default();
        let g = s3();
        assert_eq!(
            count_homs(&Presentation::named("S3sphere").unwrap(), &g, &b).unwrap(),
            1
        );
        assert_eq!(count_homs(&Presentation::new(2, vec![]).unwrap(), &g, &b).unwrap(), 36);
        let mut brute = 0;
        for x in 0..6 {
            for y in 0..6 {
                for z in 0..6 {
                    if g.commute(x, y) && g.commute(y, z) && g.commute(x, z) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(count_homs(&Presentation::named("T3").unwrap(), &g, &b).unwrap(), brute);
    }

    #[test]
    fn invariants_match_groupoid_cardinality() {
        let b = HomBudget::default();
        for name in ["S3sphere", "S2xS1", "T2", "T3", "RP3", "Sigma_2"] {
            let p = Presentation::named(name).unwrap();
            let g = s3();
            let z = dw_invariant(&p, &g, &b).unwrap();
            assert_eq!(z, groupoid_cardinality(&hom_groupoid(&p, &g, &b).unwrap()), "{name}");
        }
        assert_eq!(
            dw_invariant(&Presentation::named("S2xS1").unwrap(), &s3(), &b).unwrap(),
            rat(1, 1)
        );
    }

    #[test]
    fn surface_dims() {
        let b = HomBudget::default();
        assert_eq!(surface_state_dim(0, &s3(), &b).unwrap(), 1);
        assert_eq!(surface_state_dim(1, &s3(), &b).unwrap(), 8);
        let z5 = Arc::new(FiniteGroup::cyclic(5));
        assert_eq!(surface_state_dim(1, &z5, &b).unwrap(), 25);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = HomBudget {
            max_generators: 1,
            max_tuples: 100,
        };
        let e = count_homs(&Presentation::named("T3").unwrap(), &s3(), &tight).unwrap_err();
        assert!(matches!(e, Error::Resource { ref needed, .. } if needed.contains("6^3")));
    }

    #[test]
    fn circle_bundles_are_sectors() {
        let b = HomBudget::default();
        let ext = catalogue_extension("A3-S3").unwrap();
        let circle = Presentation::named("circle").unwrap();
        for j in 0..2 {
            let omega = TwistHom::new(&circle, ext.j(), vec![j]).unwrap();
            let tb = twisted_bundle_groupoid(&circle, &ext, &omega, &b).unwrap();
            let sector = twisted_sector(&ext, j).unwrap();
            assert_eq!(tb.action_table(), sector.action_table());
        }
        let sphere = Presentation::named("S3sphere").unwrap();
        let tb = twisted_bundle_groupoid(&sphere, &ext, &TwistHom::trivial(&sphere), &b).unwrap();
        assert_eq!(tb.points(), 1);
    }

    #[test]
    fn rejects_non_homomorphic_twist() {
        let ext = catalogue_extension("A3-S3").unwrap();
        let rp3 = Presentation::named("RP3").unwrap();
        // a^2 = 1 holds in Z2 for every image, so use a relation that fails
        let p = Presentation::new(1, vec![vec![1]]).unwrap();
        assert!(TwistHom::new(&p, ext.j(), vec![1]).is_err());
        assert!(TwistHom::new(&rp3, ext.j(), vec![1]).is_ok());
    }

    #[test]
    fn cech_counts() {
        let b = HomBudget::default();
        let ext = catalogue_extension("S3-S3").unwrap();
        let wa = extension_to_weak_action(&ext).unwrap();
        let circle = CoverNerve::circle(ext.j(), 0);
        assert_eq!(twisted_cech_h1(&circle, &wa, &b).unwrap().count, 3);
        assert_eq!(twisted_cech_h1(&CoverNerve::point(), &wa, &b).unwrap().count, 1);
        assert_eq!(twisted_cech_h1(&CoverNerve::disc(ext.j()), &wa, &b).unwrap().count, 1);

        for name in ["A3-S3", "Z2-Z4"] {
            let ext = catalogue_extension(name).unwrap();
            let wa = extension_to_weak_action(&ext).unwrap();
            for j in 0..ext.j().order() {
                let n = twisted_cech_h1(&CoverNerve::circle(ext.j(), j), &wa, &b).unwrap().count;
                assert_eq!(n, twisted_sector(&ext, j).unwrap().orbits().len(), "{name} j={j}");
            }
        }
    }
}
