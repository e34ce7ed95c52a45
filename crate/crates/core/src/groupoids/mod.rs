//! Action groupoids `M//G`, their cardinality and character theory.

mod character_table;
mod reps;

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupSpec};

pub use character_table::{character_table, character_table_bounded, CharacterTable, DEFAULT_MAX_ORDER};
pub use reps::{character, simple_objects, stabilizer_irreps, GroupoidRep, Irrep};

/// A finite set with a left action of a finite group.
#[derive(Clone, Debug)]
pub struct ActionGroupoid {
    group: Arc<FiniteGroup>,
    points: usize,
    /// `action[g][m] = g.m`
    action: Vec<Vec<usize>>,
    labels: Vec<String>,
}

/// JSON form of an action groupoid.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupoidSpec {
    pub points: usize,
    pub group: GroupSpec,
    pub action: Vec<Vec<usize>>,
}

impl ActionGroupoid {
    pub fn new(group: Arc<FiniteGroup>, points: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..points).map(|m| m.to_string()).collect();
        Self::with_labels(group, points, action, labels)
    }

    pub fn with_labels(
        group: Arc<FiniteGroup>,
        points: usize,
        action: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = group.order();
        if action.len() != n
            || action
                .iter()
                .any(|r| r.len() != points || r.iter().any(|&m| m >= points))
        {
            return Err(Error::construction("action table has the wrong shape"));
        }
        if labels.len() != points {
            return Err(Error::construction("label count differs from point count"));
        }
        if (0..points).any(|m| action[0][m] != m) {
            return Err(Error::construction("identity does not act trivially"));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = group.mul(a, b);
                if (0..points).any(|m| action[ab][m] != action[a][action[b][m]]) {
                    return Err(Error::construction(format!("action is not compatible at ({a}, {b})")));
                }
            }
        }
        Ok(ActionGroupoid {
            group,
            points,
            action,
            labels,
        })
    }

    pub fn from_spec(spec: &GroupoidSpec) -> Result<Self> {
        let g = FiniteGroup::from_spec("G", &spec.group)?;
        Self::new(Arc::new(g), spec.points, spec.action.clone())
    }

    /// `pt//G`.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self::new(group, 1, vec![vec![0]; n]).expect("trivial action")
    }

    /// `G//G` by conjugation.
    pub fn conjugation(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = (0..n).map(|g| (0..n).map(|x| group.conj(g, x)).collect()).collect();
        let labels = group.labels().to_vec();
        Self::with_labels(group, n, action, labels).expect("conjugation action")
    }

    /// `S//G` for a subset `S` of `H` closed under conjugation by `G`, where
    /// `g_in_h` embeds G into H. Used for `H_j//G` and `H//G`.
    pub fn conjugation_on_subset(
        h: &FiniteGroup,
        group: Arc<FiniteGroup>,
        g_in_h: impl Fn(usize) -> usize,
        subset: &[usize],
    ) -> Result<Self> {
        let mut pos = vec![usize::MAX; h.order()];
        for (i, &x) in subset.iter().enumerate() {
            pos[x] = i;
        }
        let mut action = Vec::with_capacity(group.order());
        for g in 0..group.order() {
            let gh = g_in_h(g);
            let row: Vec<usize> = subset.iter().map(|&x| pos[h.conj(gh, x)]).collect();
            if row.contains(&usize::MAX) {
                return Err(Error::construction("subset is not closed under conjugation"));
            }
            action.push(row);
        }
        let labels = subset.iter().map(|&x| h.label(x).to_string()).collect();
        Self::with_labels(group, subset.len(), action, labels)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    #[inline]
    pub fn act(&self, g: usize, m: usize) -> usize {
        self.action[g][m]
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// Orbits ordered by smallest point, each sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for m in 0..self.points {
            if seen[m] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order()).map(|g| self.act(g, m)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, m: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.act(g, m) == m).collect()
    }

    /// Smallest `g` with `g.from = to`.
    pub fn transporter(&self, from: usize, to: usize) -> Option<usize> {
        (0..self.group.order()).find(|&g| self.act(g, from) == to)
    }

    /// Pairs `(m, g)` with `g.m = m`, ordered by `m` then `g`.
    pub fn inertia_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.points)
            .flat_map(|m| self.stabilizer(m).into_iter().map(move |g| (m, g)))
            .collect()
    }
}

/// `sum over orbits of 1/|Stab|`; equals `|M|/|G|`.
pub fn groupoid_cardinality(gamma: &ActionGroupoid) -> Rational {
    let by_orbits = gamma
        .orbits()
        .iter()
        .fold(rat(0, 1), |acc, o| acc + rat(1, gamma.stabilizer(o[0]).len() as i64));
    debug_assert_eq!(by_orbits, rat(gamma.points() as i64, gamma.group().order() as i64));
    by_orbits
}

/// `Λ(M//G)`: points `(m, g)` with `g.m = m`, acted on by `h.(m,g) = (h.m, hgh^{-1})`.
pub fn inertia_groupoid(gamma: &ActionGroupoid) -> ActionGroupoid {
    let pairs = gamma.inertia_pairs();
    let index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let grp = gamma.group();
    let action = (0..grp.order())
        .map(|h| {
            pairs
                .iter()
                .map(|&(m, g)| index[&(gamma.act(h, m), grp.conj(h, g))])
                .collect()
        })
        .collect();
    let labels = pairs
        .iter()
        .map(|&(m, g)| format!("({},{})", gamma.label(m), grp.label(g)))
        .collect();
    ActionGroupoid::with_labels(grp.clone(), pairs.len(), action, labels).expect("inertia action")
}

/// A function on `M x G`, stored densely as `values[m][g]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Vec<Cyclotomic>>,
}

impl ClassFunction {
    pub fn zero(gamma: &ActionGroupoid) -> Self {
        ClassFunction {
            values: vec![vec![Cyclotomic::zero(); gamma.group().order()]; gamma.points()],
        }
    }

    pub fn get(&self, m: usize, g: usize) -> &Cyclotomic {
        &self.values[m][g]
    }

    /// `f(m,g) = 0` off the inertia set and `f(h.m, hgh^{-1}) = f(m,g)`.
    pub fn is_class_function(&self, gamma: &ActionGroupoid) -> bool {
        let grp = gamma.group();
        (0..gamma.points()).all(|m| {
            (0..grp.order()).all(|g| {
                let v = &self.values[m][g];
                if gamma.act(g, m) != m {
                    return v.is_zero();
                }
                (0..grp.order()).all(|h| &self.values[gamma.act(h, m)][grp.conj(h, g)] == v)
            })
        })
    }
}

/// `<f, f'> = 1/|G| sum_{g, m} f(m, g^{-1}) f'(m, g)`.
pub fn pairing(gamma: &ActionGroupoid, f: &ClassFunction, f2: &ClassFunction) -> Cyclotomic {
    let grp = gamma.group();
    let mut acc = Cyclotomic::zero();
    for m in 0..gamma.points() {
        for g in 0..grp.order() {
            let a = &f.values[m][grp.inv(g)];
            let b = &f2.values[m][g];
            if !a.is_zero() && !b.is_zero() {
                acc = acc + &(a.clone() * b);
            }
        }
    }
    acc * &Cyclotomic::from(rat(1, grp.order() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalogue_group;

    fn s3_on_three_points() -> ActionGroupoid {
        let s3 = Arc::new(catalogue_group("S3").unwrap());
        // S3 is built from permutations of 3 points; recover them from conjugation on transpositions
        let transpositions: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) == 2).collect();
        ActionGroupoid::conjugation_on_subset(&s3.clone(), s3, |g| g, &transpositions).unwrap()
    }

    #[test]
    fn cardinalities() {
        let s3 = Arc::new(catalogue_group("S3").unwrap());
        assert_eq!(groupoid_cardinality(&ActionGroupoid::point(s3.clone())), rat(1, 6));
        assert_eq!(groupoid_cardinality(&ActionGroupoid::conjugation(s3)), rat(1, 1));
        assert_eq!(groupoid_cardinality(&s3_on_three_points()), rat(1, 2));
    }

    #[test]
    fn inertia_examples() {
        let s3 = Arc::new(catalogue_group("S3").unwrap());
        let lam = inertia_groupoid(&ActionGroupoid::point(s3.clone()));
        let conj = ActionGroupoid::conjugation(s3);
        assert_eq!(lam.points(), 6);
        assert_eq!(lam.action_table(), conj.action_table());
        // one orbit with stabilizer Z2, which has two classes
        let three = Arc::new(s3_on_three_points());
        assert_eq!(inertia_groupoid(&three).orbits().len(), 2);
        assert_eq!(crate::groupoids::simple_objects(&three).unwrap().len(), 2);
        let triv = ActionGroupoid::new(Arc::new(FiniteGroup::cyclic(1)), 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(inertia_groupoid(&triv).points(), 3);
    }

    #[test]
    fn rejects_bad_action() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        assert!(ActionGroupoid::new(z2, 3, vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
    }
}
