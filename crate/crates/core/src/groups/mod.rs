//! Finite groups stored as multiplication tables, extensions and weak actions.

mod catalogue;
mod extension;
mod iso;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalogue::{catalogue_extension, catalogue_group, EXTENSION_NAMES, GROUP_NAMES};
pub use extension::{
    extension_to_weak_action, weak_action_to_extension, weak_actions_isomorphic, GroupExtension, WeakAction,
    WeakActionIso,
};
pub use iso::find_isomorphism;

/// A finite group given by its multiplication table. The identity is index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    conj: OnceLock<ConjugacyData>,
}

/// JSON form of a group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

/// Conjugacy classes and centralizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    /// Classes ordered by their smallest element; each class sorted.
    pub classes: Vec<Vec<usize>>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
    /// Centralizer of each class representative (the smallest element).
    pub centralizers: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.n)
    }
}

impl FiniteGroup {
    /// Builds a group from a table, checking the group axioms.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::construction("a group needs at least one element"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::construction(
                "multiplication table is not square or has out-of-range entries",
            ));
        }
        let labels = if labels.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else if labels.len() == n {
            labels
        } else {
            return Err(Error::construction("label count differs from group order"));
        };
        for x in 0..n {
            if table[0][x] != x || table[x][0] != x {
                return Err(Error::construction(format!(
                    "index 0 is not an identity (fails at {x})"
                )));
            }
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == 0) {
                Some(y) if table[y][x] == 0 => inv[x] = y as u32,
                _ => return Err(Error::construction(format!("element {x} has no two-sided inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::construction(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            n,
            table: table.into_iter().flatten().map(|x| x as u32).collect(),
            inv,
            labels,
            conj: OnceLock::new(),
        })
    }

    pub fn from_spec(name: &str, spec: &GroupSpec) -> Result<Self> {
        if spec.order != spec.table.len() {
            return Err(Error::construction("order does not match table size"));
        }
        Self::from_table(name, spec.table.clone(), spec.labels.clone())
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            order: self.n,
            table: (0..self.n)
                .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// Closure of a set of permutations of `0..degree`, in breadth-first order
    /// from the identity.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Self {
        let degree = gens.first().map_or(0, |g| g.len());
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(id, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                // apply elems[i] first, then g
                let p: Vec<usize> = (0..degree).map(|k| g[elems[i][k]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        // (a*b)(k) = a(b(k)): b acts first
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let p: Vec<usize> = (0..degree).map(|k| elems[a][elems[b][k]]).collect();
                        index[&p]
                    })
                    .collect()
            })
            .collect();
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(name, table, labels).expect("permutation closure is a group")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_table(&format!("Z{n}"), table, labels).expect("cyclic group")
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.n;
        let n = self.n * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m]))
            .collect();
        Self::from_table(&format!("{}x{}", self.name, other.name), table, labels).expect("direct product of groups")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `a b a^{-1}`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn mul_all(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Subgroup generated by `gens`, sorted by index.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&x| seen[x]).collect()
    }

    /// Subgroup generated by commutators of elements of `subset`.
    pub fn commutator_subgroup_of(&self, subset: &[usize]) -> Vec<usize> {
        let comms: BTreeSet<usize> = subset
            .iter()
            .flat_map(|&a| subset.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.generated_by(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.commute(a, b)))
            .collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        set.contains(&0)
            && set.iter().all(|&a| set.contains(&self.inv(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        self.is_subgroup(elems) && (0..self.n).all(|g| set.iter().all(|&x| set.contains(&self.conj(g, x))))
    }

    /// The subgroup on `elems` (which must be a subgroup) as a group in its own
    /// right, elements ordered by increasing index in `self`.
    pub fn subgroup(&self, name: &str, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut sorted: Vec<usize> = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !self.is_subgroup(&sorted) {
            return Err(Error::construction("element set is not a subgroup"));
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in sorted.iter().enumerate() {
            pos[x] = i;
        }
        let table = sorted
            .iter()
            .map(|&a| sorted.iter().map(|&b| pos[self.mul(a, b)]).collect())
            .collect();
        let labels = sorted.iter().map(|&x| self.labels[x].clone()).collect();
        Ok((Self::from_table(name, table, labels)?, sorted))
    }

    pub fn conjugacy_data(&self) -> &ConjugacyData {
        self.conj.get_or_init(|| {
            let n = self.n;
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let k = classes.len();
                let mut class: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
                class.sort_unstable();
                class.dedup();
                for &y in &class {
                    class_of[y] = k;
                }
                classes.push(class);
            }
            let centralizers = classes
                .iter()
                .map(|c| (0..n).filter(|&g| self.commute(g, c[0])).collect())
                .collect();
            ConjugacyData {
                classes,
                class_of,
                centralizers,
            }
        })
    }
}

/// Conjugacy classes and centralizers of `g`.
pub fn conjugacy_data(g: &FiniteGroup) -> ConjugacyData {
    g.conjugacy_data().clone()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut k = p[start];
        while k != start {
            seen[k] = true;
            cycle.push(k + 1);
            k = p[k];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// A homomorphism between finite groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&x| x >= target.order()) {
            return Err(Error::construction("image table has the wrong shape"));
        }
        if images[0] != 0 {
            return Err(Error::construction("identity is not mapped to identity"));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::construction(format!("not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&x| self.images[x] == 0).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        let set: BTreeSet<usize> = self.images.iter().copied().collect();
        set.len() == self.target.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_classes() {
        let s3 = catalogue_group("S3").unwrap();
        let cd = s3.conjugacy_data();
        let mut sizes: Vec<(usize, usize)> = cd
            .classes
            .iter()
            .zip(&cd.centralizers)
            .map(|(c, z)| (c.len(), z.len()))
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(1, 6), (2, 3), (3, 2)]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        for name in ["Z4", "Z2xZ2", "Z6"] {
            let g = catalogue_group(name).unwrap();
            assert_eq!(g.conjugacy_data().len(), g.order());
        }
    }

    #[test]
    fn q8_has_five_classes() {
        assert_eq!(catalogue_group("Q8").unwrap().conjugacy_data().len(), 5);
    }

    #[test]
    fn class_equation() {
        for name in GROUP_NAMES {
            let g = catalogue_group(name).unwrap();
            let cd = g.conjugacy_data();
            let total: usize = cd.classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            for (c, z) in cd.classes.iter().zip(&cd.centralizers) {
                assert_eq!(c.len() * z.len(), g.order(), "{name}");
            }
        }
    }

    #[test]
    fn rejects_non_associative_table() {
        // a Latin square with identity that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", t, vec![]).is_err());
    }

    #[test]
    fn spec_round_trip() {
        let g = catalogue_group("D4").unwrap();
        let back = FiniteGroup::from_spec("D4", &g.to_spec()).unwrap();
        assert_eq!(g, back);
    }
}
