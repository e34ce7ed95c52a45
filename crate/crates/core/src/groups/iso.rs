use std::collections::VecDeque;

use super::FiniteGroup;

/// An isomorphism `a -> b` as an image table, found by backtracking over
/// images of a generating set with matching element orders.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let mut oa: Vec<usize> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let mut ob: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    let ord_a = oa.clone();
    let ord_b = ob.clone();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob || a.conjugacy_data().len() != b.conjugacy_data().len() {
        return None;
    }
    let gens = generating_set(a);
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &ord_a, &ord_b, &mut images)
}

/// Greedy generating set, preferring elements of large order.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = vec![0];
    for x in by_order {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = g.generated_by(&gens);
        }
    }
    gens
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    ord_a: &[usize],
    ord_b: &[usize],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(a, b, gens, images);
    }
    let want = ord_a[gens[images.len()]];
    for y in 0..b.order() {
        if ord_b[y] != want {
            continue;
        }
        images.push(y);
        if let Some(m) = search(a, b, gens, ord_a, ord_b, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], img);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    map.iter().all(|&m| m != usize::MAX).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalogue_group;

    #[test]
    fn distinguishes_order_eight() {
        let d4 = catalogue_group("D4").unwrap();
        let q8 = catalogue_group("Q8").unwrap();
        assert!(find_isomorphism(&d4, &q8).is_none());
        let m = find_isomorphism(&q8, &q8).unwrap();
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(m[q8.mul(x, y)], q8.mul(m[x], m[y]));
            }
        }
    }

    #[test]
    fn z2xz2_is_not_z4() {
        let v = catalogue_group("Z2xZ2").unwrap();
        assert!(find_isomorphism(&v, &FiniteGroup::cyclic(4)).is_none());
        let z6 = FiniteGroup::cyclic(6);
        let z2z3 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        assert!(find_isomorphism(&z6, &z2z3).is_some());
    }
}
