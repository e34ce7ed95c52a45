use super::{FiniteGroup, GroupExtension};
use crate::error::{Error, Result};

pub const GROUP_NAMES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "A4", "D6", "S4",
];

pub const EXTENSION_NAMES: &[&str] = &[
    "Z2-Z4", "A3-S3", "Z4-D4", "Z4-Q8", "Z2-Q8", "V4-A4", "A4-S4", "V4-S4", "Z3-Z6", "S3-S3xZ2", "S3-S3",
];

fn perm_from_cycles(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for c in cycles {
        for k in 0..c.len() {
            p[c[k] - 1] = c[(k + 1) % c.len()] - 1;
        }
    }
    p
}

fn quaternions() -> FiniteGroup {
    // basis units 1, i, j, k with signs; index = 2*unit + sign
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["1", "i", "j", "k"];
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, s) = UNIT[a / 2][b / 2];
                    let neg = s ^ (a % 2 == 1) ^ (b % 2 == 1);
                    2 * u + neg as usize
                })
                .collect()
        })
        .collect();
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    FiniteGroup::from_table("Q8", table, labels).expect("quaternion table")
}

/// A built-in group by name.
pub fn catalogue_group(name: &str) -> Result<FiniteGroup> {
    let g = match name {
        "Z1" => FiniteGroup::cyclic(1),
        "Z2" => FiniteGroup::cyclic(2),
        "Z3" => FiniteGroup::cyclic(3),
        "Z4" => FiniteGroup::cyclic(4),
        "Z6" => FiniteGroup::cyclic(6),
        "Z2xZ2" => FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
        "S3" => FiniteGroup::from_permutations(
            "S3",
            &[perm_from_cycles(3, &[&[1, 2]]), perm_from_cycles(3, &[&[1, 2, 3]])],
        ),
        "D4" => FiniteGroup::from_permutations(
            "D4",
            &[perm_from_cycles(4, &[&[1, 2, 3, 4]]), perm_from_cycles(4, &[&[1, 3]])],
        ),
        "D6" => FiniteGroup::from_permutations(
            "D6",
            &[
                perm_from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]),
                perm_from_cycles(6, &[&[2, 6], &[3, 5]]),
            ],
        ),
        "Q8" => quaternions(),
        "A4" => FiniteGroup::from_permutations(
            "A4",
            &[
                perm_from_cycles(4, &[&[1, 2, 3]]),
                perm_from_cycles(4, &[&[1, 2], &[3, 4]]),
            ],
        ),
        "S4" => FiniteGroup::from_permutations(
            "S4",
            &[perm_from_cycles(4, &[&[1, 2]]), perm_from_cycles(4, &[&[1, 2, 3, 4]])],
        ),
        _ => return Err(Error::usage(format!("unknown group '{name}'"))),
    };
    Ok(g.with_name(name))
}

fn first_of_order(g: &FiniteGroup, k: usize) -> usize {
    (0..g.order())
        .find(|&x| g.element_order(x) == k)
        .expect("element of requested order")
}

/// A built-in extension by name, written `kernel-total`.
pub fn catalogue_extension(name: &str) -> Result<GroupExtension> {
    let (h, kernel) = match name {
        "Z2-Z4" => (FiniteGroup::cyclic(4), vec![0, 2]),
        "A3-S3" => {
            let h = catalogue_group("S3")?;
            let all: Vec<usize> = (0..h.order()).collect();
            let k = h.commutator_subgroup_of(&all);
            (h, k)
        }
        "Z4-D4" | "Z4-Q8" => {
            let h = catalogue_group(&name[3..])?;
            let k = h.generated_by(&[first_of_order(&h, 4)]);
            (h, k)
        }
        "Z2-Q8" => {
            let h = catalogue_group("Q8")?;
            let k = h.center();
            (h, k)
        }
        "V4-A4" | "A4-S4" | "V4-S4" => {
            let h = catalogue_group(&name[3..])?;
            let all: Vec<usize> = (0..h.order()).collect();
            let mut k = h.commutator_subgroup_of(&all);
            if name == "V4-S4" {
                k = h.commutator_subgroup_of(&k);
            }
            (h, k)
        }
        "Z3-Z6" => (FiniteGroup::cyclic(6), vec![0, 2, 4]),
        "S3-S3xZ2" => {
            let h = catalogue_group("S3")?.direct_product(&FiniteGroup::cyclic(2));
            let k = (0..h.order()).filter(|x| x % 2 == 0).collect();
            (h, k)
        }
        "S3-S3" => {
            let h = catalogue_group("S3")?;
            let k = (0..h.order()).collect();
            (h, k)
        }
        _ => return Err(Error::usage(format!("unknown extension '{name}'"))),
    };
    GroupExtension::from_kernel(name, h, &kernel, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let expect = [1, 2, 3, 4, 6, 4, 6, 8, 8, 12, 12, 24];
        for (name, n) in GROUP_NAMES.iter().zip(expect) {
            assert_eq!(catalogue_group(name).unwrap().order(), n, "{name}");
        }
    }

    #[test]
    fn extensions_build() {
        let shapes = [
            ("Z2-Z4", 2, 2),
            ("A3-S3", 3, 2),
            ("Z4-D4", 4, 2),
            ("Z4-Q8", 4, 2),
            ("Z2-Q8", 2, 4),
            ("V4-A4", 4, 3),
            ("A4-S4", 12, 2),
            ("V4-S4", 4, 6),
            ("Z3-Z6", 3, 2),
            ("S3-S3xZ2", 6, 2),
            ("S3-S3", 6, 1),
        ];
        for (name, g, j) in shapes {
            let e = catalogue_extension(name).unwrap();
            assert_eq!((e.g().order(), e.j().order()), (g, j), "{name}");
        }
    }
}
