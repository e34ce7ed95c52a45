//! Character tables by simultaneous diagonalisation of class-sum matrices
//! over a prime field, lifted to cyclotomic values through eigenvalue
//! multiplicities.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::prime_field::{is_prime, primitive_root};
use crate::algebra::{rat, Cyclotomic, ExactMatrix, Field, PrimeFieldElement};
use crate::error::{Error, Result};
use crate::groups::{ConjugacyData, FiniteGroup};

pub const DEFAULT_MAX_ORDER: usize = 64;
const PRIME_SEARCH_LIMIT: u64 = 1_000_000;

/// Irreducible characters indexed by (irrep, conjugacy class).
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    #[serde(skip)]
    pub classes: ConjugacyData,
    pub class_representatives: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<usize>,
    pub values: Vec<Vec<Cyclotomic>>,
    /// Conductor shared by all entries (the group exponent).
    pub conductor: u32,
    /// Prime used for the modular computation.
    pub prime: u64,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `chi_i(x)` for a group element `x`.
    pub fn value(&self, irrep: usize, x: usize) -> &Cyclotomic {
        &self.values[irrep][self.classes.class_of[x]]
    }
}

type Fp = PrimeFieldElement;

/// Character table with the default order bound.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    character_table_bounded(g, DEFAULT_MAX_ORDER)
}

fn find_prime(order: usize, exponent: usize) -> Result<u64> {
    let e = exponent as u64;
    let mut p = e + 1;
    while p < PRIME_SEARCH_LIMIT {
        if is_prime(p) && p * p > 4 * order as u64 && !(order as u64).is_multiple_of(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::Resource {
        what: "prime search for the character table".into(),
        needed: format!("p = 1 mod {exponent}, p > 2 sqrt({order})"),
        budget: format!("p < {PRIME_SEARCH_LIMIT}"),
    })
}

pub fn character_table_bounded(g: &FiniteGroup, max_order: usize) -> Result<CharacterTable> {
    let n = g.order();
    if n > max_order {
        return Err(Error::Resource {
            what: format!("character table of {}", g.name()),
            needed: format!("order {n}"),
            budget: format!("order {max_order}"),
        });
    }
    let cd = g.conjugacy_data().clone();
    let k = cd.len();
    let e = g.exponent();
    let p = find_prime(n, e)?;
    let fp = |x: i64| Fp::new(p, x);

    // a[i][j][l] = #{(x, y) in C_i x C_j : x y = z_l}
    let mut a = vec![vec![vec![0i64; k]; k]; k];
    for l in 0..k {
        let z = cd.representative(l);
        for (i, ci) in cd.classes.iter().enumerate() {
            for &x in ci {
                let y = g.mul(g.inv(x), z);
                a[i][cd.class_of[y]][l] += 1;
            }
        }
    }

    let mut spaces: Vec<ExactMatrix<Fp>> = vec![ExactMatrix::from_fn(k, k, |r, c| if r == c { fp(1) } else { fp(0) })];
    for (i, ai) in a.iter().enumerate().skip(1) {
        if spaces.iter().all(|s| s.cols() == 1) {
            break;
        }
        let ai = ExactMatrix::from_fn(k, k, |r, c| fp(ai[r][c]));
        let mut next = Vec::new();
        for b in spaces {
            if b.cols() == 1 {
                next.push(b);
                continue;
            }
            let y = ai.matmul(&b)?;
            let x = b
                .solve(&y)?
                .ok_or_else(|| Error::construction(format!("class matrix {i} does not preserve a subspace")))?;
            let r = x.rows();
            for lambda in 0..p {
                let shifted = ExactMatrix::from_fn(r, r, |u, v| {
                    if u == v {
                        x[(u, v)] - fp(lambda as i64)
                    } else {
                        x[(u, v)]
                    }
                });
                let ker = shifted.kernel();
                if ker.is_empty() {
                    continue;
                }
                let basis = ExactMatrix::from_fn(r, ker.len(), |u, v| ker[v][(u, 0)]);
                next.push(b.matmul(&basis)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.cols() != 1) || spaces.len() != k {
        return Err(Error::construction("class-sum matrices failed to split the centre"));
    }

    let inv_class: Vec<usize> = (0..k).map(|l| cd.class_of[g.inv(cd.representative(l))]).collect();
    let sizes: Vec<usize> = cd.classes.iter().map(|c| c.len()).collect();
    let z = Fp::new(p, primitive_root(p) as i64).pow((p - 1) / e as u64);
    let e_inv = fp(e as i64).try_inv().expect("p does not divide the exponent");

    let mut rows: Vec<(usize, Vec<Cyclotomic>)> = Vec::with_capacity(k);
    for w in spaces {
        let w0 = w[(0, 0)]
            .try_inv()
            .ok_or_else(|| Error::construction("eigenvector vanishes on the identity class"))?;
        let omega: Vec<Fp> = (0..k).map(|l| w[(l, 0)] * w0).collect();
        // d^2 = |G| / sum_l omega_l omega_{l'} / |C_l|
        let mut s = Fp::zero();
        for l in 0..k {
            s = s + omega[l] * omega[inv_class[l]] * fp(sizes[l] as i64).try_inv().expect("class size is a unit");
        }
        let d2 = fp(n as i64)
            * s.try_inv()
                .ok_or_else(|| Error::construction("degenerate central character"))?;
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| fp((d * d) as i64) == d2)
            .ok_or_else(|| Error::construction("no integral degree matches"))?;
        let chi_mod: Vec<Fp> = (0..k)
            .map(|l| omega[l] * fp(d as i64) * fp(sizes[l] as i64).try_inv().expect("unit"))
            .collect();
        let values = (0..k)
            .map(|l| {
                let x = cd.representative(l);
                let mut powers = vec![rat(0, 1); e];
                for (m, slot) in powers.iter_mut().enumerate() {
                    let mut acc = Fp::zero();
                    let mut gl = 0usize;
                    for step in 0..e {
                        let zl = z.pow(((e - m) * step % e) as u64);
                        acc = acc + chi_mod[cd.class_of[gl]] * zl;
                        gl = g.mul(gl, x);
                    }
                    *slot = rat((acc * e_inv).value() as i64, 1);
                }
                Cyclotomic::from_powers(e as u32, &powers)
            })
            .collect();
        rows.push((d, values));
    }
    rows.sort_by(|(da, va), (db, vb)| {
        let trivial = |v: &[Cyclotomic]| v.iter().all(|x| x.is_one());
        (da, !trivial(va), fmt_row(va)).cmp(&(db, !trivial(vb), fmt_row(vb)))
    });
    Ok(CharacterTable {
        class_representatives: (0..k).map(|l| cd.representative(l)).collect(),
        class_sizes: sizes,
        classes: cd,
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
        conductor: e as u32,
        prime: p,
    })
}

fn fmt_row(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalogue_group, GROUP_NAMES};

    fn orthogonality(g: &FiniteGroup, t: &CharacterTable) {
        let n = rat(g.order() as i64, 1);
        for a in 0..t.len() {
            for b in 0..t.len() {
                let mut s = Cyclotomic::zero();
                for x in 0..g.order() {
                    s = s + &(t.value(a, x).clone() * t.value(b, g.inv(x)));
                }
                let expect = if a == b {
                    Cyclotomic::from(n.clone())
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(s, expect, "{} rows {a},{b}", g.name());
            }
        }
        // columns
        let k = t.len();
        for c in 0..k {
            for c2 in 0..k {
                let mut s = Cyclotomic::zero();
                for i in 0..k {
                    s = s + &(t.values[i][c].clone() * &t.values[i][c2].conjugate());
                }
                let expect = if c == c2 {
                    Cyclotomic::from(rat((g.order() / t.class_sizes[c]) as i64, 1))
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(s, expect);
            }
        }
        let sq: usize = t.degrees.iter().map(|d| d * d).sum();
        assert_eq!(sq, g.order());
        for (i, d) in t.degrees.iter().enumerate() {
            assert_eq!(t.values[i][0], Cyclotomic::from(*d as i64));
        }
    }

    #[test]
    fn catalogue_tables_are_orthogonal() {
        for name in GROUP_NAMES {
            let g = catalogue_group(name).unwrap();
            let t = character_table(&g).unwrap();
            assert_eq!(t.len(), g.conjugacy_data().len(), "{name}");
            orthogonality(&g, &t);
        }
    }

    #[test]
    fn z2_table() {
        let t = character_table(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(t.values[0], vec![Cyclotomic::from(1), Cyclotomic::from(1)]);
        assert_eq!(t.values[1], vec![Cyclotomic::from(1), Cyclotomic::from(-1)]);
    }

    #[test]
    fn s3_degrees() {
        let t = character_table(&catalogue_group("S3").unwrap()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn z3_values_are_cube_roots() {
        let t = character_table(&FiniteGroup::cyclic(3)).unwrap();
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let mut nontrivial: Vec<Vec<Cyclotomic>> = t.values[1..].to_vec();
        nontrivial.sort_by_key(|r| r[1].to_string());
        let mut expect = vec![
            vec![Cyclotomic::from(1), w.clone(), w2.clone()],
            vec![Cyclotomic::from(1), w2, w],
        ];
        expect.sort_by_key(|r| r[1].to_string());
        assert_eq!(nontrivial, expect);
    }

    #[test]
    fn order_bound_is_a_resource_error() {
        let g = catalogue_group("S4").unwrap();
        assert!(matches!(character_table_bounded(&g, 12), Err(Error::Resource { .. })));
    }
}
