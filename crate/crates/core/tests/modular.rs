use std::sync::Arc;

use equidouble_core::groups::{catalogue_extension, catalogue_group, FiniteGroup};
use equidouble_core::modular::*;
use equidouble_core::Error;

fn ext(name: &str) -> Arc<equidouble_core::groups::GroupExtension> {
    Arc::new(catalogue_extension(name).unwrap())
}

#[test]
fn fusion_of_twisted_sectors_lands_in_neutral_sector() {
    let e = ext("A3-S3");
    let simples = simples_of_double(&e).unwrap();
    let t = simples.iter().find(|s| s.degree() == Some(1)).unwrap();
    let f = fuse(t, t).unwrap();
    assert_eq!(f.degree(), Some(0));
    assert_eq!(f.dim(), 9);
    let dims = f.graded_dims();
    assert_eq!(dims.iter().sum::<usize>(), 9);
}

#[test]
fn fusion_dims_convolve() {
    let e = ext("A3-S3");
    let simples = simples_of_double(&e).unwrap();
    let h = e.h();
    for a in &simples {
        for b in &simples {
            let f = fuse(a, b).unwrap();
            let mut conv = vec![0; h.order()];
            for (s, ds) in a.graded_dims().iter().enumerate() {
                for (t, dt) in b.graded_dims().iter().enumerate() {
                    conv[h.mul(s, t)] += ds * dt;
                }
            }
            assert_eq!(f.graded_dims(), conv);
        }
    }
}

#[test]
fn compositors_are_module_maps() {
    for name in ["A3-S3", "Z2-Z4", "V4-A4"] {
        let e = ext(name);
        let jg = e.j().clone();
        for v in simples_of_double(&e).unwrap() {
            for i in 0..jg.order() {
                for j in 0..jg.order() {
                    let src = j_act(i, &j_act(j, &v));
                    let tgt = j_act(jg.mul(i, j), &v);
                    assert!(
                        is_module_map(&src, &tgt, &compositor(i, j, &v)),
                        "{name} {i} {j} {}",
                        v.name
                    );
                }
            }
        }
    }
}

#[test]
fn braid_rejects_inhomogeneous() {
    let e = ext("A3-S3");
    let simples = simples_of_double(&e).unwrap();
    let t = simples.iter().find(|s| s.degree() == Some(1)).unwrap();
    let mixed = simples[0].direct_sum(t).unwrap();
    assert!(matches!(braid(&mixed, t), Err(Error::Usage(_))));
    assert!(matches!(twist(&mixed), Err(Error::Usage(_))));
    let parts = mixed.split_by_degree();
    assert_eq!(parts.len(), 2);
    assert!(braid(&parts[1].1, t).is_ok());
}

#[test]
fn fuse_rejects_mismatched_extensions() {
    let a = GradedModule::unit(ext("A3-S3"));
    let b = GradedModule::unit(ext("Z2-Z4"));
    assert!(matches!(fuse(&a, &b), Err(Error::Usage(_))));
}

#[test]
fn twisted_sector_twist_has_finite_order() {
    let e = ext("A3-S3");
    let simples = simples_of_double(&e).unwrap();
    let t = simples.iter().find(|s| s.degree() == Some(1)).unwrap();
    let th = twist(t).unwrap();
    let jt = j_act(1, t);
    // ^j(^j V) -> V closes the loop: θ twice, corrected by the compositor
    let th2 = twist(&jt).unwrap().matmul(&th).unwrap();
    let round = compositor(1, 1, t).matmul(&th2).unwrap();
    let mut p = round.clone();
    let mut k = 1;
    while !p.is_identity() {
        p = p.matmul(&round).unwrap();
        k += 1;
        assert!(k <= 12);
    }
}

#[test]
fn diagrams_for_drinfeld_double_of_s3() {
    let e = Arc::new(equidouble_core::doubles::trivial_extension(
        &catalogue_group("S3").unwrap(),
    ));
    let simples = simples_of_double(&e).unwrap();
    assert!(check_equivariant_diagrams(&simples, &Braiding::standard(&e))
        .unwrap()
        .all_pass());
    assert!(check_r_matrix_consistency(&simples).unwrap().all_pass());
}

#[test]
fn diagrams_for_v4_a4() {
    let e = ext("V4-A4");
    let simples = simples_of_double(&e).unwrap();
    assert!(check_equivariant_diagrams(&simples, &Braiding::standard(&e))
        .unwrap()
        .all_pass());
}

#[test]
fn negative_control_literal_section_v4_a4() {
    // s(j^{-1}) replaced by s(j); J = Z3 so the two differ
    let e = ext("V4-A4");
    let simples = simples_of_double(&e).unwrap();
    let shift = (0..e.j().order()).map(|j| e.s(j)).collect();
    let rep = check_equivariant_diagrams(&simples, &Braiding { shift }).unwrap();
    let ab = rep.get("action_braiding_compatibility").unwrap();
    assert!(!ab.pass());
    assert!(!ab.witness.is_empty());
}

#[test]
fn negative_control_shifted_fibre_a3_s3() {
    // J = Z2: s(j) = s(j^{-1}), so perturb by a 3-cycle instead
    let e = ext("A3-S3");
    let simples = simples_of_double(&e).unwrap();
    let mut br = Braiding::standard(&e);
    br.shift[1] = e.h().mul(br.shift[1], e.g_in_h(1));
    let rep = check_equivariant_diagrams(&simples, &br).unwrap();
    assert!(!rep.get("action_braiding_compatibility").unwrap().pass());
    assert!(!rep.get("twist_braiding").unwrap().pass());
}

#[test]
fn s_matrix_z4_and_verdict_z2_z4() {
    let s = s_matrix(&FiniteGroup::cyclic(4), DEFAULT_SMATRIX_BOUND).unwrap();
    assert_eq!(s.labels.len(), 16);
    assert!(s.is_symmetric() && s.is_invertible());
    let v = modularity_verdict(&catalogue_extension("Z2-Z4").unwrap(), DEFAULT_SMATRIX_BOUND).unwrap();
    assert!(v.orbifold_modular && v.j_modular_claim && v.psi_isomorphism);
    assert_eq!(v.s_matrix_size, 16);
}

#[test]
fn s_matrix_bound_is_a_resource_error() {
    let g = catalogue_group("S4").unwrap();
    assert!(matches!(s_matrix(&g, 12), Err(Error::Resource { .. })));
}

#[test]
fn unit_row_is_quantum_dimensions() {
    let s = s_matrix(&catalogue_group("S3").unwrap(), DEFAULT_SMATRIX_BOUND).unwrap();
    assert_eq!(s.entries[(0, 0)], equidouble_core::Cyclotomic::from(1));
    let simples = simples_of_drinfeld_double(&catalogue_group("S3").unwrap()).unwrap();
    for (x, q) in unit_row(&s).iter().enumerate() {
        assert_eq!(*q, equidouble_core::Cyclotomic::from(simples[x].dim() as i64));
    }
}
