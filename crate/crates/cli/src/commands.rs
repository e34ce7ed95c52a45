use std::sync::Arc;

use equidouble_core::algebra::rational_to_string;
use equidouble_core::doubles::{
    check_graded_r_inverse, drinfeld_double, equivariant_double, restriction_check, trivial_extension, Double,
};
use equidouble_core::dw::{
    count_homs, dw_invariant, twisted_bundle_groupoid, twisted_cech_h1, twisted_sector, CoverNerve, Presentation,
    TwistHom,
};
use equidouble_core::groups::{
    catalogue_extension, catalogue_group, extension_to_weak_action, FiniteGroup, GroupExtension, EXTENSION_NAMES,
    GROUP_NAMES,
};
use equidouble_core::hopf::{
    check_antipode_antihomomorphism, check_hopf_axioms, check_jhopf_axioms, check_quasitriangular,
    check_ribbon_invertibility, AxiomReport,
};
use equidouble_core::modular::{
    check_equivariant_diagrams, check_r_matrix_consistency, modularity_verdict, s_matrix, s_matrix_from_characters,
    simples_of_double, Braiding, DiagramReport, GradedModule, DEFAULT_SMATRIX_BOUND,
};
use equidouble_core::orbifold::{
    center_dimension, double_simple_count, exact_sequence_check, psi_check, psi_setup, splitting_diagnostic,
    SplittingDiagnostic,
};
use equidouble_core::{Error, Rational, Result};
use serde_json::{json, Value};

use crate::{Command, Options, Outcome, SCHEMA_VERSION};

pub const PRESENTATION_NAMES: &[&str] = &["S3sphere", "S2xS1", "circle", "T2", "T3", "RP3", "Sigma_<g>"];
pub const NERVE_NAMES: &[&str] = &["circle3(j)", "disc3", "point"];

pub mod anchors {
    pub const DW: &str = "Z(M) = |Hom(pi_1(M), G)| / |G|";
    pub const DOUBLE: &str = "D(G): (δ_g⊗x)(δ_h⊗y) = δ_{g,xhx^-1} δ_g⊗xy, R = Σ δ_g⊗1 ⊗ 1⊗g, θ = Σ δ_g⊗g^-1";
    pub const JDOUBLE: &str = "D^J(G) = ⊕_j K(H_j)* ⊗ K[G], φ_j conjugation by s(j), c_ij = s(i)s(j)s(ij)^-1";
    pub const ORBIFOLD: &str = "Ψ: D^J(G)^J -> D(H), δ_h⊗g⊗j ↦ δ_h⊗g s(j)";
    pub const SMATRIX: &str = "s_XY = tr(c_{Y,X} c_{X,Y})";
    pub const SIMPLES: &str = "C_j ≅ [H_j//G, Vect]: simples indexed by (orbit, stabilizer irrep)";
    pub const CATEGORY: &str = "c_{V,W}(v⊗w) = s(j^-1)h.w ⊗ v, θ_V(v) = s(j^-1)h.v for v ∈ V_h, V of degree j";
    pub const CECH: &str = "g_ab ρ_{j_ab}(g_bc) c_{j_ab,j_bc} = g_ac modulo g_ab ↦ k_a g_ab ρ_{j_ab}(k_b)^-1";
    pub const SECTORS: &str = "H = ⊔_j H_j, sector j = H_j//G";
    pub const VERIFY_ALL: &str = "Hopf, J-Hopf, Ψ, J-braided diagrams and modularity for one extension";
    pub const CATALOGUE: &str = "built-in identifiers";
}

fn envelope(command: &str, anchor: &str, subject: &str, pass: bool, result: Value) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "anchor": anchor,
        "subject": subject,
        "pass": pass,
        "result": result,
    })
}

fn group(name: &str) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(catalogue_group(name)?))
}

fn extension(name: &str) -> Result<Arc<GroupExtension>> {
    Ok(Arc::new(catalogue_extension(name)?))
}

fn axioms(r: &AxiomReport) -> Value {
    serde_json::to_value(r).expect("serialisable report")
}

fn diagrams(r: &DiagramReport) -> Value {
    serde_json::to_value(r).expect("serialisable report")
}

fn admit_dim(dim: usize, opts: &Options, what: &str) -> Result<()> {
    if !opts.sampled && dim as u64 > opts.budget_dim {
        return Err(Error::Resource {
            what: format!("exhaustive axiom check of {what}"),
            needed: format!("dimension {dim}"),
            budget: format!("dimension {} (or pass --sampled)", opts.budget_dim),
        });
    }
    Ok(())
}

pub fn execute(command: &Command, opts: &Options) -> Result<Outcome> {
    match command {
        Command::Dw { presentation, group: g } => dw(presentation, g, opts),
        Command::Double { group: g } => double(g, opts),
        Command::Jdouble { extension: e } => jdouble(e, opts),
        Command::Orbifold { extension: e } => orbifold(e, opts),
        Command::Smatrix { group: g } => smatrix(g),
        Command::Simples { extension, group: g } => simples(extension.as_deref(), g.as_deref()),
        Command::VerifyCategory { extension: e } => verify_category(e),
        Command::VerifyAll { extension: e } => verify_all(e, opts),
        Command::Cech {
            extension: e,
            monodromy,
        } => cech(e, *monodromy, opts),
        Command::Sectors { extension: e } => sectors(e),
        Command::Catalogue => Ok(catalogue()),
    }
}

pub fn dw(presentation: &str, g: &str, opts: &Options) -> Result<Outcome> {
    let p = Presentation::named(presentation)?;
    let grp = group(g)?;
    let budget = opts.hom_budget();
    let homs = count_homs(&p, &grp, &budget)?;
    let z: Rational = dw_invariant(&p, &grp, &budget)?;
    let result = json!({
        "presentation": presentation,
        "group": g,
        "group_order": grp.order(),
        "hom_count": homs,
        "invariant": rational_to_string(&z),
    });
    Ok(Outcome {
        report: envelope("dw", anchors::DW, &format!("{presentation}, {g}"), true, result),
        pass: true,
    })
}

fn hopf_suite(d: &Double<Rational>, opts: &Options) -> AxiomReport {
    let mode = opts.check_mode();
    let mut r = check_hopf_axioms(&d.hopf, mode);
    r.extend(check_antipode_antihomomorphism(&d.hopf, mode));
    r.extend(check_ribbon_invertibility(&d.hopf, &d.ribbon));
    r
}

pub fn double(g: &str, opts: &Options) -> Result<Outcome> {
    let grp = group(g)?;
    admit_dim(grp.order() * grp.order(), opts, &format!("D({g})"))?;
    let d: Double<Rational> = drinfeld_double(&grp);
    let mut r = hopf_suite(&d, opts);
    r.extend(check_quasitriangular(&d.hopf, &d.ribbon.r, opts.check_mode()));
    let pass = r.all_pass();
    let result = json!({ "dimension": d.dim(), "axioms": axioms(&r) });
    Ok(Outcome {
        report: envelope("double", anchors::DOUBLE, g, pass, result),
        pass,
    })
}

pub fn jdouble_report(ext: &GroupExtension, opts: &Options) -> Result<(Value, bool)> {
    let d: Double<Rational> = equivariant_double(ext)?;
    admit_dim(d.dim(), opts, &format!("D^J for {}", ext.name()))?;
    let hopf = hopf_suite(&d, opts);
    let jhopf = check_jhopf_axioms(&d.hopf, &d.jdec, opts.check_mode());
    let graded_r = check_graded_r_inverse(&d);
    let restrictions = restriction_check(ext)?;
    let pass = hopf.all_pass() && jhopf.all_pass() && graded_r.all_pass() && restrictions;
    let result = json!({
        "dimension": d.dim(),
        "kernel_order": ext.g().order(),
        "quotient_order": ext.j().order(),
        "hopf": axioms(&hopf),
        "j_hopf": axioms(&jhopf),
        "graded_r_matrix": axioms(&graded_r),
        "restrictions_agree": restrictions,
    });
    Ok((result, pass))
}

pub fn jdouble(e: &str, opts: &Options) -> Result<Outcome> {
    let ext = extension(e)?;
    let (result, pass) = jdouble_report(&ext, opts)?;
    Ok(Outcome {
        report: envelope("jdouble", anchors::JDOUBLE, e, pass, result),
        pass,
    })
}

pub fn orbifold_report(ext: &GroupExtension, opts: &Options) -> Result<(Value, bool)> {
    let psi = psi_check(ext)?;
    let setup = psi_setup::<Rational>(ext)?;
    admit_dim(setup.orbifold.dim(), opts, &format!("orbifold for {}", ext.name()))?;
    let exact = exact_sequence_check(&setup.jdouble.hopf, &setup.orbifold);
    let center = center_dimension(&setup.orbifold.hopf);
    let simples_dh = double_simple_count(ext.h());
    let split = splitting_diagnostic(ext, opts.budget_homs);
    let split_value = match &split {
        SplittingDiagnostic::Found(g) => json!({ "found": g }),
        SplittingDiagnostic::Inconclusive { searched } => json!({ "inconclusive": { "searched": searched } }),
    };
    let pass = psi.all_pass() && exact.all_pass() && center == simples_dh;
    let result = json!({
        "dimension": setup.orbifold.dim(),
        "psi": serde_json::to_value(&psi).expect("serialisable"),
        "exact_sequence": axioms(&exact),
        "center_dimension": center,
        "simples_of_drinfeld_double_of_h": simples_dh,
        "hopf_splitting": split_value,
    });
    Ok((result, pass))
}

pub fn orbifold(e: &str, opts: &Options) -> Result<Outcome> {
    let ext = extension(e)?;
    let (result, pass) = orbifold_report(&ext, opts)?;
    Ok(Outcome {
        report: envelope("orbifold", anchors::ORBIFOLD, e, pass, result),
        pass,
    })
}

pub fn smatrix(g: &str) -> Result<Outcome> {
    let grp = group(g)?;
    let s = s_matrix(&grp, DEFAULT_SMATRIX_BOUND)?;
    let oracle = s_matrix_from_characters(&grp, DEFAULT_SMATRIX_BOUND)?;
    let agrees = oracle.labels == s.labels && oracle.entries == s.entries;
    let symmetric = s.is_symmetric();
    let det = s.determinant();
    let invertible = !num_traits::Zero::is_zero(&det);
    let pass = agrees && symmetric;
    let k = s.labels.len();
    let rows: Vec<Vec<String>> = (0..k)
        .map(|x| (0..k).map(|y| s.entries[(x, y)].to_string()).collect())
        .collect();
    let result = json!({
        "labels": s.labels,
        "entries": rows,
        "normalization": "raw traces; divide by |H| for the unitary normalisation",
        "group_order": s.group_order,
        "symmetric": symmetric,
        "determinant": det.to_string(),
        "invertible": invertible,
        "character_formula_agrees": agrees,
    });
    Ok(Outcome {
        report: envelope("smatrix", anchors::SMATRIX, g, pass, result),
        pass,
    })
}

fn module_summary(m: &GradedModule) -> Value {
    let h = m.ext().h();
    let support: Vec<Value> = m
        .graded_dims()
        .iter()
        .enumerate()
        .filter(|(_, d)| **d > 0)
        .map(|(x, d)| json!({ "h": h.label(x), "dim": d }))
        .collect();
    json!({
        "name": m.name,
        "degree": m.degree().map(|j| m.ext().j().label(j).to_string()),
        "dim": m.dim(),
        "support": support,
    })
}

pub fn simples(extension_name: Option<&str>, group_name: Option<&str>) -> Result<Outcome> {
    let (subject, ext) = match (extension_name, group_name) {
        (Some(e), None) => (e.to_string(), extension(e)?),
        (None, Some(g)) => (format!("D({g})"), Arc::new(trivial_extension(&*group(g)?))),
        _ => return Err(Error::Usage("pass exactly one of --extension or --group".into())),
    };
    let simples = simples_of_double(&ext)?;
    let square_sum: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
    let expect = ext.h().order() * ext.g().order();
    let pass = square_sum == expect;
    let result = json!({
        "count": simples.len(),
        "sum_of_squared_dimensions": square_sum,
        "h_times_g": expect,
        "simples": simples.iter().map(module_summary).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        report: envelope("simples", anchors::SIMPLES, &subject, pass, result),
        pass,
    })
}

pub fn category_report(ext: &Arc<GroupExtension>) -> Result<(Value, bool)> {
    let simples = simples_of_double(ext)?;
    let d = check_equivariant_diagrams(&simples, &Braiding::standard(ext))?;
    let r = check_r_matrix_consistency(&simples)?;
    let pass = d.all_pass() && r.all_pass();
    let result = json!({
        "simples": simples.len(),
        "diagrams": diagrams(&d),
        "r_matrix": diagrams(&r),
    });
    Ok((result, pass))
}

pub fn verify_category(e: &str) -> Result<Outcome> {
    let ext = extension(e)?;
    let (result, pass) = category_report(&ext)?;
    Ok(Outcome {
        report: envelope("verify-category", anchors::CATEGORY, e, pass, result),
        pass,
    })
}

pub fn verify_all(e: &str, opts: &Options) -> Result<Outcome> {
    let ext = extension(e)?;
    let ((jd, cat), (orb, verdict)) = rayon::join(
        || (jdouble_report(&ext, opts), category_report(&ext)),
        || {
            (
                orbifold_report(&ext, opts),
                modularity_verdict(&ext, DEFAULT_SMATRIX_BOUND),
            )
        },
    );
    let ((jd, jd_pass), (cat, cat_pass), (orb, orb_pass), verdict) = (jd?, cat?, orb?, verdict?);
    let pass = jd_pass && cat_pass && orb_pass && verdict.orbifold_modular && verdict.j_modular_claim;
    let result = json!({
        "jdouble": jd,
        "orbifold": orb,
        "category": cat,
        "modularity": serde_json::to_value(&verdict).expect("serialisable"),
    });
    Ok(Outcome {
        report: envelope("verify-all", anchors::VERIFY_ALL, e, pass, result),
        pass,
    })
}

fn orbit_profile(orbits: &[Vec<usize>], stab: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut v: Vec<usize> = orbits.iter().map(|o| stab(o[0])).collect();
    v.sort_unstable();
    v
}

pub fn cech(e: &str, monodromy: usize, opts: &Options) -> Result<Outcome> {
    let ext = extension(e)?;
    let jg = ext.j();
    if monodromy >= jg.order() {
        return Err(Error::Usage(format!(
            "monodromy index {monodromy} is outside J of order {}",
            jg.order()
        )));
    }
    let budget = opts.hom_budget();
    let wa = extension_to_weak_action(&ext)?;
    let classes = twisted_cech_h1(&CoverNerve::circle(jg, monodromy), &wa, &budget)?;
    let sector = twisted_sector(&ext, monodromy)?;
    let circle = Presentation::named("circle")?;
    let bundles = twisted_bundle_groupoid(&circle, &ext, &TwistHom::new(&circle, jg, vec![monodromy])?, &budget)?;
    let (so, bo) = (sector.orbits(), bundles.orbits());
    let sector_profile = orbit_profile(&so, |m| sector.stabilizer(m).len());
    let bundle_profile = orbit_profile(&bo, |m| bundles.stabilizer(m).len());
    let pass = classes.count == so.len() && bundle_profile == sector_profile;
    let result = json!({
        "monodromy": jg.label(monodromy),
        "cech_classes": classes.count,
        "sector_orbits": so.len(),
        "bundle_orbits": bo.len(),
        "sector_stabilizer_orders": sector_profile,
        "bundle_stabilizer_orders": bundle_profile,
    });
    Ok(Outcome {
        report: envelope(
            "cech",
            anchors::CECH,
            &format!("{e}, j = {}", jg.label(monodromy)),
            pass,
            result,
        ),
        pass,
    })
}

pub fn sectors(e: &str) -> Result<Outcome> {
    let ext = extension(e)?;
    let jg = ext.j();
    let mut out = Vec::new();
    for j in 0..jg.order() {
        let s = twisted_sector(&ext, j)?;
        let orbits = s.orbits();
        out.push(json!({
            "j": jg.label(j),
            "points": s.points(),
            "orbits": orbits.len(),
            "stabilizer_orders": orbit_profile(&orbits, |m| s.stabilizer(m).len()),
            "elements": ext.fiber(j).iter().map(|&h| ext.h().label(h).to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome {
        report: envelope("sectors", anchors::SECTORS, e, true, json!({ "sectors": out })),
        pass: true,
    })
}

pub fn catalogue() -> Outcome {
    let result = json!({
        "groups": GROUP_NAMES,
        "extensions": EXTENSION_NAMES,
        "presentations": PRESENTATION_NAMES,
        "nerves": NERVE_NAMES,
    });
    Outcome {
        report: envelope("catalogue", anchors::CATALOGUE, "catalogue", true, result),
        pass: true,
    }
}
