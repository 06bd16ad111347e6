//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cptgroups::cpt_models::fixtures::{self, CharTableFixture, IrrepTableFixture};
use cptgroups::cpt_models::{
    build_d4, build_d4_x_z2, build_g_psi_eq, build_g_psi_hat, build_z2, build_z2_cubed,
    derive_g_a_from_field_action, irreps_g_a, irreps_g_psi_eq, irreps_g_psi_hat,
    named_constructive_table, named_group, named_irreps, verify_paper, CptGroup, CptLabel,
    NamedIrrep, Verdict, CONSTRUCTIVE_IDS, GROUP_IDS,
};
use cptgroups::exact_arith::{CMatrix, Cyclotomic};
use cptgroups::group_core::{
    embeds, is_isomorphic, semidirect_product, subgroups_of_order, verify_hom, ActionTable,
    ElementId, FiniteGroup, SemidirectProduct,
};
use cptgroups::repr_theory::{
    are_equivalent, character_of, character_table, check_orthogonality, tables_match,
    value_tables_match, CharacterTable, Representation, ValueTable,
};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cell(s: &str) -> Option<CMatrix> {
    if s.contains(',') {
        CMatrix::parse(s).ok()
    } else {
        s.parse::<Cyclotomic>().ok().map(CMatrix::scalar)
    }
}

fn find<'a>(set: &'a [NamedIrrep], name: &str) -> Result<&'a NamedIrrep, String> {
    set.iter().find(|r| r.name == name).ok_or_else(|| format!("no irrep {name}"))
}

/// Characters of `irreps` (in order) against the fixture rows, read at class representatives.
fn characters_match(fx: &CharTableFixture, g: &FiniteGroup, irreps: &[NamedIrrep]) -> Check {
    ensure(irreps.len() == fx.rows.len(), || format!("{} irreps for {} rows", irreps.len(), fx.rows.len()))?;
    for ((name, row), rep) in fx.rows.iter().zip(irreps) {
        let chi = character_of(&rep.rep);
        for (label, printed) in fx.class_labels.iter().zip(row.iter()) {
            let x = g.find(label).ok_or_else(|| format!("no element {label}"))?;
            let want: Cyclotomic = printed.parse().map_err(err)?;
            ensure(chi.at(x) == &want, || format!("{name}({label}) = {} but expected {printed}", chi.at(x)))?;
        }
    }
    Ok(())
}

/// Matrices of the named rows against the fixture. A cell may differ from print only where a
/// documented defect names it and the computed matrix equals the correction.
fn matrices_match(fx: &IrrepTableFixture, cpt: &CptGroup, irreps: &[NamedIrrep], rows: &[&str]) -> Check {
    for (name, row) in fx.rows.iter().filter(|(n, _)| rows.contains(n)) {
        let rep = find(irreps, name)?;
        for ((label, _), printed) in fx.columns.iter().zip(row.iter()) {
            let x = cpt.element_str(label).map_err(err)?;
            let computed = rep.rep.matrix(x);
            if cell(printed).as_ref() == Some(computed) {
                continue;
            }
            let documented = fixtures::DEFECTS.iter().any(|d| {
                d.fixture == fx.id
                    && d.row == *name
                    && d.columns.contains(label)
                    && d.printed == *printed
                    && cell(d.corrected).as_ref() == Some(computed)
            });
            ensure(documented, || format!("{name} at {label}: printed {printed}, computed {computed}"))?;
        }
    }
    Ok(())
}

fn table_q() -> Check {
    let fx = &fixtures::Q_CHARACTERS;
    let q = named_group("Q").map_err(err)?;
    let dixon = character_table(&q).map_err(err)?;
    let printed = ValueTable::parse(fx.class_labels, fx.class_sizes, fx.rows).map_err(err)?;
    ensure(value_tables_match(&printed, &dixon.value_table()).is_some(), || "Dixon table of Q differs".into())
}

fn table_g_psi_hat() -> Check {
    let hat = build_g_psi_hat().map_err(err)?;
    let irreps = irreps_g_psi_hat().map_err(err)?;
    let dims: Vec<usize> = irreps.iter().map(|r| r.rep.dim()).collect();
    ensure(dims == [1, 1, 1, 1, 1, 1, 1, 1, 2, 2], || format!("dims {dims:?}"))?;
    characters_match(&fixtures::G_PSI_HAT_CHARACTERS, &hat.cpt.group, &irreps)?;
    matrices_match(&fixtures::G_PSI_HAT_IRREPS, &hat.cpt, &irreps, &["φ9", "φ10"])
}

fn table_g_a() -> Check {
    let a = cptgroups::cpt_models::build_g_a().map_err(err)?;
    let irreps = irreps_g_a().map_err(err)?;
    ensure(irreps.len() == 8 && irreps.iter().all(|r| r.rep.dim() == 1), || "expected 8 linear irreps".into())?;
    let fx = &fixtures::G_A_IRREPS;
    let names: Vec<&str> = fx.rows.iter().map(|(n, _)| *n).collect();
    matrices_match(fx, &a.cpt, &irreps, &names)
}

fn table_g_psi_eq() -> Check {
    let eq = build_g_psi_eq().map_err(err)?;
    let irreps = irreps_g_psi_eq().map_err(err)?;
    let g = irreps[0].rep.group().clone();
    characters_match(&fixtures::G_PSI_EQ_CHARACTERS, &g, &irreps)?;
    let t = g.find("T").ok_or("no T")?;
    let two_i = Cyclotomic::gaussian(0, 2);
    ensure(character_of(&find(&irreps, "φ9")?.rep).at(t) == &two_i, || "χ9(T) ≠ 2i".into())?;
    ensure(character_of(&find(&irreps, "φ10")?.rep).at(t) == &-two_i.clone(), || "χ10(T) ≠ −2i".into())?;
    let names: Vec<&str> = fixtures::G_PSI_EQ_IRREPS.rows.iter().map(|(n, _)| *n).collect();
    matrices_match(&fixtures::G_PSI_EQ_IRREPS, &eq.cpt, &irreps, &names)
}

fn dixon_cross_check() -> Check {
    for id in CONSTRUCTIVE_IDS {
        let constructive = named_constructive_table(id).map_err(err)?;
        let dixon = character_table(constructive.group()).map_err(err)?;
        ensure(tables_match(&constructive, &dixon).is_some(), || format!("{id}: tables differ"))?;
    }
    Ok(())
}

fn qed_counts() -> Check {
    let g = named_group("G_QED").map_err(err)?;
    let table = character_table(&g).map_err(err)?;
    let dims = table.dims();
    let ones = dims.iter().filter(|&&d| d == 1).count();
    let twos = dims.iter().filter(|&&d| d == 2).count();
    ensure(
        g.order() == 128 && g.class_count() == 80 && dims.len() == 80 && ones == 64 && twos == 16,
        || format!("order {}, {} classes, {} characters, {ones} linear, {twos} of degree 2", g.order(), g.class_count(), dims.len()),
    )
}

fn isocharacteral_pair() -> Check {
    let a = named_group("G_psi_hat").map_err(err)?;
    let b = build_d4_x_z2().map_err(err)?;
    let same = tables_match(&character_table(&a).map_err(err)?, &character_table(&b).map_err(err)?).is_some();
    ensure(same, || "tables differ".into())?;
    ensure(is_isomorphic(&a, &b).is_none(), || "found an isomorphism".into())
}

fn cpt_set(cpt: &CptGroup, xs: &[ElementId]) -> BTreeSet<String> {
    xs.iter().map(|&x| cpt.cpt_label(x).with_hat(false).to_string()).collect()
}

fn subgroup_claims() -> Check {
    let hat = build_g_psi_hat().map_err(err)?;
    let eq = build_g_psi_eq().map_err(err)?;
    let z3 = build_z2_cubed();
    ensure(embeds(&z3, &hat.cpt.group).is_none(), || "Z₂³ embeds in Q×Z₂".into())?;
    ensure(embeds(&z3, &eq.cpt.group).is_none(), || "Z₂³ embeds in D₄⋊Z₂".into())?;
    let hat_z2: BTreeSet<BTreeSet<String>> =
        subgroups_of_order(&hat.cpt.group, 2).iter().map(|s| cpt_set(&hat.cpt, s)).collect();
    let want: BTreeSet<BTreeSet<String>> = [["I", "-I"], ["I", "C"], ["I", "-C"]]
        .iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect();
    ensure(hat_z2 == want, || format!("Q×Z₂ order-2 subgroups: {hat_z2:?}"))?;
    let eq_z2: Vec<BTreeSet<String>> = subgroups_of_order(&eq.cpt.group, 2).iter().map(|s| cpt_set(&eq.cpt, s)).collect();
    for pair in fixtures::G_PSI_EQ_LISTED_Z2 {
        let s: BTreeSet<String> = pair.iter().map(|x| x.to_string()).collect();
        ensure(eq_z2.contains(&s), || format!("missing {s:?}"))?;
    }
    Ok(())
}

/// Trace as a function of the CPT label (hats dropped).
fn label_character(cpt: &CptGroup, rep: &Representation) -> Vec<(CptLabel, Cyclotomic)> {
    let mut v: Vec<_> = cpt
        .group
        .elements()
        .map(|x| (cpt.cpt_label(x).with_hat(false), rep.matrix(x).trace().expect("square")))
        .collect();
    v.sort_by_key(|a| a.0);
    v
}

fn equivalence_claims() -> Check {
    let hat = build_g_psi_hat().map_err(err)?;
    let eq = build_g_psi_eq().map_err(err)?;
    let hi = irreps_g_psi_hat().map_err(err)?;
    let ei = irreps_g_psi_eq().map_err(err)?;
    for set in [&hi, &ei] {
        let e = are_equivalent(&find(set, "φ9")?.rep, &find(set, "φ10")?.rep).map_err(err)?;
        ensure(!e, || "φ9 ≅ φ10".into())?;
    }
    for (l, r) in fixtures::ONE_DIM_IDENTIFICATIONS {
        let same = label_character(&hat.cpt, &find(&hi, l)?.rep) == label_character(&eq.cpt, &find(&ei, r)?.rep);
        ensure(same, || format!("{l} ≠ {r}"))?;
    }
    for l in ["φ9", "φ10"] {
        for r in ["φ9", "φ10"] {
            let same = label_character(&hat.cpt, &find(&hi, l)?.rep) == label_character(&eq.cpt, &find(&ei, r)?.rep);
            ensure(!same, || format!("{l} (Q×Z₂) matches {r} (D₄⋊Z₂)"))?;
        }
    }
    Ok(())
}

fn field_action() -> Check {
    let (g, hom) = derive_g_a_from_field_action().map_err(err)?;
    ensure(g.order() == 8, || format!("closure of order {}", g.order()))?;
    ensure(g.generators().len() == 3, || "expected three generators".into())?;
    let report = verify_hom(&hom);
    ensure(report.is_hom() && report.injective && report.surjective, || "map is not an isomorphism".into())?;
    let z = build_z2_cubed();
    let images: Vec<ElementId> = g.generators().iter().map(|&x| hom.apply(x)).collect();
    ensure(images == z.generators(), || "C, P, T do not map to a1, a2, a3".into())
}

/// Exhaustive inverse law `(n,h)⁻¹ = (λ(h⁻¹)(n⁻¹), h⁻¹)`.
fn inverse_law(p: &SemidirectProduct, n: &FiniteGroup, h: &FiniteGroup, action: &ActionTable) -> bool {
    p.group.elements().all(|x| {
        let (a, b) = (ElementId(x.0 / h.order()), ElementId(x.0 % h.order()));
        let hi = h.inv(b);
        p.group.inv(x) == p.pair(action.act(hi, n.inv(a)), hi)
    })
}

fn property_suites() -> Check {
    let mut tables: Vec<(String, CharacterTable)> = Vec::new();
    for id in GROUP_IDS {
        let g = named_group(id).map_err(err)?;
        tables.push((format!("{id} (Dixon)"), character_table(&g).map_err(err)?));
    }
    for id in CONSTRUCTIVE_IDS {
        tables.push((format!("{id} (constructive)"), named_constructive_table(id).map_err(err)?));
    }
    for (name, t) in &tables {
        check_orthogonality(t.group(), t.rows()).map_err(|e| format!("{name}: {e}"))?;
        let sum: usize = t.dims().iter().map(|d| d * d).sum();
        ensure(sum == t.group().order(), || format!("{name}: Σdim² = {sum}"))?;
    }
    for id in CONSTRUCTIVE_IDS {
        for r in named_irreps(id).map_err(err)? {
            ensure(r.rep.violations().is_empty(), || format!("{id} {}: not a homomorphism", r.name))?;
        }
    }
    let eq = build_g_psi_eq().map_err(err)?;
    ensure(inverse_law(&eq.product, &eq.d4, &eq.z2, &eq.action), || "D₄⋊Z₂ inverse law".into())?;
    let (d4, z2) = (build_d4(), build_z2());
    let trivial = ActionTable::trivial(z2.clone(), d4.clone());
    let p = semidirect_product(&d4, &z2, &trivial).map_err(err)?;
    ensure(inverse_law(&p, &d4, &z2, &trivial), || "trivial-action inverse law".into())
}

fn verifier_contract() -> Check {
    let report = verify_paper();
    let mismatches: Vec<String> =
        report.mismatches().iter().map(|f| format!("{} {}", f.fixture, f.location)).collect();
    ensure(mismatches.is_empty(), || format!("mismatches: {mismatches:?}"))?;
    let got: BTreeSet<&str> = report
        .findings
        .iter()
        .filter(|f| f.verdict == Verdict::PaperDefectConfirmed)
        .filter_map(|f| f.defect.as_deref())
        .collect();
    let want: BTreeSet<&str> = fixtures::DEFECTS.iter().map(|d| d.id).collect();
    ensure(report.confirmed_defects().len() == want.len() && got == want, || format!("confirmed defects {got:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("character table of Q", table_q),
        ("irreps and characters of Q×Z₂", table_g_psi_hat),
        ("linear irreps of Z₂³", table_g_a),
        ("irreps and characters of D₄⋊Z₂", table_g_psi_eq),
        ("Dixon tables equal constructive tables", dixon_cross_check),
        ("order-128 group counts", qed_counts),
        ("Q×Z₂ and D₄×Z₂ share a table but are not isomorphic", isocharacteral_pair),
        ("embeddings and order-2 subgroups", subgroup_claims),
        ("equivalence and identification of irreps", equivalence_claims),
        ("field-action closure is Z₂³", field_action),
        ("orthogonality, homomorphism and inverse-law suites", property_suites),
        ("verifier reports only documented defects", verifier_contract),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2}  {name}", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {e}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
