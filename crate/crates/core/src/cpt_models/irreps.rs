use crate::error::{Error, Result};
use crate::exact_arith::{CMatrix, Cyclotomic};
use crate::group_core::{quotient_group, ElementId, FiniteGroup};
use crate::repr_theory::{
    character_of, complete_by_orthogonality, pullback_rep, tensor_product_rep, Character,
    CharacterTable, PartialTable, Provenance, Representation,
};

use super::fixtures;
use super::groups::{build_g_a, build_g_psi_eq, build_g_psi_hat, build_qed_group, build_quaternion};

/// An irreducible representation with its conventional name and how it was obtained.
#[derive(Clone, Debug)]
pub struct NamedIrrep {
    pub name: String,
    pub rep: Representation,
    pub provenance: Provenance,
}

impl NamedIrrep {
    fn constructive(name: impl Into<String>, rep: Representation) -> Self {
        NamedIrrep { name: name.into(), rep, provenance: Provenance::Constructive }
    }
}

fn sign(v: i64) -> CMatrix {
    CMatrix::scalar(Cyclotomic::from_i64(v))
}

fn parse_i64(s: &str) -> Result<i64> {
    s.parse::<i64>().map_err(|_| Error::Parse(s.to_string()))
}

/// The five irreps of Q: four sign characters read off the reference table, and the
/// pinned two-dimensional one.
pub fn irreps_q(q: &FiniteGroup) -> Result<Vec<NamedIrrep>> {
    let t = fixtures::Q_CHARACTERS;
    let col = |label: &str| t.class_labels.iter().position(|l| *l == label).expect("fixture column");
    let gens: Vec<&str> = q.generators().iter().map(|&g| q.label(g)).collect();
    let mut out = Vec::new();
    for (name, row) in &t.rows[..4] {
        let images = gens
            .iter()
            .map(|g| Ok(sign(parse_i64(row[col(g)])?)))
            .collect::<Result<Vec<_>>>()?;
        out.push(NamedIrrep::constructive(*name, Representation::from_generator_images(q, &images)?));
    }
    let pinned = |g: &str| match g {
        "ι" => CMatrix::parse(fixtures::Q_TWO_DIM_IOTA),
        "γ" => CMatrix::parse(fixtures::Q_TWO_DIM_GAMMA),
        "κ" => CMatrix::parse(fixtures::Q_TWO_DIM_KAPPA),
        other => Err(Error::Parse(other.to_string())),
    };
    let images = gens.iter().map(|g| pinned(g)).collect::<Result<Vec<_>>>()?;
    let two = Representation::from_generator_images(q, &images)?;
    let kappa = q.find("κ").ok_or_else(|| Error::Parse("κ".into()))?;
    if *two.matrix(kappa) != pinned("κ")? {
        return Err(Error::InvalidRepresentation("pinned κ matrix disagrees with ιγ".into()));
    }
    out.push(NamedIrrep::constructive(t.rows[4].0, two));
    Ok(out)
}

/// ψ1 (trivial) and ψ2 (sign) of Z₂.
fn irreps_z2(z2: &FiniteGroup) -> Result<Vec<Representation>> {
    Ok(vec![
        Representation::trivial(z2),
        Representation::from_generator_images(z2, &[sign(-1)])?,
    ])
}

/// φ1..φ10 of Q × Z₂: `φ_{2α−1} = ϕ_α⊗ψ1`, `φ_{2α} = ϕ_α⊗ψ2`, then `φ9 = ϕ5⊗ψ1`, `φ10 = ϕ5⊗ψ2`.
pub fn irreps_g_psi_hat() -> Result<Vec<NamedIrrep>> {
    let h = build_g_psi_hat()?;
    let q = irreps_q(&h.q)?;
    let z = irreps_z2(&h.z2)?;
    let mut out = Vec::new();
    for (a, phi) in q.iter().enumerate() {
        for (b, psi) in z.iter().enumerate() {
            let rep = tensor_product_rep(&phi.rep, psi, &h.product)?;
            out.push(NamedIrrep::constructive(format!("φ{}", 2 * a + b + 1), rep));
        }
    }
    Ok(out)
}

/// Φ1..Φ8 of Z₂³ as products `ψ_i ψ_j ψ_k`.
pub fn irreps_g_a() -> Result<Vec<NamedIrrep>> {
    let a = build_g_a()?;
    fixtures::G_A_ROW_INDICES
        .iter()
        .enumerate()
        .map(|(k, ijk)| {
            let images: Vec<CMatrix> = ijk.iter().map(|&i| sign(if i == 2 { -1 } else { 1 })).collect();
            let rep = Representation::from_generator_images(&a.cpt.group, &images)?;
            Ok(NamedIrrep::constructive(format!("Φ{}", k + 1), rep))
        })
        .collect()
}

fn labelled_rep(g: &FiniteGroup, rep: &Representation) -> Result<Representation> {
    Representation::new(g.clone(), rep.matrices().to_vec())
}

/// φ1..φ10 of D₄ ⋊ Z₂, on the CPT-labelled group.
///
/// φ2..φ4 are lifted from the three index-2 quotients, φ9 and φ10 extend the
/// two-dimensional irrep of D₄ by each choice of the image of C, and φ5..φ8 are the
/// remaining rows forced by column orthogonality, numbered as in the reference table.
pub fn irreps_g_psi_eq() -> Result<Vec<NamedIrrep>> {
    let e = build_g_psi_eq()?;
    let g = &e.cpt.group;
    let labelled = e.cpt.with_cpt_labels()?;
    let elem = |s: &str| e.cpt.element_str(s);

    let mut lifted = Vec::new();
    for (name, seeds) in [
        ("D4", vec![elem("P")?, elem("CT")?]),
        ("C4xZ2", vec![elem("P")?, elem("T")?]),
        ("Q", vec![elem("C")?, elem("P")?]),
    ] {
        let sub = g.closure(&seeds);
        if sub.len() != 8 {
            return Err(Error::NotSubgroup(format!("{name} has order {}", sub.len())));
        }
        let (quot, proj) = quotient_group(g, &sub)?;
        let values = quot.elements().map(|x| Cyclotomic::from_i64(if x == quot.identity() { 1 } else { -1 }));
        let sign_rep = Representation::from_linear_character(&quot, values.collect())?;
        lifted.push(pullback_rep(&sign_rep, &proj)?);
    }

    let two_dim = |name: &str| -> Result<CMatrix> {
        fixtures::D4_TWO_DIM
            .iter()
            .find(|(l, _)| *l == name)
            .ok_or_else(|| Error::Parse(name.to_string()))
            .and_then(|(_, m)| CMatrix::parse(m))
    };
    let d4_matrix = |n: ElementId| two_dim(e.d4_words.label(e.d4_relabel.apply(n)));
    let c = elem("C")?;
    let c_normal = e.d4.find(split_normal(g.label(c))?).ok_or_else(|| Error::Parse("C".into()))?;
    let mut two = Vec::new();
    for (name, c_image) in fixtures::G_PSI_EQ_C_CHOICES {
        // C = (n_C, −1) = (n_C, 1)·(I, −1), so ρ(I, −1) = ρ(n_C)⁻¹ ρ(C)
        let flip = d4_matrix(c_normal)?.inverse()?.mat_mul(&CMatrix::parse(c_image)?)?;
        let images = g
            .generators()
            .iter()
            .map(|&s| {
                // (n, h) = (n, 1)·(I, h)
                let h = e.product.projection.apply(s);
                let n = ElementId(s.0 / e.z2.order());
                let m = d4_matrix(n)?;
                if h == e.z2.identity() {
                    Ok(m)
                } else {
                    m.mat_mul(&flip)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        two.push((*name, Representation::from_generator_images(g, &images)?));
    }

    let trivial = Representation::trivial(g);
    let known_reps: Vec<&Representation> =
        [&trivial].into_iter().chain(&lifted).chain(two.iter().map(|(_, r)| r)).collect();
    let partial = PartialTable {
        group: g.clone(),
        known: known_reps.iter().map(|r| character_of(r)).collect(),
        provenance: vec![Provenance::Constructive; known_reps.len()],
    };
    let table = complete_by_orthogonality(&partial)?;
    let completed: Vec<&Character> = table
        .rows()
        .iter()
        .zip(table.provenance())
        .filter(|(_, p)| **p == Provenance::OrthogonalityCompletion)
        .map(|(r, _)| r)
        .collect();

    let mut out = vec![NamedIrrep::constructive("φ1", labelled_rep(&labelled, &trivial)?)];
    for (k, rep) in lifted.iter().enumerate() {
        out.push(NamedIrrep::constructive(format!("φ{}", k + 2), labelled_rep(&labelled, rep)?));
    }
    // φ5..φ8 carry the numbering of the matching rows χ5..χ8 of the reference character table
    let reference = &fixtures::G_PSI_EQ_CHARACTERS;
    for k in 4..8 {
        let (_, expected) = reference.rows[k];
        let chi = completed
            .iter()
            .find(|chi| {
                reference.class_labels.iter().zip(expected.iter()).all(|(cls, v)| {
                    labelled
                        .find(cls)
                        .map(|x| chi.at(x).as_i64() == v.parse::<i64>().ok())
                        .unwrap_or(false)
                })
            })
            .ok_or_else(|| Error::Completion(format!("no completed row matches χ{}", k + 1)))?;
        let values = labelled.elements().map(|x| chi.at(x).clone()).collect();
        out.push(NamedIrrep {
            name: format!("φ{}", k + 1),
            rep: Representation::from_linear_character(&labelled, values)?,
            provenance: Provenance::OrthogonalityCompletion,
        });
    }
    for (name, rep) in two {
        out.push(NamedIrrep::constructive(name, labelled_rep(&labelled, &rep)?));
    }
    Ok(out)
}

/// The D₄ component of a structural label `(perm,±1)`.
fn split_normal(label: &str) -> Result<&str> {
    super::groups::split_pair(label).map(|(n, _)| n)
}

/// The 80 irreps of the QED group as `φ_i ⊗ Φ_j`.
pub fn irreps_qed() -> Result<Vec<NamedIrrep>> {
    let qed = build_qed_group()?;
    let psi = irreps_g_psi_hat()?;
    let a = irreps_g_a()?;
    let mut out = Vec::with_capacity(psi.len() * a.len());
    for p in &psi {
        for q in &a {
            let rep = tensor_product_rep(&p.rep, &q.rep, &qed.product)?;
            out.push(NamedIrrep::constructive(format!("{}⊗{}", p.name, q.name), rep));
        }
    }
    Ok(out)
}

/// Constructive irreps of a named group, where a construction exists.
pub fn named_irreps(id: &str) -> Result<Vec<NamedIrrep>> {
    match id {
        "Q" => irreps_q(&build_quaternion()),
        "G_psi_hat" => irreps_g_psi_hat(),
        "G_A" => irreps_g_a(),
        "G_psi_eq" => irreps_g_psi_eq(),
        "G_QED" => irreps_qed(),
        other => Err(Error::UnknownGroup(format!("{other} (no constructive irreps)"))),
    }
}

/// Named groups with constructive irreps.
pub const CONSTRUCTIVE_IDS: &[&str] = &["Q", "G_psi_hat", "G_A", "G_psi_eq", "G_QED"];

/// The character table assembled from constructive irreps, rows in construction order.
pub fn constructive_table(irreps: &[NamedIrrep], row_prefix: &str) -> Result<CharacterTable> {
    let g = irreps
        .first()
        .map(|r| r.rep.group().clone())
        .ok_or_else(|| Error::InvalidTable("no irreps".into()))?;
    let rows = irreps.iter().map(|r| character_of(&r.rep)).collect();
    let provenance = irreps.iter().map(|r| r.provenance).collect();
    let names = irreps
        .iter()
        .map(|r| match r.name.strip_prefix('φ').or_else(|| r.name.strip_prefix('Φ')) {
            Some(k) if !row_prefix.is_empty() && k.chars().all(|c| c.is_ascii_digit()) => {
                format!("{row_prefix}{k}")
            }
            _ => r.name.clone(),
        })
        .collect();
    CharacterTable::new(&g, rows, provenance)?.with_row_names(names)
}

/// Constructive character table of a named group, with the reference row names.
pub fn named_constructive_table(id: &str) -> Result<CharacterTable> {
    let prefix = match id {
        "G_psi_hat" => "λ",
        "G_A" => "Φ",
        "G_psi_eq" => "χ",
        _ => "",
    };
    constructive_table(&named_irreps(id)?, prefix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr_theory::is_irreducible;

    #[test]
    fn q_irreps_are_irreducible() {
        let q = build_quaternion();
        let reps = irreps_q(&q).unwrap();
        assert_eq!(reps.len(), 5);
        assert!(reps.iter().all(|r| is_irreducible(&r.rep)));
    }

    #[test]
    fn hat_family() {
        let reps = irreps_g_psi_hat().unwrap();
        assert_eq!(reps.len(), 10);
        let h = build_g_psi_hat().unwrap();
        let p = h.cpt.element_str("P̂").unwrap();
        let t = h.cpt.element_str("T̂").unwrap();
        let c = h.cpt.element_str("Ĉ").unwrap();
        assert_eq!(*reps[8].rep.matrix(p), CMatrix::parse("i,0;0,-i").unwrap());
        assert_eq!(*reps[8].rep.matrix(t), CMatrix::parse("0,1;-1,0").unwrap());
        assert_eq!(*reps[1].rep.matrix(c), sign(-1));
        assert!(reps.iter().all(|r| is_irreducible(&r.rep) && r.rep.violations().is_empty()));
    }

    #[test]
    fn eq_family() {
        let reps = irreps_g_psi_eq().unwrap();
        assert_eq!(reps.len(), 10);
        let g = reps[0].rep.group().clone();
        let at = |k: usize, l: &str| reps[k].rep.matrix(g.find(l).unwrap()).clone();
        assert_eq!(at(8, "C"), CMatrix::parse("0,i;i,0").unwrap());
        assert_eq!(at(8, "T"), CMatrix::parse("i,0;0,i").unwrap());
        assert_eq!(at(9, "-CT"), CMatrix::parse("0,1;1,0").unwrap());
        assert!(reps.iter().all(|r| is_irreducible(&r.rep)));
        let names: Vec<&str> = reps.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["φ1", "φ2", "φ3", "φ4", "φ5", "φ6", "φ7", "φ8", "φ9", "φ10"]);
    }

    #[test]
    fn constructive_tables() {
        for id in ["Q", "G_psi_hat", "G_A", "G_psi_eq"] {
            let t = named_constructive_table(id).unwrap();
            assert_eq!(t.rows().len(), t.group().class_count(), "{id}");
        }
    }
}
