use crate::error::{Error, Result};
use crate::group_core::{
    direct_product, generate_group, semidirect_product, verify_hom, ActionTable, DirectProduct,
    ElementId, FiniteGroup, GroupHom, Permutation, SemidirectProduct, SignedQuaternion,
};

use super::fixtures::{self, MapFixture};
use super::labels::{CptLabel, CptRelations, CptToken, CptWord, FieldTransform};

/// Stable ids of the named groups.
pub const GROUP_IDS: &[&str] =
    &["Q", "Z2", "Z2^3", "D4", "C4xZ2", "G_psi_hat", "G_A", "G_psi_eq", "G_QED", "D4xZ2"];

/// A group in its structural realization together with a CPT label per element.
#[derive(Clone, Debug)]
pub struct CptGroup {
    pub group: FiniteGroup,
    pub cpt: Vec<CptLabel>,
}

impl CptGroup {
    pub fn cpt_label(&self, x: ElementId) -> CptLabel {
        self.cpt[x.0]
    }

    /// Element carrying `label`, ignoring the hat flag.
    pub fn element(&self, label: &CptLabel) -> Option<ElementId> {
        self.cpt.iter().position(|l| l.corresponds(label)).map(ElementId)
    }

    pub fn element_str(&self, label: &str) -> Result<ElementId> {
        let l: CptLabel = label.parse()?;
        self.element(&l).ok_or_else(|| Error::Parse(label.to_string()))
    }

    /// The same group with CPT labels as element labels.
    pub fn with_cpt_labels(&self) -> Result<FiniteGroup> {
        self.group.relabeled(self.cpt.iter().map(|l| l.to_string()).collect())
    }
}

/// Abstract CPT group generated by `C`, `P`, `T` under the given relations.
pub fn cpt_word_group(rel: CptRelations, hat: bool) -> Result<(FiniteGroup, Vec<CptWord>)> {
    let seeds = [CptToken::C, CptToken::P, CptToken::T].map(|t| CptWord::new(t, false));
    generate_group(&seeds, |a, b| a.mul(*b, &rel), |w| w.label(hat).to_string())
}

fn word_element(words: &[CptWord], hat: bool, label: &str) -> Result<ElementId> {
    let l: CptLabel = label.parse()?;
    words
        .iter()
        .position(|w| w.label(hat).corresponds(&l))
        .map(ElementId)
        .ok_or_else(|| Error::Parse(label.to_string()))
}

fn find(g: &FiniteGroup, label: &str) -> Result<ElementId> {
    g.find(label).ok_or_else(|| Error::Parse(label.to_string()))
}

/// Splits a printed pair `(x,y)` at its last top-level comma.
pub(crate) fn split_pair(s: &str) -> Result<(&str, &str)> {
    s.strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|r| r.rsplit_once(','))
        .ok_or_else(|| Error::Parse(s.to_string()))
}

/// Map from the CPT word group given by a printed fixture, without the homomorphism check.
fn printed_word_map(
    words: &FiniteGroup,
    word_list: &[CptWord],
    hat: bool,
    target: &FiniteGroup,
    fixture: &MapFixture,
    resolve: impl Fn(&str) -> Result<ElementId>,
) -> Result<GroupHom> {
    let mut map = vec![None; words.order()];
    for (src, dst) in fixture.pairs {
        map[word_element(word_list, hat, src)?.0] = Some(resolve(dst)?);
    }
    let map = map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidHom(format!("{} does not cover every element", fixture.id)))?;
    GroupHom::unchecked(words.clone(), target.clone(), map)
}

fn labels_from_map(words: &[CptWord], hat: bool, map: &GroupHom) -> Result<Vec<CptLabel>> {
    if !map.is_bijective() {
        return Err(Error::InvalidHom("CPT label map is not a bijection".into()));
    }
    let mut cpt = vec![CptLabel::new(CptToken::I, false, hat); map.target().order()];
    for (k, w) in words.iter().enumerate() {
        cpt[map.apply(ElementId(k)).0] = w.label(hat);
    }
    Ok(cpt)
}

fn require_hom(map: &GroupHom, what: &str) -> Result<()> {
    if verify_hom(map).is_hom() {
        Ok(())
    } else {
        Err(Error::InvalidHom(format!("{what} violates the group law")))
    }
}

/// Q = {±1, ±ι, ±γ, ±κ}, generated by ι and γ.
pub fn build_quaternion() -> FiniteGroup {
    generate_group(
        &[SignedQuaternion::IOTA, SignedQuaternion::GAMMA],
        |a, b| *a * *b,
        |q| q.to_string(),
    )
    .expect("quaternion closure")
    .0
}

/// Z₂ = {e, a}.
pub fn build_z2() -> FiniteGroup {
    generate_group(&[true], |a, b| a ^ b, |&b| if b { "a" } else { "e" }.to_string())
        .expect("Z2 closure")
        .0
}

/// Z₂ written multiplicatively as {1, −1}.
pub fn build_z2_signs() -> FiniteGroup {
    generate_group(&[-1i8], |a, b| a * b, |v| v.to_string()).expect("sign closure").0
}

fn z2_cubed_label(bits: &[bool; 3]) -> String {
    let parts: Vec<String> = bits
        .iter()
        .enumerate()
        .map(|(k, &b)| format!("{}{}", if b { 'a' } else { 'e' }, k + 1))
        .collect();
    format!("({})", parts.join(","))
}

/// Z₂³ with elements `(x1,x2,x3)`, generated by a1, a2, a3.
pub fn build_z2_cubed() -> FiniteGroup {
    let seeds = [[true, false, false], [false, true, false], [false, false, true]];
    generate_group(
        &seeds,
        |a, b| [a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]],
        z2_cubed_label,
    )
    .expect("Z2^3 closure")
    .0
}

/// D₄ inside S₄, generated by the rotation (1234) and the reflection (13).
pub fn build_d4() -> FiniteGroup {
    let seeds = ["(1234)", "(13)"].map(|s| Permutation::parse_cycles(4, s).expect("cycle"));
    generate_group(&seeds, |a, b| a * b, |p| p.to_string()).expect("D4 closure").0
}

fn cyclic(n: usize) -> FiniteGroup {
    generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string()).expect("cyclic closure").0
}

pub fn build_c4_x_z2() -> Result<FiniteGroup> {
    Ok(direct_product(&cyclic(4), &build_z2())?.group)
}

/// D₄ₕ ≅ D₄ × Z₂.
pub fn build_d4_x_z2() -> Result<FiniteGroup> {
    Ok(direct_product(&build_d4(), &build_z2())?.group)
}

/// The operator CPT group of the Dirac field, realized as Q × Z₂.
#[derive(Clone, Debug)]
pub struct GPsiHat {
    pub cpt: CptGroup,
    pub q: FiniteGroup,
    pub z2: FiniteGroup,
    pub product: DirectProduct,
    /// Abstract group of hatted CPT words.
    pub words: FiniteGroup,
    /// The printed label assignment, words → Q × Z₂; a verified isomorphism.
    pub word_map: GroupHom,
}

/// The printed assignment writes Z₂ as {1, −1}; the structural labels use {e, a}.
fn hat_pair_label(printed: &str) -> Result<String> {
    let (q, h) = split_pair(printed)?;
    let h = match h {
        "1" => "e",
        "-1" => "a",
        _ => return Err(Error::Parse(printed.to_string())),
    };
    Ok(format!("({q},{h})"))
}

pub fn build_g_psi_hat() -> Result<GPsiHat> {
    let q = build_quaternion();
    let z2 = build_z2();
    let product = direct_product(&q, &z2)?;
    let (words, word_list) = cpt_word_group(CptRelations::DIRAC_FIELD, true)?;
    let word_map = printed_word_map(
        &words,
        &word_list,
        true,
        &product.group,
        &fixtures::G_PSI_HAT_ISOMORPHISM,
        |s| find(&product.group, &hat_pair_label(s)?),
    )?;
    require_hom(&word_map, "Q×Z₂ label assignment")?;
    let cpt = labels_from_map(&word_list, true, &word_map)?;
    Ok(GPsiHat { cpt: CptGroup { group: product.group.clone(), cpt }, q, z2, product, words, word_map })
}

/// The operator CPT group of the electromagnetic potential, realized as Z₂³.
#[derive(Clone, Debug)]
pub struct GA {
    pub cpt: CptGroup,
    pub words: FiniteGroup,
    /// `C ↦ a1`, `P ↦ a2`, `T ↦ a3`, extended by the group law.
    pub word_map: GroupHom,
}

pub fn build_g_a() -> Result<GA> {
    let z = build_z2_cubed();
    let (words, word_list) = cpt_word_group(CptRelations::MAXWELL_FIELD, true)?;
    // both groups list their generators in the order C, P, T and a1, a2, a3
    let word_map = GroupHom::from_generator_images(words.clone(), z.clone(), z.generators())?;
    require_hom(&word_map, "Z₂³ label assignment")?;
    let cpt = labels_from_map(&word_list, true, &word_map)?;
    Ok(GA { cpt: CptGroup { group: z, cpt }, words, word_map })
}

/// The Z₂³ assignment exactly as printed, which need not be a homomorphism.
pub fn printed_g_a_map() -> Result<GroupHom> {
    let a = build_g_a()?;
    let (_, word_list) = cpt_word_group(CptRelations::MAXWELL_FIELD, true)?;
    printed_word_map(&a.words, &word_list, true, &a.cpt.group, &fixtures::G_A_ISOMORPHISM, |s| {
        find(&a.cpt.group, s)
    })
}

/// Closure of the C, P, T field transformations, with its isomorphism onto [`build_g_a`].
pub fn derive_g_a_from_field_action() -> Result<(FiniteGroup, GroupHom)> {
    let seeds = [FieldTransform::CHARGE, FieldTransform::PARITY, FieldTransform::TIME];
    let (g, _) = generate_group(&seeds, |a, b| a.compose(*b), |t| t.to_string())?;
    let target = build_g_a()?.cpt.group;
    let hom = GroupHom::from_generator_images(g.clone(), target.clone(), target.generators())?;
    if !hom.is_bijective() {
        return Err(Error::InvalidHom("field-action group is not isomorphic to Z₂³".into()));
    }
    Ok((g, hom))
}

/// The CPT group of the Dirac equation, realized as D₄ ⋊ Z₂.
#[derive(Clone, Debug)]
pub struct GPsiEq {
    /// Structural labels `(perm,±1)`.
    pub cpt: CptGroup,
    pub d4: FiniteGroup,
    pub z2: FiniteGroup,
    pub action: ActionTable,
    pub product: SemidirectProduct,
    /// The subgroup {±I, ±P, ±CT, ±Θ} of the word group.
    pub d4_words: FiniteGroup,
    /// Printed relabeling D₄ → `d4_words`; a verified isomorphism.
    pub d4_relabel: GroupHom,
    pub words: FiniteGroup,
    /// Printed isomorphism words → D₄ ⋊ Z₂; verified.
    pub word_map: GroupHom,
}

/// `λ(−1)` as printed, extended to the action of {1, −1}.
pub fn build_d4_action(d4: &FiniteGroup, z2: &FiniteGroup) -> Result<ActionTable> {
    let mut flip = vec![None; d4.order()];
    for (src, dst) in fixtures::D4_ACTION.pairs {
        flip[find(d4, src)?.0] = Some(find(d4, dst)?);
    }
    let flip: Vec<ElementId> = flip
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidAction("λ(−1) is not given on every element".into()))?;
    let minus = find(z2, "-1")?;
    let table = z2
        .elements()
        .map(|h| if h == minus { flip.clone() } else { d4.elements().collect() })
        .collect();
    ActionTable::new(z2.clone(), d4.clone(), table)
}

pub fn build_g_psi_eq() -> Result<GPsiEq> {
    let d4 = build_d4();
    let z2 = build_z2_signs();
    let action = build_d4_action(&d4, &z2)?;
    let product = semidirect_product(&d4, &z2, &action)?;
    let (words, word_list) = cpt_word_group(CptRelations::DIRAC_EQUATION, false)?;

    let d4_seeds = [CptToken::P, CptToken::CT].map(|t| CptWord::new(t, false));
    let rel = CptRelations::DIRAC_EQUATION;
    let (d4_words, d4_word_list) =
        generate_group(&d4_seeds, |a, b| a.mul(*b, &rel), |w| w.label(false).to_string())?;
    let mut relabel = vec![None; d4.order()];
    for (perm, name) in fixtures::D4_RELABELING.pairs {
        relabel[find(&d4, perm)?.0] = Some(word_element(&d4_word_list, false, name)?);
    }
    let relabel: Vec<ElementId> = relabel
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidHom("D₄ relabeling is incomplete".into()))?;
    let d4_relabel = GroupHom::unchecked(d4.clone(), d4_words.clone(), relabel)?;
    require_hom(&d4_relabel, "D₄ relabeling")?;
    if !d4_relabel.is_bijective() {
        return Err(Error::InvalidHom("D₄ relabeling is not a bijection".into()));
    }
    let d4_inverse = d4_relabel.inverse()?;

    let word_map = printed_word_map(
        &words,
        &word_list,
        false,
        &product.group,
        &fixtures::G_PSI_EQ_ISOMORPHISM,
        |s| {
            let (name, sign) = split_pair(s)?;
            let n = d4_inverse.apply(word_element(&d4_word_list, false, name)?);
            Ok(product.pair(n, find(&z2, sign)?))
        },
    )?;
    require_hom(&word_map, "D₄⋊Z₂ label assignment")?;
    let cpt = labels_from_map(&word_list, false, &word_map)?;
    Ok(GPsiEq {
        cpt: CptGroup { group: product.group.clone(), cpt },
        d4,
        z2,
        action,
        product,
        d4_words,
        d4_relabel,
        words,
        word_map,
    })
}

/// The CPT group of QED, (Q × Z₂) × Z₂³.
#[derive(Clone, Debug)]
pub struct Qed {
    pub group: FiniteGroup,
    pub product: DirectProduct,
    pub psi: GPsiHat,
    pub a: GA,
}

pub fn build_qed_group() -> Result<Qed> {
    let psi = build_g_psi_hat()?;
    let a = build_g_a()?;
    let product = direct_product(&psi.cpt.group, &a.cpt.group)?;
    Ok(Qed { group: product.group.clone(), product, psi, a })
}

/// A named group by its stable id.
///
/// G_psi_eq carries CPT labels; the other CPT groups carry their structural labels.
pub fn named_group(id: &str) -> Result<FiniteGroup> {
    match id {
        "Q" => Ok(build_quaternion()),
        "Z2" => Ok(build_z2()),
        "Z2^3" => Ok(build_z2_cubed()),
        "D4" => Ok(build_d4()),
        "C4xZ2" => build_c4_x_z2(),
        "G_psi_hat" => Ok(build_g_psi_hat()?.cpt.group),
        "G_A" => Ok(build_g_a()?.cpt.group),
        "G_psi_eq" => build_g_psi_eq()?.cpt.with_cpt_labels(),
        "G_QED" => Ok(build_qed_group()?.group),
        "D4xZ2" => build_d4_x_z2(),
        other => Err(Error::UnknownGroup(other.to_string())),
    }
}

/// CPT labels per element for the named groups that carry them.
pub fn named_cpt_labels(id: &str) -> Result<Option<Vec<CptLabel>>> {
    Ok(match id {
        "G_psi_hat" => Some(build_g_psi_hat()?.cpt.cpt),
        "G_A" => Some(build_g_a()?.cpt.cpt),
        "G_psi_eq" => Some(build_g_psi_eq()?.cpt.cpt),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::is_isomorphic;

    #[test]
    fn quaternion_basics() {
        let q = build_quaternion();
        assert_eq!(q.order(), 8);
        assert_eq!(q.class_count(), 5);
        let (i, g) = (q.find("ι").unwrap(), q.find("γ").unwrap());
        assert_eq!(q.label(q.mul(i, g)), "κ");
        let mut orders = q.order_profile();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn g_psi_hat_labels() {
        let h = build_g_psi_hat().unwrap();
        assert_eq!(h.cpt.group.order(), 16);
        let g = &h.cpt.group;
        assert_eq!(h.cpt.cpt_label(g.find("(ι,a)").unwrap()).to_string(), "Ĉ*P̂");
        assert_eq!(h.cpt.cpt_label(g.find("(κ,a)").unwrap()).to_string(), "Θ̂");
        assert_eq!(g.class_count(), 10);
    }

    #[test]
    fn g_a_and_field_action() {
        let a = build_g_a().unwrap();
        assert_eq!(a.cpt.group.order(), 8);
        assert_eq!(a.cpt.group.class_count(), 8);
        let theta = a.cpt.element_str("Θ̂").unwrap();
        assert_eq!(a.cpt.group.label(theta), "(a1,a2,a3)");
        let t = a.cpt.element_str("T̂").unwrap();
        assert_eq!(a.cpt.group.label(t), "(e1,e2,a3)");
        assert!(!verify_hom(&printed_g_a_map().unwrap()).is_hom());
        let (g, hom) = derive_g_a_from_field_action().unwrap();
        assert_eq!(g.order(), 8);
        assert!(hom.is_bijective() && verify_hom(&hom).is_hom());
        assert_eq!(g.labels()[0], "A^μ(x,t)");
    }

    #[test]
    fn g_psi_eq_structure() {
        let e = build_g_psi_eq().unwrap();
        let g = &e.cpt.group;
        assert_eq!(g.class_count(), 10);
        let t = e.cpt.element_str("T").unwrap();
        assert_eq!(g.conjugacy_classes()[g.class_of(t)].size(), 1);
        let (p1, p2) = (e.d4.find("(12)(34)").unwrap(), e.z2.find("-1").unwrap());
        assert_eq!(e.d4.label(e.action.act(p2, p1)), "(14)(23)");
        // (P,−1)² = (P², 1), and P² = (13)(24) is −I
        let pm = e.cpt.element_str("T").unwrap();
        assert_eq!(e.cpt.cpt_label(g.mul(pm, pm)).to_string(), "-I");
        assert_eq!(g.label(pm), "((1234),-1)");
    }

    #[test]
    fn registry() {
        for id in GROUP_IDS {
            let g = named_group(id).unwrap();
            assert!(g.order() > 1, "{id}");
        }
        assert!(matches!(named_group("S5"), Err(Error::UnknownGroup(_))));
        assert_eq!(named_group("G_QED").unwrap().order(), 128);
        let c4z2 = build_c4_x_z2().unwrap();
        assert!(is_isomorphic(&c4z2, &named_group("D4").unwrap()).is_none());
    }
}
