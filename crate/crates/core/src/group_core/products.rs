use std::collections::VecDeque;

use super::group::{order_cap, ElementId, FiniteGroup};
use super::hom::GroupHom;
use crate::error::{Error, Result};

/// `G × H` together with its canonical projections and injections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
    pub inj_left: GroupHom,
    pub inj_right: GroupHom,
}

impl DirectProduct {
    /// Element `(a, b)`.
    pub fn pair(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(a.0 * self.proj_right.target().order() + b.0)
    }
}

fn pair_table(
    left: &FiniteGroup,
    right: &FiniteGroup,
    mul: impl Fn(usize, usize, usize, usize) -> (usize, usize),
) -> Result<Vec<Vec<usize>>> {
    let (n, m) = (left.order(), right.order());
    let cap = order_cap();
    if n.saturating_mul(m) > cap {
        return Err(Error::OrderCap { cap });
    }
    let mut table = Vec::with_capacity(n * m);
    for a in 0..n {
        for b in 0..m {
            let mut row = Vec::with_capacity(n * m);
            for c in 0..n {
                for d in 0..m {
                    let (x, y) = mul(a, b, c, d);
                    row.push(x * m + y);
                }
            }
            table.push(row);
        }
    }
    Ok(table)
}

fn pair_labels(left: &FiniteGroup, right: &FiniteGroup) -> Vec<String> {
    left.elements()
        .flat_map(|a| right.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", left.label(a), right.label(b)))
        .collect()
}

fn pair_generators(left: &FiniteGroup, right: &FiniteGroup) -> Vec<ElementId> {
    let m = right.order();
    let mut gens: Vec<ElementId> = left
        .generators()
        .iter()
        .map(|a| ElementId(a.0 * m + right.identity().0))
        .collect();
    gens.extend(
        right
            .generators()
            .iter()
            .map(|b| ElementId(left.identity().0 * m + b.0)),
    );
    gens
}

/// Componentwise product; element `(a, b)` sits at index `a·|H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<DirectProduct> {
    let table = pair_table(g, h, |a, b, c, d| {
        (
            g.mul(ElementId(a), ElementId(c)).0,
            h.mul(ElementId(b), ElementId(d)).0,
        )
    })?;
    let group = FiniteGroup::from_table(table, pair_labels(g, h), pair_generators(g, h))?;
    let m = h.order();
    let proj_left = GroupHom::unchecked(
        group.clone(),
        g.clone(),
        group.elements().map(|x| ElementId(x.0 / m)).collect(),
    )?;
    let proj_right = GroupHom::unchecked(
        group.clone(),
        h.clone(),
        group.elements().map(|x| ElementId(x.0 % m)).collect(),
    )?;
    let inj_left = GroupHom::unchecked(
        g.clone(),
        group.clone(),
        g.elements()
            .map(|a| ElementId(a.0 * m + h.identity().0))
            .collect(),
    )?;
    let inj_right = GroupHom::unchecked(
        h.clone(),
        group.clone(),
        h.elements()
            .map(|b| ElementId(g.identity().0 * m + b.0))
            .collect(),
    )?;
    Ok(DirectProduct {
        group,
        proj_left,
        proj_right,
        inj_left,
        inj_right,
    })
}

/// Action `λ: H → Aut(N)`; `table[h][n]` is `λ(h)(n)`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    acting: FiniteGroup,
    target: FiniteGroup,
    table: Vec<Vec<ElementId>>,
}

impl ActionTable {
    pub fn new(
        acting: FiniteGroup,
        target: FiniteGroup,
        table: Vec<Vec<ElementId>>,
    ) -> Result<Self> {
        if table.len() != acting.order() {
            return Err(Error::InvalidAction(format!(
                "{} rows for an acting group of order {}",
                table.len(),
                acting.order()
            )));
        }
        for (h, perm) in table.iter().enumerate() {
            check_automorphism(&target, perm).map_err(|m| {
                Error::InvalidAction(format!("λ({}): {m}", acting.label(ElementId(h))))
            })?;
        }
        for a in acting.elements() {
            for b in acting.elements() {
                let ab = acting.mul(a, b);
                let ok = target
                    .elements()
                    .all(|n| table[ab.0][n.0] == table[a.0][table[b.0][n.0].0]);
                if !ok {
                    return Err(Error::InvalidAction(format!(
                        "λ({}·{}) ≠ λ({})∘λ({})",
                        acting.label(a),
                        acting.label(b),
                        acting.label(a),
                        acting.label(b)
                    )));
                }
            }
        }
        Ok(ActionTable {
            acting,
            target,
            table,
        })
    }

    pub fn trivial(acting: FiniteGroup, target: FiniteGroup) -> Self {
        let row: Vec<ElementId> = target.elements().collect();
        let table = vec![row; acting.order()];
        ActionTable {
            acting,
            target,
            table,
        }
    }

    /// Extends automorphisms given for the generators of the acting group.
    pub fn from_generator_images(
        acting: FiniteGroup,
        target: FiniteGroup,
        images: &[Vec<ElementId>],
    ) -> Result<Self> {
        let gens = acting.generators().to_vec();
        if gens.len() != images.len() {
            return Err(Error::InvalidAction(format!(
                "{} automorphisms for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let ident: Vec<ElementId> = target.elements().collect();
        let mut table: Vec<Option<Vec<ElementId>>> = vec![None; acting.order()];
        table[acting.identity().0] = Some(ident);
        let mut queue = VecDeque::from([acting.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&s, img) in gens.iter().zip(images) {
                if img.len() != target.order() {
                    return Err(Error::InvalidAction("automorphism has wrong length".into()));
                }
                let y = acting.mul(x, s);
                let fx = table[x.0].as_ref().unwrap();
                let composed: Vec<ElementId> = img.iter().map(|n| fx[n.0]).collect();
                match &table[y.0] {
                    Some(prev) if *prev != composed => {
                        return Err(Error::InvalidAction(
                            "generator automorphisms violate a relation".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        table[y.0] = Some(composed);
                        queue.push_back(y);
                    }
                }
            }
        }
        let table = table.into_iter().map(|r| r.unwrap()).collect();
        Self::new(acting, target, table)
    }

    pub fn acting(&self) -> &FiniteGroup {
        &self.acting
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    /// `λ(h)(n)`.
    pub fn act(&self, h: ElementId, n: ElementId) -> ElementId {
        self.table[h.0][n.0]
    }
}

fn check_automorphism(g: &FiniteGroup, perm: &[ElementId]) -> std::result::Result<(), String> {
    if perm.len() != g.order() {
        return Err("wrong length".into());
    }
    let mut seen = vec![false; g.order()];
    for x in perm {
        if x.0 >= g.order() || std::mem::replace(&mut seen[x.0], true) {
            return Err("not a bijection".into());
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            if perm[g.mul(a, b).0] != g.mul(perm[a.0], perm[b.0]) {
                return Err(format!(
                    "not a homomorphism at ({},{})",
                    g.label(a),
                    g.label(b)
                ));
            }
        }
    }
    Ok(())
}

/// `N ⋊_λ H` with the embedded normal factor and the quotient map onto `H`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: FiniteGroup,
    pub inj_normal: GroupHom,
    pub inj_complement: GroupHom,
    pub projection: GroupHom,
}

impl SemidirectProduct {
    /// Element `(n, h)`.
    pub fn pair(&self, n: ElementId, h: ElementId) -> ElementId {
        ElementId(n.0 * self.projection.target().order() + h.0)
    }
}

/// Pairs `(n, h)` with `(n', h')(n, h) = (n'·λ(h')(n), h'h)`.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &ActionTable,
) -> Result<SemidirectProduct> {
    if action.target() != n || action.acting() != h {
        return Err(Error::InvalidAction(
            "action does not match the factors".into(),
        ));
    }
    let table = pair_table(n, h, |a, b, c, d| {
        let twisted = action.act(ElementId(b), ElementId(c));
        (
            n.mul(ElementId(a), twisted).0,
            h.mul(ElementId(b), ElementId(d)).0,
        )
    })?;
    let group = FiniteGroup::from_table(table, pair_labels(n, h), pair_generators(n, h))?;
    let m = h.order();
    // inverse law: (n, h)⁻¹ = (λ(h⁻¹)(n⁻¹), h⁻¹)
    for x in group.elements() {
        let (a, b) = (ElementId(x.0 / m), ElementId(x.0 % m));
        let hi = h.inv(b);
        let expected = ElementId(action.act(hi, n.inv(a)).0 * m + hi.0);
        if group.inv(x) != expected {
            return Err(Error::InvalidAction(format!(
                "inverse law fails at {}",
                group.label(x)
            )));
        }
    }
    let inj_normal = GroupHom::unchecked(
        n.clone(),
        group.clone(),
        n.elements()
            .map(|a| ElementId(a.0 * m + h.identity().0))
            .collect(),
    )?;
    let inj_complement = GroupHom::unchecked(
        h.clone(),
        group.clone(),
        h.elements()
            .map(|b| ElementId(n.identity().0 * m + b.0))
            .collect(),
    )?;
    let projection = GroupHom::unchecked(
        group.clone(),
        h.clone(),
        group.elements().map(|x| ElementId(x.0 % m)).collect(),
    )?;
    Ok(SemidirectProduct {
        group,
        inj_normal,
        inj_complement,
        projection,
    })
}
