use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::group::{ElementId, FiniteGroup};
use crate::error::{Error, Result};

/// Map between two finite groups, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<ElementId>,
}

/// Outcome of checking `map(ab) = map(a)map(b)` over all pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub pairs_checked: usize,
    pub violations: Vec<(ElementId, ElementId)>,
    pub injective: bool,
    pub surjective: bool,
}

impl HomReport {
    pub fn is_hom(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GroupHom {
    /// Checked constructor: fails unless `map` is a homomorphism.
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<ElementId>) -> Result<Self> {
        let hom = Self::unchecked(source, target, map)?;
        let report = verify_hom(&hom);
        if let Some(&(a, b)) = report.violations.first() {
            return Err(Error::InvalidHom(format!(
                "map({}·{}) ≠ map({})·map({})",
                hom.source.label(a),
                hom.source.label(b),
                hom.source.label(a),
                hom.source.label(b)
            )));
        }
        Ok(hom)
    }

    /// Builds a map without the homomorphism check, for inspection via [`verify_hom`].
    /// Only the shape (length and index ranges) is validated.
    pub fn unchecked(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<ElementId>,
    ) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(bad) = map.iter().find(|x| x.0 >= target.order()) {
            return Err(Error::InvalidHom(format!("image {} out of range", bad.0)));
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    /// Extends images of the source generators to a homomorphism, if one exists.
    pub fn from_generator_images(
        source: FiniteGroup,
        target: FiniteGroup,
        images: &[ElementId],
    ) -> Result<Self> {
        let gens = source.generators().to_vec();
        if gens.len() != images.len() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let map = extend_on_generators(&source, &target, &gens, images, false)
            .ok_or_else(|| Error::InvalidHom("generator images violate a relation".into()))?;
        let map = map
            .into_iter()
            .map(|x| x.expect("generators span"))
            .collect();
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: g.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map[x.0]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map
            .iter()
            .all(|y| !std::mem::replace(&mut seen[y.0], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for y in &self.map {
            seen[y.0] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<ElementId> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn kernel(&self) -> Vec<ElementId> {
        let e = self.target.identity();
        self.source
            .elements()
            .filter(|&x| self.map[x.0] == e)
            .collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target != other.source {
            return Err(Error::GroupMismatch(
                "composition of incompatible maps".into(),
            ));
        }
        let map = self.map.iter().map(|&y| other.apply(y)).collect();
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map,
        })
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::InvalidHom("map is not bijective".into()));
        }
        let mut map = vec![ElementId(0); self.map.len()];
        for (k, y) in self.map.iter().enumerate() {
            map[y.0] = ElementId(k);
        }
        Ok(GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            map,
        })
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.source.elements() {
            writeln!(
                f,
                "{} ↦ {}",
                self.source.label(x),
                self.target.label(self.apply(x))
            )?;
        }
        Ok(())
    }
}

/// Checks the homomorphism property exhaustively and lists every violating pair.
pub fn verify_hom(hom: &GroupHom) -> HomReport {
    let (s, t) = (&hom.source, &hom.target);
    let mut violations = Vec::new();
    for a in s.elements() {
        for b in s.elements() {
            if hom.apply(s.mul(a, b)) != t.mul(hom.apply(a), hom.apply(b)) {
                violations.push((a, b));
            }
        }
    }
    HomReport {
        pairs_checked: s.order() * s.order(),
        violations,
        injective: hom.is_injective(),
        surjective: hom.is_surjective(),
    }
}

/// Breadth-first extension of `gens[i] ↦ images[i]` over the subgroup the generators span.
///
/// Returns `None` on an inconsistency, or (with `injective`) when two elements collide.
fn extend_on_generators(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[ElementId],
    images: &[ElementId],
    injective: bool,
) -> Option<Vec<Option<ElementId>>> {
    let mut map: Vec<Option<ElementId>> = vec![None; source.order()];
    let mut hit = vec![false; target.order()];
    map[source.identity().0] = Some(target.identity());
    hit[target.identity().0] = true;
    let mut queue = VecDeque::from([source.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x.0].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = source.mul(x, s);
            let fy = target.mul(fx, t);
            match map[y.0] {
                Some(prev) if prev != fy => return None,
                Some(_) => {}
                None => {
                    if injective && std::mem::replace(&mut hit[fy.0], true) {
                        return None;
                    }
                    map[y.0] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

/// Small generating set: repeatedly add an element of maximal order outside the current span.
fn greedy_generators(g: &FiniteGroup) -> Vec<ElementId> {
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    while span.len() < g.order() {
        let mut inside = vec![false; g.order()];
        for x in &span {
            inside[x.0] = true;
        }
        let next = g
            .elements()
            .filter(|x| !inside[x.0])
            .max_by(|a, b| orders[a.0].cmp(&orders[b.0]).then(b.cmp(a)))
            .unwrap();
        gens.push(next);
        span = g.closure(&gens);
    }
    gens
}

/// Backtracking search for a homomorphism `h → g` that is injective, and bijective when `bijective` is set.
fn search(h: &FiniteGroup, g: &FiniteGroup, bijective: bool) -> Option<GroupHom> {
    let gens = greedy_generators(h);
    let g_orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            let order = h.element_order(s);
            let size = h.conjugacy_classes()[h.class_of(s)].size();
            g.elements()
                .filter(|y| g_orders[y.0] == order)
                .filter(|&y| !bijective || g.conjugacy_classes()[g.class_of(y)].size() == size)
                .collect()
        })
        .collect();
    let mut chosen: Vec<ElementId> = Vec::with_capacity(gens.len());
    let map = backtrack(h, g, &gens, &candidates, &mut chosen)?;
    let map: Vec<ElementId> = map.into_iter().map(|x| x.unwrap()).collect();
    Some(GroupHom {
        source: h.clone(),
        target: g.clone(),
        map,
    })
}

fn backtrack(
    h: &FiniteGroup,
    g: &FiniteGroup,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    chosen: &mut Vec<ElementId>,
) -> Option<Vec<Option<ElementId>>> {
    let depth = chosen.len();
    for &y in &candidates[depth] {
        chosen.push(y);
        if let Some(map) = extend_on_generators(h, g, &gens[..=depth], chosen, true) {
            if depth + 1 == gens.len() {
                return Some(map);
            }
            if let Some(found) = backtrack(h, g, gens, candidates, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// An injective homomorphism `h → g`, or `None` if `h` is not isomorphic to a subgroup of `g`.
pub fn embeds(h: &FiniteGroup, g: &FiniteGroup) -> Option<GroupHom> {
    if !g.order().is_multiple_of(h.order()) {
        return None;
    }
    if h.order() == 1 {
        return Some(GroupHom {
            source: h.clone(),
            target: g.clone(),
            map: vec![g.identity()],
        });
    }
    search(h, g, false)
}

/// Invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: usize,
    pub order_profile: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub center_size: usize,
}

pub fn invariants(g: &FiniteGroup) -> GroupInvariants {
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
    class_sizes.sort_unstable();
    GroupInvariants {
        order: g.order(),
        order_profile: g.order_profile(),
        class_sizes,
        center_size: g.center().len(),
    }
}

/// A bijective homomorphism `g → h`, or `None` if the groups are not isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupHom> {
    if invariants(g) != invariants(h) {
        return None;
    }
    if g.order() == 1 {
        return Some(GroupHom {
            source: g.clone(),
            target: h.clone(),
            map: vec![h.identity()],
        });
    }
    search(g, h, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::group::generate_group;

    fn cyclic(n: usize) -> FiniteGroup {
        generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string())
            .unwrap()
            .0
    }

    fn klein() -> FiniteGroup {
        generate_group(&[1u8, 2u8], |a, b| a ^ b, |a| a.to_string())
            .unwrap()
            .0
    }

    #[test]
    fn identity_hom_verifies() {
        let g = cyclic(6);
        let r = verify_hom(&GroupHom::identity(&g));
        assert!(r.is_hom() && r.injective && r.surjective);
        assert_eq!(r.pairs_checked, 36);
    }

    #[test]
    fn bad_map_reports_violations() {
        let g = cyclic(4);
        // send the generator to itself but fix everything else: not a hom
        let mut map: Vec<ElementId> = g.elements().collect();
        map.swap(2, 3);
        let hom = GroupHom::unchecked(g.clone(), g.clone(), map.clone()).unwrap();
        assert!(!verify_hom(&hom).is_hom());
        assert!(GroupHom::new(g.clone(), g, map).is_err());
    }

    #[test]
    fn embeddings() {
        assert!(embeds(&cyclic(2), &cyclic(4)).is_some());
        assert!(embeds(&klein(), &cyclic(4)).is_none());
        assert!(embeds(&cyclic(4), &klein()).is_none());
        let e = embeds(&cyclic(3), &cyclic(6)).unwrap();
        assert!(verify_hom(&e).is_hom() && e.is_injective());
    }

    #[test]
    fn isomorphisms() {
        assert!(is_isomorphic(&cyclic(4), &klein()).is_none());
        let iso = is_isomorphic(&cyclic(6), &cyclic(6)).unwrap();
        assert!(verify_hom(&iso).is_hom() && iso.is_bijective());
        let back = iso.inverse().unwrap();
        assert!(verify_hom(&back).is_hom());
    }

    #[test]
    fn generator_images() {
        let g = cyclic(6);
        let t = cyclic(3);
        let one = t.find("1").unwrap();
        let h = GroupHom::from_generator_images(g.clone(), t.clone(), &[one]).unwrap();
        assert_eq!(h.kernel().len(), 2);
        let c4 = cyclic(4);
        let gen4 = c4.find("1").unwrap();
        assert!(GroupHom::from_generator_images(g, c4, &[gen4]).is_err());
    }
}
