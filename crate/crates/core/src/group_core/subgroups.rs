use std::collections::{BTreeSet, HashSet};

use super::group::{ElementId, FiniteGroup};
use super::hom::GroupHom;
use crate::error::{Error, Result};

pub fn is_subgroup(g: &FiniteGroup, elems: &[ElementId]) -> bool {
    if elems.iter().any(|x| x.0 >= g.order()) {
        return false;
    }
    let set: HashSet<ElementId> = elems.iter().copied().collect();
    set.contains(&g.identity())
        && set
            .iter()
            .all(|&a| set.iter().all(|&b| set.contains(&g.mul(a, b))))
}

pub fn is_normal(g: &FiniteGroup, elems: &[ElementId]) -> bool {
    let set: HashSet<ElementId> = elems.iter().copied().collect();
    is_subgroup(g, elems)
        && g.generators()
            .iter()
            .all(|&s| set.iter().all(|&x| set.contains(&g.conjugate(x, s))))
}

/// `G/N` with cosets ordered by least member; each coset is labelled `<g>` after that member.
pub fn quotient_group(g: &FiniteGroup, n: &[ElementId]) -> Result<(FiniteGroup, GroupHom)> {
    if !is_subgroup(g, n) {
        return Err(Error::NotSubgroup("element set is not closed".into()));
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut normal: Vec<ElementId> = n.to_vec();
    normal.sort_unstable();
    normal.dedup();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<ElementId> = Vec::new();
    for x in g.elements() {
        if coset_of[x.0] != usize::MAX {
            continue;
        }
        for &m in &normal {
            coset_of[g.mul(x, m).0] = reps.len();
        }
        reps.push(x);
    }
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[g.mul(a, b).0]).collect())
        .collect();
    let labels = reps.iter().map(|&r| format!("<{}>", g.label(r))).collect();
    let mut gens: Vec<ElementId> = Vec::new();
    for s in g.generators() {
        let c = ElementId(coset_of[s.0]);
        if !gens.contains(&c) {
            gens.push(c);
        }
    }
    let quotient = FiniteGroup::from_table(table, labels, gens)?;
    let map = coset_of.into_iter().map(ElementId).collect();
    let projection = GroupHom::unchecked(g.clone(), quotient.clone(), map)?;
    Ok((quotient, projection))
}

/// All subgroups of order `k`, each as a sorted element list, in lexicographic order.
///
/// Subgroups are grown one generator at a time from the trivial group, keeping only
/// those whose order divides `k`.
pub fn subgroups_of_order(g: &FiniteGroup, k: usize) -> Vec<Vec<ElementId>> {
    if k == 0 || !g.order().is_multiple_of(k) {
        return Vec::new();
    }
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    let trivial = vec![g.identity()];
    seen.insert(trivial.clone());
    let mut frontier: Vec<(Vec<ElementId>, Vec<ElementId>)> = vec![(trivial, Vec::new())];
    let mut found: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    while let Some((elems, gens)) = frontier.pop() {
        if elems.len() == k {
            found.insert(elems);
            continue;
        }
        let mut inside = vec![false; g.order()];
        for x in &elems {
            inside[x.0] = true;
        }
        for x in g.elements().filter(|x| !inside[x.0]) {
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let span = g.closure(&next_gens);
            if k.is_multiple_of(span.len()) && seen.insert(span.clone()) {
                frontier.push((span, next_gens));
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::group::generate_group;
    use crate::group_core::hom::verify_hom;

    fn cyclic(n: usize) -> FiniteGroup {
        generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string())
            .unwrap()
            .0
    }

    fn elementary(bits: u32) -> FiniteGroup {
        let seeds: Vec<u8> = (0..bits).map(|b| 1u8 << b).collect();
        generate_group(&seeds, |a, b| a ^ b, |a| format!("{a:03b}"))
            .unwrap()
            .0
    }

    #[test]
    fn subgroup_counts() {
        let z2cubed = elementary(3);
        assert_eq!(subgroups_of_order(&z2cubed, 2).len(), 7);
        assert_eq!(subgroups_of_order(&z2cubed, 4).len(), 7);
        assert_eq!(subgroups_of_order(&z2cubed, 8).len(), 1);
        assert_eq!(subgroups_of_order(&z2cubed, 3).len(), 0);
        let c12 = cyclic(12);
        for d in [1, 2, 3, 4, 6, 12] {
            assert_eq!(subgroups_of_order(&c12, d).len(), 1);
        }
    }

    #[test]
    fn quotients() {
        let c6 = cyclic(6);
        let sub = subgroups_of_order(&c6, 3).remove(0);
        let (q, p) = quotient_group(&c6, &sub).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.labels(), &["<0>".to_string(), "<1>".to_string()]);
        assert!(verify_hom(&p).is_hom());
        let all: Vec<ElementId> = c6.elements().collect();
        assert_eq!(quotient_group(&c6, &all).unwrap().0.order(), 1);
        assert!(matches!(
            quotient_group(&c6, &[ElementId(0), ElementId(1)]),
            Err(Error::NotSubgroup(_))
        ));
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = generate_group(
            &[[1u8, 0, 2], [1, 2, 0]],
            |p, q| [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]],
            |p| format!("{p:?}"),
        )
        .unwrap()
        .0;
        let two = subgroups_of_order(&s3, 2);
        assert_eq!(two.len(), 3);
        assert_eq!(quotient_group(&s3, &two[0]).unwrap_err(), Error::NotNormal);
        let three = subgroups_of_order(&s3, 3);
        assert_eq!(quotient_group(&s3, &three[0]).unwrap().0.order(), 2);
    }
}
