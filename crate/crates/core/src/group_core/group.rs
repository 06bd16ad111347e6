use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default ceiling on the order of any materialized group.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Environment variable that overrides [`DEFAULT_ORDER_CAP`].
pub const ORDER_CAP_ENV: &str = "CPTGROUPS_ORDER_CAP";

/// Full associativity is checked up to this order; above it Light's test on generators is used.
const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

pub fn order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &usize| v > 0)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Index of an element in its group's element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// A fully materialized finite group: element labels plus Cayley table.
///
/// Cloning is cheap; clones share the table and the cached class data.
#[derive(Clone)]
pub struct FiniteGroup {
    d: Arc<GroupData>,
}

#[derive(Clone)]
struct GroupData {
    order: usize,
    cayley: Vec<u32>,
    labels: Vec<String>,
    identity: ElementId,
    inverses: Vec<ElementId>,
    generators: Vec<ElementId>,
    classes: OnceLock<Vec<ConjugacyClass>>,
    class_index: OnceLock<Vec<usize>>,
}

/// JSON shape used for export and import.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
    pub generators: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    /// Structural equality: same Cayley table on the same indices. Labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.d, &other.d)
            || self.d.order == other.d.order && self.d.cayley == other.d.cayley
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.d.order)
            .field("generators", &self.d.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit Cayley table, validating every group axiom.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Vec<String>,
        generators: Vec<ElementId>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty Cayley table".into()));
        }
        let cap = order_cap();
        if n > cap {
            return Err(Error::OrderCap { cap });
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGroup(format!("duplicate label `{l}`")));
            }
        }
        let mut cayley = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidGroup("Cayley table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidGroup(format!("entry {v} out of range")));
                }
                cayley.push(v as u32);
            }
        }
        for g in &generators {
            if g.0 >= n {
                return Err(Error::InvalidGroup(format!(
                    "generator {} out of range",
                    g.0
                )));
            }
        }
        Self::validate(n, cayley, labels, generators)
    }

    fn validate(
        n: usize,
        cayley: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<ElementId>,
    ) -> Result<Self> {
        let at = |a: usize, b: usize| cayley[a * n + b] as usize;
        // Latin square
        let mut mark = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = at(a, b);
                if mark[v] == a {
                    return Err(Error::InvalidGroup(format!("row {a} repeats element {v}")));
                }
                mark[v] = a;
            }
        }
        mark.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let v = at(a, b);
                if mark[v] == b {
                    return Err(Error::InvalidGroup(format!(
                        "column {b} repeats element {v}"
                    )));
                }
                mark[v] = b;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| at(a, b) == identity)
                .expect("latin square row contains identity");
            if at(b, a) != identity {
                return Err(Error::InvalidGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
            inverses.push(ElementId(b));
        }
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Light's test: associativity on a generating set suffices.
            for &ElementId(s) in &generators {
                for a in 0..n {
                    for b in 0..n {
                        if at(at(a, b), s) != at(a, at(b, s)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a},{b},{s})"
                            )));
                        }
                    }
                }
            }
        }
        let group = FiniteGroup {
            d: Arc::new(GroupData {
                order: n,
                cayley,
                labels,
                identity: ElementId(identity),
                inverses,
                generators,
                classes: OnceLock::new(),
                class_index: OnceLock::new(),
            }),
        };
        let span = group.closure(&group.d.generators);
        if span.len() != n {
            return Err(Error::InvalidGroup(format!(
                "generators span {} of {n} elements",
                span.len()
            )));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.d.order
    }

    pub fn identity(&self) -> ElementId {
        self.d.identity
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.d.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.d.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.d.labels[x.0]
    }

    pub fn find(&self, label: &str) -> Option<ElementId> {
        self.d.labels.iter().position(|l| l == label).map(ElementId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.d.order).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.d.cayley[a.0 * self.d.order + b.0] as usize)
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.d.inverses[a.0]
    }

    pub fn conjugate(&self, x: ElementId, by: ElementId) -> ElementId {
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn pow(&self, x: ElementId, k: i64) -> ElementId {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = self.d.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn cayley_row(&self, a: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.d.cayley[a.0 * self.d.order..(a.0 + 1) * self.d.order]
            .iter()
            .map(|&v| ElementId(v as usize))
    }

    /// Least `k ≥ 1` with `xᵏ = e`.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.d.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, num::integer::lcm)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Subgroup generated by `seeds`, as a sorted list.
    pub fn closure(&self, seeds: &[ElementId]) -> Vec<ElementId> {
        let mut member = vec![false; self.d.order];
        member[self.d.identity.0] = true;
        let mut list = vec![self.d.identity];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in seeds {
                let y = self.mul(x, s);
                if !member[y.0] {
                    member[y.0] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Conjugacy classes ordered by least member index.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.d.classes.get_or_init(|| {
            let mut assigned = vec![false; self.d.order];
            let mut classes = Vec::new();
            for x in self.elements() {
                if assigned[x.0] {
                    continue;
                }
                let mut members: Vec<ElementId> =
                    self.elements().map(|g| self.conjugate(x, g)).collect();
                members.sort_unstable();
                members.dedup();
                for m in &members {
                    assigned[m.0] = true;
                }
                classes.push(ConjugacyClass {
                    representative: members[0],
                    members,
                });
            }
            classes
        })
    }

    /// Index into [`Self::conjugacy_classes`] of the class containing `x`.
    pub fn class_of(&self, x: ElementId) -> usize {
        self.d.class_index.get_or_init(|| {
            let mut idx = vec![0; self.d.order];
            for (k, c) in self.conjugacy_classes().iter().enumerate() {
                for m in &c.members {
                    idx[m.0] = k;
                }
            }
            idx
        })[x.0]
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Copy of the group with new element labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.d.order {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {} elements",
                labels.len(),
                self.d.order
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGroup(format!("duplicate label `{l}`")));
            }
        }
        let mut d = (*self.d).clone();
        d.labels = labels;
        Ok(FiniteGroup { d: Arc::new(d) })
    }

    /// Replaces the generator list; the new list must still generate the group.
    pub fn with_generators(&self, generators: Vec<ElementId>) -> Result<Self> {
        if self.closure(&generators).len() != self.d.order {
            return Err(Error::InvalidGroup(
                "generators do not span the group".into(),
            ));
        }
        let mut d = (*self.d).clone();
        d.generators = generators;
        Ok(FiniteGroup { d: Arc::new(d) })
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.d.order,
            labels: self.d.labels.clone(),
            cayley: (0..self.d.order)
                .map(|a| {
                    self.d.cayley[a * self.d.order..(a + 1) * self.d.order]
                        .iter()
                        .map(|&v| v as usize)
                        .collect()
                })
                .collect(),
            generators: self.d.generators.iter().map(|g| g.0).collect(),
        }
    }

    /// Rebuilds a group from its JSON form, re-validating all axioms.
    pub fn from_json(json: GroupJson) -> Result<Self> {
        if json.order != json.cayley.len() {
            return Err(Error::InvalidGroup(format!(
                "declared order {} but table has {} rows",
                json.order,
                json.cayley.len()
            )));
        }
        Self::from_table(
            json.cayley,
            json.labels,
            json.generators.into_iter().map(ElementId).collect(),
        )
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: GroupJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json(json)
    }
}

/// Closure of `seeds` under `multiply`, materialized as a [`FiniteGroup`].
///
/// The element list is built breadth-first by right multiplication with the seeds
/// (ties broken by insertion order); the identity is then moved to index 0. The
/// returned vector holds the concrete element for each [`ElementId`].
pub fn generate_group<T, M, L>(seeds: &[T], multiply: M, label: L) -> Result<(FiniteGroup, Vec<T>)>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    if seeds.is_empty() {
        return Err(Error::InvalidGroup("no seed elements".into()));
    }
    let cap = order_cap();
    let mut elements: Vec<T> = Vec::new();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut gens: Vec<usize> = Vec::new();
    for s in seeds {
        if *s != s.clone() {
            return Err(Error::InconsistentEquality);
        }
        let k = *index.entry(s.clone()).or_insert_with(|| {
            elements.push(s.clone());
            elements.len() - 1
        });
        if !gens.contains(&k) {
            gens.push(k);
        }
    }
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for &g in &gens {
            let y = multiply(&x, &elements[g]);
            if y != y.clone() {
                return Err(Error::InconsistentEquality);
            }
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::OrderCap { cap });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let identity = (0..elements.len())
        .find(|&k| multiply(&elements[k], &elements[k]) == elements[k])
        .ok_or_else(|| Error::InvalidGroup("closure has no identity".into()))?;
    // identity first, everything else keeps its breadth-first position
    let mut order: Vec<usize> = vec![identity];
    order.extend((0..elements.len()).filter(|&k| k != identity));
    let mut position = vec![0; elements.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let elements: Vec<T> = order.iter().map(|&k| elements[k].clone()).collect();
    let index: HashMap<T, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let n = elements.len();
    let mut table = Vec::with_capacity(n);
    for a in &elements {
        let mut row = Vec::with_capacity(n);
        for b in &elements {
            let p = multiply(a, b);
            row.push(*index.get(&p).ok_or(Error::NotClosed)?);
        }
        table.push(row);
    }
    let labels = elements.iter().map(&label).collect();
    let generators = gens.iter().map(|&g| ElementId(position[g])).collect();
    let group = FiniteGroup::from_table(table, labels, generators)?;
    Ok((group, elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string())
            .unwrap()
            .0
    }

    #[test]
    fn trivial_group() {
        let (g, els) = generate_group(&[0usize], |a, b| (a + b) % 1, |a| a.to_string()).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(els, vec![0]);
        assert_eq!(g.class_count(), 1);
    }

    #[test]
    fn cyclic_orders() {
        let g = cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), ElementId(0));
        assert_eq!(g.label(ElementId(0)), "0");
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.order_profile(), vec![1, 2, 3, 3, 6, 6]);
        assert!(g.is_abelian());
        assert_eq!(g.class_count(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let r = generate_group(&[1u64], |a, b| (a + b) % 5000, |a| a.to_string());
        assert_eq!(
            r.unwrap_err(),
            Error::OrderCap {
                cap: DEFAULT_ORDER_CAP
            }
        );
    }

    #[test]
    fn non_group_closure_rejected() {
        // multiplication that never reaches an idempotent
        let r = generate_group(&[2u64], |a, b| (a * b) % 8 + 8, |a| a.to_string());
        assert!(r.is_err());
    }

    #[test]
    fn table_validation() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(bad, vec!["e".into(), "a".into()], vec![]).is_err());
        let dup = vec![vec![0, 1], vec![1, 0]];
        assert!(FiniteGroup::from_table(
            dup.clone(),
            vec!["e".into(), "e".into()],
            vec![ElementId(1)]
        )
        .is_err());
        // generators must span
        assert!(
            FiniteGroup::from_table(dup.clone(), vec!["e".into(), "a".into()], vec![]).is_err()
        );
        let ok =
            FiniteGroup::from_table(dup, vec!["e".into(), "a".into()], vec![ElementId(1)]).unwrap();
        assert_eq!(ok.element_order(ElementId(1)), 2);
        // non-associative loop of order 5 (Latin square with identity)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|k| k.to_string()).collect();
        let err =
            FiniteGroup::from_table(loop5, labels, vec![ElementId(1), ElementId(2)]).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(m) if m.contains("associativity")));
    }

    #[test]
    fn json_round_trip() {
        let g = cyclic(4);
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back = FiniteGroup::from_json_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
        let mut broken = g.to_json();
        broken.cayley[1][1] = 1;
        assert!(FiniteGroup::from_json(broken).is_err());
    }
}
