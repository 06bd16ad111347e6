use std::cmp::Ordering;

use num::{BigInt, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rep::{same_group, Representation};
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, IntCyc, Rational};
use crate::group_core::{ConjugacyClass, ElementId, FiniteGroup};

/// Class function, one value per conjugacy class in the group's class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: FiniteGroup,
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::Dimension(format!(
                "{} values for {} classes",
                values.len(),
                group.class_count()
            )));
        }
        Ok(Character { group: group.clone(), values })
    }

    /// Reads one value per class off a function on elements; fails if it is not a class function.
    pub fn from_element_values(group: &FiniteGroup, f: impl Fn(ElementId) -> Cyclotomic) -> Result<Self> {
        let mut values = Vec::with_capacity(group.class_count());
        for class in group.conjugacy_classes() {
            let v = f(class.representative);
            if class.members.iter().any(|&m| f(m) != v) {
                return Err(Error::NotACharacter("not constant on classes".into()));
            }
            values.push(v);
        }
        Ok(Character { group: group.clone(), values })
    }

    pub fn regular(group: &FiniteGroup) -> Self {
        let values = group
            .conjugacy_classes()
            .iter()
            .map(|c| {
                if c.representative == group.identity() {
                    Cyclotomic::from_i64(group.order() as i64)
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();
        Character { group: group.clone(), values }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Character { group: group.clone(), values: vec![Cyclotomic::one(); group.class_count()] }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn at(&self, x: ElementId) -> &Cyclotomic {
        &self.values[self.group.class_of(x)]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        self.at(self.group.identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_one)
    }

    pub fn conj(&self) -> Character {
        Character { group: self.group.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        same_group(&self.group, &other.group)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Character { group: self.group.clone(), values })
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Result<Character> {
        same_group(&self.group, &other.group)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Character { group: self.group.clone(), values })
    }
}

/// Trace of a class representative, for every class.
pub fn character_of(rep: &Representation) -> Character {
    let g = rep.group();
    let values = g
        .conjugacy_classes()
        .iter()
        .map(|c| rep.matrix(c.representative).trace().expect("square"))
        .collect();
    Character { group: g.clone(), values }
}

/// `(1/|G|) Σ_j |C_j| a(C_j) conj(b(C_j))`.
pub fn char_inner_product(a: &Character, b: &Character) -> Result<Cyclotomic> {
    same_group(&a.group, &b.group)?;
    let g = &a.group;
    let mut sum = Cyclotomic::zero();
    for (k, class) in g.conjugacy_classes().iter().enumerate() {
        let term = &a.values[k] * &b.values[k].conj();
        sum = sum + term.scale(&Rational::from_integer(BigInt::from(class.size())));
    }
    Ok(sum.scale(&Rational::new(BigInt::from(1), BigInt::from(g.order()))))
}

pub fn is_irreducible(rep: &Representation) -> bool {
    let chi = character_of(rep);
    char_inner_product(&chi, &chi).map(|v| v.is_one()).unwrap_or(false)
}

/// Equivalence over characteristic zero: equal characters.
pub fn are_equivalent(a: &Representation, b: &Representation) -> Result<bool> {
    same_group(a.group(), b.group())?;
    Ok(a.dim() == b.dim() && character_of(a) == character_of(b))
}

/// How a table row was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum Provenance {
    Constructive,
    Dixon { prime: u64 },
    OrthogonalityCompletion,
}

/// Complete table of irreducible characters, validated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group: FiniteGroup,
    rows: Vec<Character>,
    provenance: Vec<Provenance>,
    row_names: Vec<String>,
}

impl CharacterTable {
    /// Checks squareness, exact row and column orthogonality, and `Σ dim² = |G|`.
    pub fn new(group: &FiniteGroup, rows: Vec<Character>, provenance: Vec<Provenance>) -> Result<Self> {
        let r = group.class_count();
        if rows.len() != r {
            return Err(Error::InvalidTable(format!("{} rows for {r} classes", rows.len())));
        }
        if provenance.len() != r {
            return Err(Error::InvalidTable("one provenance entry per row required".into()));
        }
        for row in &rows {
            same_group(group, &row.group)?;
        }
        check_orthogonality(group, &rows)?;
        let row_names = (1..=r).map(|k| format!("χ{k}")).collect();
        Ok(CharacterTable { group: group.clone(), rows, provenance, row_names })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        self.group.conjugacy_classes()
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn row_names(&self) -> &[String] {
        &self.row_names
    }

    pub fn with_row_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.rows.len() {
            return Err(Error::InvalidTable("one name per row required".into()));
        }
        self.row_names = names;
        Ok(self)
    }

    /// Degrees of the rows, in row order.
    pub fn dims(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|c| c.degree().as_i64().expect("integral degree") as usize)
            .collect()
    }

    /// Rows in canonical order: trivial first, then by degree, then by values (largest first).
    pub fn canonical(&self) -> CharacterTable {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by(|&a, &b| canonical_row_cmp(&self.rows[a], &self.rows[b]));
        CharacterTable {
            group: self.group.clone(),
            rows: idx.iter().map(|&k| self.rows[k].clone()).collect(),
            provenance: idx.iter().map(|&k| self.provenance[k]).collect(),
            row_names: (1..=idx.len()).map(|k| format!("χ{k}")).collect(),
        }
    }
}

/// Orders values with rationals first (numerically), then the remaining values structurally.
pub fn value_cmp(a: &Cyclotomic, b: &Cyclotomic) -> Ordering {
    match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => Ordering::Greater,
        (None, Some(_)) => Ordering::Less,
        (None, None) => a.cmp(b),
    }
}

fn canonical_row_cmp(a: &Character, b: &Character) -> Ordering {
    b.is_trivial()
        .cmp(&a.is_trivial())
        .then_with(|| value_cmp(a.degree(), b.degree()))
        .then_with(|| {
            for (x, y) in a.values.iter().zip(&b.values) {
                let o = value_cmp(y, x);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
}

/// Exact row and column orthogonality plus `Σ dim² = |G|`.
pub fn check_orthogonality(group: &FiniteGroup, rows: &[Character]) -> Result<()> {
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let order = group.order() as i64;
    let mut dim_sq = BigInt::zero();
    for (a, row) in rows.iter().enumerate() {
        let d = row
            .degree()
            .as_integer()
            .filter(|d| *d > BigInt::zero())
            .ok_or_else(|| Error::InvalidTable(format!("row {} has no positive integral degree", a + 1)))?;
        dim_sq += &d * &d;
    }
    if dim_sq != BigInt::from(order) {
        return Err(Error::InvalidTable(format!("sum of squared degrees is {dim_sq}, not {order}")));
    }
    let n = rows
        .iter()
        .flat_map(|c| c.values.iter().map(|v| v.order()))
        .fold(1u32, num::integer::lcm);
    let fast: Option<Vec<Vec<IntCyc>>> = rows
        .iter()
        .map(|c| c.values.iter().map(|v| IntCyc::from_cyclotomic(v, n)).collect())
        .collect();
    let fast = fast.ok_or_else(|| Error::InvalidTable("values are not algebraic integers".into()))?;
    let conj: Vec<Vec<IntCyc>> = fast.iter().map(|row| row.iter().map(IntCyc::conj).collect()).collect();
    let sizes: Vec<i64> = classes.iter().map(|c| c.size() as i64).collect();
    for a in 0..r {
        for b in a..r {
            let mut s = IntCyc::zero(n);
            for j in 0..r {
                s.add_scaled_product(sizes[j], &fast[a][j], &conj[b][j]);
            }
            let expected = if a == b { order } else { 0 };
            if !s.equals_int(expected) {
                return Err(Error::InvalidTable(format!("rows {} and {} are not orthonormal", a + 1, b + 1)));
            }
        }
    }
    for i in 0..r {
        for j in i..r {
            let mut s = IntCyc::zero(n);
            for row in 0..r {
                s.add_scaled_product(1, &fast[row][i], &conj[row][j]);
            }
            let expected = if i == j { order / sizes[i] } else { 0 };
            if !s.equals_int(expected) {
                return Err(Error::InvalidTable(format!(
                    "columns {} and {} violate the completeness relation",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Multiplicities `⟨x, χᵢ⟩`; fails unless they are non-negative integers reproducing `x`.
pub fn decompose_character(x: &Character, table: &CharacterTable) -> Result<Vec<u64>> {
    same_group(&x.group, &table.group)?;
    let mut mult = Vec::with_capacity(table.rows.len());
    let mut rebuilt = vec![Cyclotomic::zero(); x.values.len()];
    for (k, chi) in table.rows.iter().enumerate() {
        let m = char_inner_product(x, chi)?;
        let m = m
            .as_integer()
            .and_then(|v| v.to_u64())
            .ok_or_else(|| Error::NotACharacter(format!("multiplicity of row {} is {m}", k + 1)))?;
        let scaled = Rational::from_integer(BigInt::from(m));
        for (acc, v) in rebuilt.iter_mut().zip(&chi.values) {
            *acc = &*acc + &v.scale(&scaled);
        }
        mult.push(m);
    }
    if rebuilt != x.values {
        return Err(Error::NotACharacter("not in the span of the table".into()));
    }
    Ok(mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::root_of_unity;
    use crate::group_core::generate_group;

    fn cyclic(n: usize) -> FiniteGroup {
        generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string()).unwrap().0
    }

    /// χ_k(x) = ζₙ^(kx) on the cyclic group, whose classes are singletons in element order.
    fn cyclic_table(n: usize) -> CharacterTable {
        let g = cyclic(n);
        let rows = (0..n)
            .map(|k| {
                Character::from_element_values(&g, |x| {
                    let e: usize = g.label(x).parse().unwrap();
                    root_of_unity(n as u32, (k * e) as i64).unwrap()
                })
                .unwrap()
            })
            .collect();
        CharacterTable::new(&g, rows, vec![Provenance::Constructive; n]).unwrap()
    }

    #[test]
    fn cyclic_tables_validate() {
        for n in [1, 2, 3, 4, 5, 6, 8] {
            let t = cyclic_table(n);
            assert_eq!(t.dims(), vec![1; n]);
            assert!(t.canonical().rows()[0].is_trivial());
        }
    }

    #[test]
    fn broken_table_rejected() {
        let t = cyclic_table(3);
        let mut rows = t.rows().to_vec();
        rows[2] = rows[1].clone();
        assert!(CharacterTable::new(t.group(), rows, vec![Provenance::Constructive; 3]).is_err());
    }

    #[test]
    fn inner_products_and_decomposition() {
        let t = cyclic_table(4);
        let g = t.group().clone();
        let reg = Character::regular(&g);
        assert_eq!(decompose_character(&reg, &t).unwrap(), vec![1, 1, 1, 1]);
        assert!(char_inner_product(&t.rows()[1], &t.rows()[2]).unwrap().is_zero());
        let sum = t.rows()[0].add(&t.rows()[3]).unwrap();
        assert_eq!(decompose_character(&sum, &t).unwrap(), vec![1, 0, 0, 1]);
        let shifted = Character::new(&g, vec![Cyclotomic::one(); 4]).unwrap().add(&reg).unwrap();
        assert!(decompose_character(&shifted, &t).unwrap() == vec![2, 1, 1, 1]);
        let bad = Character::new(&g, vec![Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::zero(), Cyclotomic::zero()]).unwrap();
        assert!(matches!(decompose_character(&bad, &t), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn regular_rep_character() {
        let g = cyclic(5);
        let reg = Representation::regular(&g);
        assert_eq!(character_of(&reg), Character::regular(&g));
        assert!(!is_irreducible(&reg));
        let triv = Character::trivial(&g);
        assert!(char_inner_product(&Character::regular(&g), &triv).unwrap().is_one());
    }
}
