use super::character::{Character, CharacterTable, Provenance};
use super::rep::same_group;
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, IntCyc};
use crate::group_core::{ElementId, FiniteGroup};

/// A character table with some one-dimensional rows still unknown.
#[derive(Clone, Debug)]
pub struct PartialTable {
    pub group: FiniteGroup,
    pub known: Vec<Character>,
    pub provenance: Vec<Provenance>,
}

/// Every homomorphism `G → {±1}`, as characters, in generator-sign order.
pub fn sign_characters(g: &FiniteGroup) -> Vec<Character> {
    let gens = g.generators();
    let mut out = Vec::new();
    'patterns: for mask in 0u64..(1 << gens.len()) {
        let mut sign: Vec<Option<i8>> = vec![None; g.order()];
        sign[g.identity().0] = Some(1);
        let mut queue = vec![g.identity()];
        while let Some(x) = queue.pop() {
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let v = sign[x.0].unwrap() * if mask >> k & 1 == 1 { -1 } else { 1 };
                match sign[y.0] {
                    Some(prev) if prev != v => continue 'patterns,
                    Some(_) => {}
                    None => {
                        sign[y.0] = Some(v);
                        queue.push(y);
                    }
                }
            }
        }
        let values = |x: ElementId| Cyclotomic::from_i64(sign[x.0].unwrap() as i64);
        let chi = Character::from_element_values(g, values).expect("homomorphisms are class functions");
        if !out.contains(&chi) {
            out.push(chi);
        }
    }
    out
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Fills in the missing one-dimensional rows from the column orthogonality relations.
///
/// Candidates are the `±1`-valued homomorphisms of the group not already present. The
/// missing rows must be the unique choice of candidates that completes every relation
/// `Σ_a χ_a(C_i) conj(χ_a(C_j)) = δ_ij |G|/|C_i|`; otherwise this fails.
pub fn complete_by_orthogonality(partial: &PartialTable) -> Result<CharacterTable> {
    let g = &partial.group;
    for row in &partial.known {
        same_group(g, row.group())?;
    }
    if partial.provenance.len() != partial.known.len() {
        return Err(Error::Completion("one provenance entry per known row required".into()));
    }
    let r = g.class_count();
    let missing = r
        .checked_sub(partial.known.len())
        .ok_or_else(|| Error::Completion("more rows than classes".into()))?;
    if missing == 0 {
        return CharacterTable::new(g, partial.known.clone(), partial.provenance.clone());
    }
    let sizes: Vec<i64> = g.conjugacy_classes().iter().map(|c| c.size() as i64).collect();
    let n = partial
        .known
        .iter()
        .flat_map(|c| c.values().iter().map(|v| v.order()))
        .fold(1u32, num::integer::lcm);
    // residual[i][j] = δ_ij |G|/|C_i| - Σ_known χ(C_i) conj χ(C_j)
    let mut residual: Vec<Vec<IntCyc>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let target = if i == j { g.order() as i64 / sizes[i] } else { 0 };
            let mut s = IntCyc::from_i64(n, target);
            for chi in &partial.known {
                let a = IntCyc::from_cyclotomic(chi.value(i), n)
                    .ok_or_else(|| Error::Completion("known values are not algebraic integers".into()))?;
                let b = IntCyc::from_cyclotomic(chi.value(j), n).unwrap().conj();
                s.add_scaled_product(-1, &a, &b);
            }
            row.push(s);
        }
        residual.push(row);
    }
    let pool: Vec<Character> = sign_characters(g)
        .into_iter()
        .filter(|c| !partial.known.contains(c))
        .collect();
    let signs: Vec<Vec<i64>> = pool
        .iter()
        .map(|c| c.values().iter().map(|v| v.as_i64().unwrap()).collect())
        .collect();
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    combinations(pool.len(), missing, &mut |pick| {
        let ok = (0..r).all(|i| {
            (i..r).all(|j| {
                let s: i64 = pick.iter().map(|&c| signs[c][i] * signs[c][j]).sum();
                residual[i][j].equals_int(s)
            })
        });
        if ok {
            solutions.push(pick.to_vec());
        }
    });
    match solutions.len() {
        0 => Err(Error::Completion("no choice of ±1 rows satisfies the column relations".into())),
        1 => {
            let mut rows = partial.known.clone();
            let mut provenance = partial.provenance.clone();
            for &c in &solutions[0] {
                rows.push(pool[c].clone());
                provenance.push(Provenance::OrthogonalityCompletion);
            }
            CharacterTable::new(g, rows, provenance)
        }
        k => Err(Error::Completion(format!("{k} different completions satisfy the column relations"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::generate_group;
    use crate::repr_theory::dixon::character_table;

    fn klein() -> FiniteGroup {
        generate_group(&[1u8, 2u8], |a, b| a ^ b, |a| a.to_string()).unwrap().0
    }

    #[test]
    fn sign_characters_of_klein() {
        assert_eq!(sign_characters(&klein()).len(), 4);
    }

    #[test]
    fn recovers_missing_rows() {
        let g = klein();
        let full = character_table(&g).unwrap();
        let partial = PartialTable {
            group: g.clone(),
            known: full.rows()[..2].to_vec(),
            provenance: full.provenance()[..2].to_vec(),
        };
        let done = complete_by_orthogonality(&partial).unwrap();
        assert_eq!(done.canonical().rows(), full.rows());
        assert_eq!(done.provenance()[3], Provenance::OrthogonalityCompletion);
        let whole = PartialTable {
            group: g,
            known: full.rows().to_vec(),
            provenance: full.provenance().to_vec(),
        };
        assert_eq!(complete_by_orthogonality(&whole).unwrap().rows(), full.rows());
    }

    #[test]
    fn inconsistent_input_fails() {
        let g = klein();
        let full = character_table(&g).unwrap();
        let mut known = full.rows()[..2].to_vec();
        known[1] = known[0].clone();
        let partial = PartialTable { group: g, known, provenance: vec![Provenance::Constructive; 2] };
        assert!(complete_by_orthogonality(&partial).is_err());
    }
}
