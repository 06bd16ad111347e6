use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::character::CharacterTable;
use crate::error::{Error, Result};
use crate::exact_arith::Cyclotomic;

/// A bare table of values with class sizes, e.g. a table as printed in a reference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueTable {
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub row_labels: Vec<String>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

impl ValueTable {
    pub fn new(
        class_labels: Vec<String>,
        class_sizes: Vec<usize>,
        row_labels: Vec<String>,
        rows: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let c = class_sizes.len();
        if class_labels.len() != c || row_labels.len() != rows.len() || rows.iter().any(|r| r.len() != c) {
            return Err(Error::Dimension("ragged value table".into()));
        }
        Ok(ValueTable { class_labels, class_sizes, row_labels, rows })
    }

    /// Parses rows of values written as text (e.g. `"1"`, `"-2i"`).
    pub fn parse(
        class_labels: &[&str],
        class_sizes: &[usize],
        rows: &[(&str, &[&str])],
    ) -> Result<Self> {
        let values = rows
            .iter()
            .map(|(_, vals)| vals.iter().map(|v| v.parse()).collect::<Result<Vec<Cyclotomic>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            class_labels.iter().map(|s| s.to_string()).collect(),
            class_sizes.to_vec(),
            rows.iter().map(|(l, _)| l.to_string()).collect(),
            values,
        )
    }

    pub fn column(&self, j: usize) -> Vec<&Cyclotomic> {
        self.rows.iter().map(|r| &r[j]).collect()
    }
}

impl CharacterTable {
    pub fn value_table(&self) -> ValueTable {
        let g = self.group();
        ValueTable {
            class_labels: self.classes().iter().map(|c| g.label(c.representative).to_string()).collect(),
            class_sizes: self.classes().iter().map(|c| c.size()).collect(),
            row_labels: self.row_names().to_vec(),
            rows: self.rows().iter().map(|r| r.values().to_vec()).collect(),
        }
    }
}

/// Row and column permutations identifying two tables.
///
/// `a.rows[i][j] == b.rows[rows[i]][cols[j]]` and `a.class_sizes[j] == b.class_sizes[cols[j]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableMatch {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn tables_match(a: &CharacterTable, b: &CharacterTable) -> Option<TableMatch> {
    value_tables_match(&a.value_table(), &b.value_table())
}

struct Search<'a> {
    a: &'a [Vec<u32>],
    b: &'a [Vec<u32>],
    sizes_a: &'a [usize],
    sizes_b: &'a [usize],
    used: Vec<bool>,
    cols: Vec<usize>,
}

impl Search<'_> {
    /// Refines the row partitions of both tables by one more column pair.
    /// Returns the new cell ids, or `None` if the refined partitions disagree.
    fn refine(&self, cells: &(Vec<u32>, Vec<u32>), ja: usize, jb: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let key_a: Vec<(u32, u32)> = (0..self.a.len()).map(|r| (cells.0[r], self.a[r][ja])).collect();
        let key_b: Vec<(u32, u32)> = (0..self.b.len()).map(|r| (cells.1[r], self.b[r][jb])).collect();
        let mut count: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for k in &key_a {
            *count.entry(*k).or_default() += 1;
        }
        for k in &key_b {
            *count.entry(*k).or_default() -= 1;
        }
        if count.values().any(|&c| c != 0) {
            return None;
        }
        let ids: HashMap<(u32, u32), u32> = count.keys().enumerate().map(|(i, k)| (*k, i as u32)).collect();
        Some((key_a.iter().map(|k| ids[k]).collect(), key_b.iter().map(|k| ids[k]).collect()))
    }

    fn go(&mut self, cells: (Vec<u32>, Vec<u32>)) -> Option<(Vec<u32>, Vec<u32>)> {
        let ja = self.cols.len();
        if ja == self.sizes_a.len() {
            return Some(cells);
        }
        for jb in 0..self.sizes_b.len() {
            if self.used[jb] || self.sizes_b[jb] != self.sizes_a[ja] {
                continue;
            }
            if let Some(next) = self.refine(&cells, ja, jb) {
                self.used[jb] = true;
                self.cols.push(jb);
                if let Some(done) = self.go(next) {
                    return Some(done);
                }
                self.cols.pop();
                self.used[jb] = false;
            }
        }
        None
    }
}

/// Backtracking over column bijections that preserve class sizes, pruned by keeping the
/// row partitions induced by the assigned columns in step. Candidates are tried in index
/// order, so a table matched against itself yields the identity.
pub fn value_tables_match(a: &ValueTable, b: &ValueTable) -> Option<TableMatch> {
    let (ra, c) = (a.rows.len(), a.class_sizes.len());
    if ra != b.rows.len() || c != b.class_sizes.len() {
        return None;
    }
    let mut sorted_a = a.class_sizes.clone();
    let mut sorted_b = b.class_sizes.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let mut intern: HashMap<&Cyclotomic, u32> = HashMap::new();
    let mut id = |v| {
        let next = intern.len() as u32;
        *intern.entry(v).or_insert(next)
    };
    let ia: Vec<Vec<u32>> = a.rows.iter().map(|r| r.iter().map(&mut id).collect()).collect();
    let ib: Vec<Vec<u32>> = b.rows.iter().map(|r| r.iter().map(&mut id).collect()).collect();
    let mut search = Search {
        a: &ia,
        b: &ib,
        sizes_a: &a.class_sizes,
        sizes_b: &b.class_sizes,
        used: vec![false; c],
        cols: Vec::with_capacity(c),
    };
    let (cells_a, cells_b) = search.go((vec![0; ra], vec![0; ra]))?;
    // rows in equal cells agree on every column; pair them in index order
    let mut taken = vec![false; ra];
    let rows = cells_a
        .iter()
        .map(|cell| {
            let k = (0..ra).find(|&k| !taken[k] && cells_b[k] == *cell).expect("cells balance");
            taken[k] = true;
            k
        })
        .collect();
    Some(TableMatch { rows, cols: search.cols })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[&str]], sizes: &[usize]) -> ValueTable {
        let labels: Vec<String> = (0..sizes.len()).map(|k| format!("c{k}")).collect();
        let row_labels = (0..rows.len()).map(|k| format!("r{k}")).collect();
        let vals = rows
            .iter()
            .map(|r| r.iter().map(|v| v.parse().unwrap()).collect())
            .collect();
        ValueTable::new(labels, sizes.to_vec(), row_labels, vals).unwrap()
    }

    #[test]
    fn identity_match() {
        let t = table(&[&["1", "1", "1"], &["1", "1", "-1"], &["2", "-1", "0"]], &[1, 2, 3]);
        let m = value_tables_match(&t, &t).unwrap();
        assert_eq!(m.rows, vec![0, 1, 2]);
        assert_eq!(m.cols, vec![0, 1, 2]);
    }

    #[test]
    fn permuted_match() {
        let a = table(&[&["1", "1", "1"], &["1", "-1", "1"], &["1", "i", "-1"]], &[1, 1, 1]);
        let b = table(&[&["1", "-1", "i"], &["1", "1", "1"], &["1", "1", "-1"]], &[1, 1, 1]);
        let m = value_tables_match(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.rows[i][j], b.rows[m.rows[i]][m.cols[j]]);
            }
        }
    }

    #[test]
    fn mismatch() {
        let a = table(&[&["1", "1"], &["1", "-1"]], &[1, 1]);
        let b = table(&[&["1", "1"], &["1", "i"]], &[1, 1]);
        assert!(value_tables_match(&a, &b).is_none());
        let c = table(&[&["1", "1"], &["1", "-1"]], &[1, 2]);
        assert!(value_tables_match(&a, &c).is_none());
    }
}
