use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Dense row-major matrix over the cyclotomic numbers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl CMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("empty matrix {rows}x{cols}")));
        }
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(CMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            entries: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = Cyclotomic::one();
        }
        m
    }

    pub fn scalar(x: Cyclotomic) -> Self {
        CMatrix {
            rows: 1,
            cols: 1,
            entries: vec![x],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Cyclotomic::from_i64(v)).collect())
                .collect(),
        )
    }

    /// Parses `"0,i;i,0"`: rows separated by `;`, entries by `,`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<Cyclotomic>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mat_mul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Cyclotomic::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        Ok(CMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (ra, rb) = (r / other.rows, r % other.rows);
            for c in 0..cols {
                let (ca, cb) = (c / other.cols, c % other.cols);
                entries.push(self.get(ra, ca) * other.get(rb, cb));
            }
        }
        CMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn trace(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|k| self.get(k, k).clone()).sum())
    }

    pub fn scale(&self, x: &Cyclotomic) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * x).collect(),
        }
    }

    pub fn neg(&self) -> CMatrix {
        self.scale(&Cyclotomic::from_i64(-1))
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(
                "addition of differently shaped matrices".into(),
            ));
        }
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.add(&other.neg())
    }

    pub fn transpose(&self) -> CMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        CMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn conj_transpose(&self) -> CMatrix {
        let t = self.transpose();
        CMatrix {
            rows: t.rows,
            cols: t.cols,
            entries: t.entries.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &CMatrix) -> CMatrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut m = CMatrix::zeros(rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.entries[r * cols + c] = self.get(r, c).clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.entries[(r + self.rows) * cols + c + self.cols] = other.get(r, c).clone();
            }
        }
        m
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(p) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if p != pr {
                for k in 0..self.cols {
                    self.entries.swap(p * self.cols + k, pr * self.cols + k);
                }
            }
            let inv = self.get(pr, c).checked_inv().expect("pivot is nonzero");
            for k in 0..self.cols {
                let v = &self.entries[pr * self.cols + k] * &inv;
                self.entries[pr * self.cols + k] = v;
            }
            for r in 0..self.rows {
                if r == pr || self.get(r, c).is_zero() {
                    continue;
                }
                let f = self.get(r, c).clone();
                for k in 0..self.cols {
                    let t = &f * self.get(pr, k);
                    let v = &self.entries[r * self.cols + k] - &t;
                    self.entries[r * self.cols + k] = v;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Cyclotomic>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Cyclotomic::zero(); self.cols];
                x[f] = Cyclotomic::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = -m.get(r, f);
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<CMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = CMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.entries[r * 2 * n + n + r] = Cyclotomic::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(aug.get(r, n + c).clone());
            }
        }
        Ok(CMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    pub fn determinant(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(Cyclotomic::zero());
            };
            if p != c {
                for k in 0..n {
                    m.entries.swap(p * n + k, c * n + k);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.checked_inv()?;
            for r in c + 1..n {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c) * &inv;
                for k in c..n {
                    let t = &f * m.get(c, k);
                    let v = m.get(r, k) - &t;
                    m.entries[r * n + k] = v;
                }
            }
        }
        Ok(det)
    }
}

pub fn mat_mul(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    a.mat_mul(b)
}

pub fn mat_kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kron(b)
}

pub fn mat_trace(a: &CMatrix) -> Result<Cyclotomic> {
    a.trace()
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMatrix{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> CMatrix {
        CMatrix::parse(s).unwrap()
    }

    #[test]
    fn pauli_products() {
        let s1 = m("0,1;1,0");
        assert!(mat_mul(&s1, &s1).unwrap().is_identity());
        let p = m("0,-1;1,0"); // −iσ₂
        assert_eq!(mat_mul(&p, &p).unwrap(), CMatrix::identity(2).neg());
        let x = m("1,2i;3,-i");
        assert_eq!(mat_mul(&CMatrix::identity(2), &x).unwrap(), x);
    }

    #[test]
    fn dimension_mismatch() {
        let a = m("1,2");
        assert!(matches!(mat_mul(&a, &a), Err(Error::Dimension(_))));
        assert!(matches!(mat_trace(&a), Err(Error::NotSquare { .. })));
        assert!(CMatrix::new(2, 2, vec![Cyclotomic::one()]).is_err());
    }

    #[test]
    fn kronecker() {
        let x = m("0,i;i,0");
        let k = mat_kron(&CMatrix::scalar(Cyclotomic::from_i64(-1)), &x);
        assert_eq!(k, x.neg());
        assert_eq!(
            mat_kron(&CMatrix::identity(2), &CMatrix::identity(2)),
            CMatrix::identity(4)
        );
        let s3 = m("1,0;0,-1");
        assert_eq!(mat_kron(&m("-1"), &s3), s3.neg());
    }

    #[test]
    fn traces() {
        assert_eq!(
            mat_trace(&CMatrix::identity(2)).unwrap(),
            Cyclotomic::from_i64(2)
        );
        assert!(mat_trace(&m("0,1;1,0")).unwrap().is_zero());
        assert!(mat_trace(&m("0,1;-1,0")).unwrap().is_zero());
    }

    #[test]
    fn inverse_and_nullspace() {
        let a = m("1,i;0,2");
        let inv = a.inverse().unwrap();
        assert!(a.mat_mul(&inv).unwrap().is_identity());
        assert_eq!(a.determinant().unwrap(), Cyclotomic::from_i64(2));
        let sing = m("1,i;i,-1");
        assert!(sing.inverse().is_err());
        assert_eq!(sing.rank(), 1);
        let ns = sing.nullspace();
        assert_eq!(ns.len(), 1);
        let v = CMatrix::new(2, 1, ns[0].clone()).unwrap();
        assert!(sing
            .mat_mul(&v)
            .unwrap()
            .entries()
            .iter()
            .all(Cyclotomic::is_zero));
    }
}
