use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Permutation of the points `0..m`.
///
/// Products compose right to left, as maps: `(p * q)[k] = p[q[k]]`.
/// Display uses 1-based cycle notation, `I` for the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Builds a permutation of `0..m` from 0-based cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut used = vec![false; m];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= m || used[a] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?}")));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(13)(24)` or `I` over `m` points.
    pub fn parse_cycles(m: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "I" || s == "()" || s.is_empty() {
            return Ok(Self::identity(m));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match (ch, current.as_mut()) {
                ('(', None) => current = Some(Vec::new()),
                (')', Some(_)) => cycles.push(current.take().unwrap()),
                (d, Some(c)) if d.is_ascii_digit() && d != '0' => {
                    c.push(d.to_digit(10).unwrap() as usize - 1)
                }
                _ => return Err(Error::Parse(s.to_string())),
            }
        }
        if current.is_some() {
            return Err(Error::Parse(s.to_string()));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(m, &refs).map_err(|_| Error::Parse(s.to_string()))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.images[start];
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("I");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|k| (k + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation over the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let m = s.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(0) as usize;
        Self::parse_cycles(m, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = Permutation::parse_cycles(4, "(1234)").unwrap();
        assert_eq!(p.images(), &[1, 2, 3, 0]);
        assert_eq!(p.to_string(), "(1234)");
        assert_eq!(p.inverse().to_string(), "(1432)");
        assert_eq!((&p * &p).to_string(), "(13)(24)");
        assert_eq!(Permutation::identity(4).to_string(), "I");
        assert_eq!(
            Permutation::parse_cycles(4, "I").unwrap(),
            Permutation::identity(4)
        );
        assert!(Permutation::parse_cycles(4, "(12").is_err());
        assert!(Permutation::parse_cycles(4, "(11)").is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let r = Permutation::parse_cycles(4, "(1234)").unwrap();
        let s = Permutation::parse_cycles(4, "(13)").unwrap();
        // apply (13) first, then (1234): 1→3→4, 4→4→1, 2→2→3, 3→1→2
        assert_eq!((&r * &s).to_string(), "(14)(23)");
        assert_eq!((&s * &r).to_string(), "(12)(34)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }
}
