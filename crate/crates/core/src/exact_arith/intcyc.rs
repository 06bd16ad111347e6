//! Fast arithmetic in Z[ζₙ] for bulk orthogonality checks.

use num::{BigInt, ToPrimitive};

use super::cyclotomic::{cyclotomic_poly, Cyclotomic, Rational};

/// Element of Z[ζₙ] written over the spanning set `ζₙ^k`, k = 0..n.
///
/// The representation is not unique; [`IntCyc::is_zero`] reduces modulo Φₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntCyc {
    n: u32,
    c: Vec<i64>,
}

impl IntCyc {
    pub fn zero(n: u32) -> Self {
        IntCyc { n, c: vec![0; n as usize] }
    }

    pub fn from_i64(n: u32, v: i64) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = v;
        z
    }

    /// `None` unless the conductor of `x` divides `n` and its coefficients are small integers.
    pub fn from_cyclotomic(x: &Cyclotomic, n: u32) -> Option<Self> {
        let full = x.spread_to(n)?;
        let c = full
            .iter()
            .map(|r| r.is_integer().then(|| r.to_integer().to_i64()).flatten())
            .collect::<Option<Vec<i64>>>()?;
        Some(IntCyc { n, c })
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let coeffs = self.c.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect();
        Cyclotomic::from_powers(self.n, coeffs).expect("n > 0")
    }

    pub fn add_assign(&mut self, other: &IntCyc) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            *a += b;
        }
    }

    /// Adds `k · a · b` in place.
    pub fn add_scaled_product(&mut self, k: i64, a: &IntCyc, b: &IntCyc) {
        let n = self.n as usize;
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                if y != 0 {
                    self.c[(i + j) % n] += k * x * y;
                }
            }
        }
    }

    pub fn mul(&self, other: &IntCyc) -> IntCyc {
        let mut out = Self::zero(self.n);
        out.add_scaled_product(1, self, other);
        out
    }

    /// Complex conjugate: `ζᵏ ↦ ζ⁻ᵏ`.
    pub fn conj(&self) -> IntCyc {
        let n = self.n as usize;
        let mut c = vec![0; n];
        for (k, &v) in self.c.iter().enumerate() {
            c[(n - k) % n] = v;
        }
        IntCyc { n: self.n, c }
    }

    fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_poly(self.n);
        let deg = phi.len() - 1;
        let mut full = self.c.clone();
        for k in (deg..full.len()).rev() {
            let t = full[k];
            if t == 0 {
                continue;
            }
            full[k] = 0;
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                full[k - deg + j] -= t * pj;
            }
        }
        full.truncate(deg);
        full
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&v| v == 0)
    }

    /// Exact test `self == v` for an integer `v`.
    pub fn equals_int(&self, v: i64) -> bool {
        let mut t = self.clone();
        t.c[0] -= v;
        t.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_cyclotomic() {
        let a: Cyclotomic = "1+2i".parse().unwrap();
        let b: Cyclotomic = "-3+i".parse().unwrap();
        let (x, y) = (IntCyc::from_cyclotomic(&a, 8).unwrap(), IntCyc::from_cyclotomic(&b, 8).unwrap());
        assert_eq!(x.mul(&y).to_cyclotomic(), &a * &b);
        assert_eq!(x.conj().to_cyclotomic(), a.conj());
        let w = IntCyc::from_cyclotomic(&a.conj(), 4).unwrap();
        assert!(IntCyc::from_cyclotomic(&a, 4).unwrap().mul(&w).equals_int(5));
        // 1 + ζ₃ + ζ₃² = 0
        let mut s = IntCyc::zero(3);
        s.c = vec![1, 1, 1];
        assert!(s.is_zero());
        let half: Cyclotomic = "1/2".parse().unwrap();
        assert!(IntCyc::from_cyclotomic(&half, 4).is_none());
    }
}
