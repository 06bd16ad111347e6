//! Exact elements of cyclotomic fields Q(ζₙ).
//!
//! A value is stored in the power basis `1, ζₙ, …, ζₙ^(φ(n)-1)` of Q(ζₙ), i.e. as a
//! polynomial in ζₙ reduced modulo the n-th cyclotomic polynomial Φₙ. After every
//! operation the value is moved to its smallest conductor, so two values are equal
//! exactly when their `(order, coeffs)` pairs are equal.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;
use std::str::FromStr;

use num::integer::{gcd, lcm};
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An exact element of Q(ζₙ) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

pub(crate) fn euler_phi(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_poly(d);
        num = poly_div_exact(&num, &den);
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients (low degree first) of the monic cyclotomic polynomial Φₙ.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let p = Rc::new(compute_cyclotomic_poly(n));
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, Rc::clone(&p)));
    p
}

/// Reduces a length-`n` vector of coefficients of ζₙ^k (k = 0..n) modulo Φₙ.
fn reduce_full(n: u32, mut full: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for k in (deg..full.len()).rev() {
        if full[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut full[k], Rational::zero());
        for (j, pj) in phi.iter().enumerate().take(deg) {
            if *pj != 0 {
                let t = &c * Rational::from_integer(BigInt::from(*pj));
                full[k - deg + j] -= t;
            }
        }
    }
    full.truncate(deg);
    full
}

/// Solves `basis · x = target` over Q, where `basis` is given column-wise.
fn solve_columns(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = basis.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|col| col[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][c].recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=cols {
                    let t = &f * &m[pivot_row][k];
                    m[r][k] -= t;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// The imaginary unit ζ₄.
    pub fn i() -> Self {
        Cyclotomic {
            order: 4,
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// `a + b·i` for integers `a`, `b`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::from_powers(
            4,
            vec![
                Rational::from_integer(re.into()),
                Rational::from_integer(im.into()),
            ],
        )
        .expect("n = 4 is valid")
    }

    /// Builds `Σ coeffs[k] ζₙ^k` for an arbitrary-length coefficient list.
    pub fn from_powers(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        let mut full = vec![Rational::zero(); n as usize];
        for (k, c) in coeffs.into_iter().enumerate() {
            full[k % n as usize] += c;
        }
        Ok(Self::from_full(n, full))
    }

    fn from_full(n: u32, full: Vec<Rational>) -> Self {
        Self::canonical(n, reduce_full(n, full))
    }

    /// Moves a reduced power-basis vector of Q(ζₙ) to its minimal conductor.
    fn canonical(n: u32, coeffs: Vec<Rational>) -> Self {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            return Cyclotomic {
                order: 1,
                coeffs: vec![c],
            };
        }
        for m in divisors(n) {
            if m == 1 || m == n || m % 4 == 2 {
                continue;
            }
            let step = n / m;
            let basis: Vec<Vec<Rational>> = (0..euler_phi(m))
                .map(|i| {
                    let mut full = vec![Rational::zero(); n as usize];
                    full[i * step as usize] = Rational::one();
                    reduce_full(n, full)
                })
                .collect();
            if let Some(sub) = solve_columns(&basis, &coeffs) {
                return Cyclotomic {
                    order: m,
                    coeffs: sub,
                };
            }
        }
        Cyclotomic { order: n, coeffs }
    }

    /// Coefficient vector of `self` written over ζₙ^k, k = 0..n, for a multiple `n` of the conductor.
    fn spread(&self, n: u32) -> Vec<Rational> {
        debug_assert_eq!(n % self.order, 0);
        let step = (n / self.order) as usize;
        let mut full = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[i * step] = c.clone();
        }
        full
    }

    /// Coefficients over `ζₙ^k`, k = 0..n, when the conductor divides `n`.
    pub fn spread_to(&self, n: u32) -> Option<Vec<Rational>> {
        (n > 0 && n.is_multiple_of(self.order)).then(|| self.spread(n))
    }

    /// Conductor of the smallest cyclotomic field containing the value.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients over ζ_order; length φ(order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|v| v.to_i64())
    }

    /// Real and imaginary parts when the value lies in Q(i).
    pub fn gaussian_parts(&self) -> Option<(Rational, Rational)> {
        match self.order {
            1 => Some((self.coeffs[0].clone(), Rational::zero())),
            4 => Some((self.coeffs[0].clone(), self.coeffs[1].clone())),
            _ => None,
        }
    }

    /// Applies the Galois automorphism ζₙ ↦ ζₙ^k of the conductor field.
    pub fn galois(&self, k: i64) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as i64;
        let k = k.rem_euclid(n);
        assert_eq!(gcd(k, n), 1, "galois exponent must be a unit mod n");
        let mut full = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[((i as i64 * k) % n) as usize] += c;
        }
        Self::from_full(self.order, full)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.order as i64;
        let mut others = Self::one();
        for k in 2..n {
            if gcd(k, n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .cloned()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.checked_inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 {
            self.checked_inv()?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.order == other.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Self::canonical(self.order, coeffs);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let n = lcm(self.order, other.order);
        let full = self
            .spread(n)
            .into_iter()
            .zip(other.spread(n))
            .map(|(a, b)| a + b)
            .collect();
        Self::from_full(n, full)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        let n = lcm(self.order, other.order);
        let sa = (n / self.order) as usize;
        let sb = (n / other.order) as usize;
        let mut full = vec![Rational::zero(); n as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[(i * sa + j * sb) % n as usize] += a * b;
            }
        }
        Self::from_full(n, full)
    }
}

/// ζₙᵏ in canonical form.
pub fn root_of_unity(n: u32, k: i64) -> Result<Cyclotomic> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    let e = k.rem_euclid(n as i64) as usize;
    let mut full = vec![Rational::zero(); n as usize];
    full[e] = Rational::one();
    Ok(Cyclotomic::from_full(n, full))
}

pub fn cyc_add(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a.add_ref(b)
}

pub fn cyc_mul(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a.mul_ref(b)
}

pub fn cyc_conj(a: &Cyclotomic) -> Cyclotomic {
    a.conj()
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_i64(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(v: Rational) -> Self {
        Self::from_rational(v)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.add_ref(rhs)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_ref(&rhs)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.add_ref(&-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_ref(&-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.mul_ref(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_ref(&rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Appends `coef · unit` as a signed term; an empty `unit` means the constant term.
fn push_term(out: &mut String, coef: &Rational, unit: &str, explicit_mul: bool) {
    if coef.is_zero() {
        return;
    }
    if coef.is_negative() {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let abs = coef.abs();
    if unit.is_empty() {
        out.push_str(&fmt_rational(&abs));
    } else if abs.is_one() {
        out.push_str(unit);
    } else if explicit_mul {
        out.push_str(&format!("{}*{unit}", fmt_rational(&abs)));
    } else if abs.is_integer() {
        out.push_str(&format!("{}{unit}", fmt_rational(&abs)));
    } else {
        out.push_str(&format!("({}){unit}", fmt_rational(&abs)));
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self.order {
            1 => out = fmt_rational(&self.coeffs[0]),
            4 => {
                push_term(&mut out, &self.coeffs[0], "", false);
                push_term(&mut out, &self.coeffs[1], "i", false);
            }
            n => {
                for (k, c) in self.coeffs.iter().enumerate() {
                    let unit = match k {
                        0 => String::new(),
                        1 => format!("E({n})"),
                        _ => format!("E({n})^{k}"),
                    };
                    push_term(&mut out, c, &unit, true);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

/// Parses Gaussian rationals such as `2`, `-1/2`, `i`, `-2i`, `1+i`, `1-(1/2)i`.
impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if t.is_empty() {
            return Err(err());
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        let mut depth = 0;
        for (idx, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if idx > start && depth == 0 => {
                    terms.push(&t[start..idx]);
                    start = idx;
                }
                _ => {}
            }
        }
        terms.push(&t[start..]);
        let mut re = Rational::zero();
        let mut im = Rational::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (value, imag) = if let Some(coef) = body.strip_suffix('i') {
                let coef = coef.trim_start_matches('(').trim_end_matches(')');
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let v = if coef.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(coef).ok_or_else(err)?
                };
                (v, true)
            } else {
                (parse_rational(body).ok_or_else(err)?, false)
            };
            let value = if neg { -value } else { value };
            if imag {
                im += value;
            } else {
                re += value;
            }
        }
        Self::from_powers(4, vec![re, im])
    }
}

fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn json_to_bigint(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| {
                serde_json::Value::Array(vec![bigint_to_json(c.numer()), bigint_to_json(c.denom())])
            })
            .collect();
        let json = serde_json::json!({ "order": self.order, "coeffs": coeffs });
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u32,
            coeffs: Vec<(serde_json::Value, serde_json::Value)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for (n, d) in &raw.coeffs {
            let n = json_to_bigint(n).ok_or_else(|| de::Error::custom("bad numerator"))?;
            let d = json_to_bigint(d).ok_or_else(|| de::Error::custom("bad denominator"))?;
            if d.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(n, d));
        }
        Cyclotomic::from_powers(raw.order, coeffs).map_err(de::Error::custom)
    }
}
