//! Character tables by the Burnside–Dixon class-algebra method.
//!
//! Class-sum multiplication matrices are diagonalized simultaneously over F_p, where
//! p ≡ 1 (mod exponent) and p > 2√|G|. Character values are recovered exactly by
//! counting eigenvalue multiplicities of each `ρ(g)` through the discrete Fourier
//! transform over the e-th roots of unity in F_p.

use num::{BigInt, BigRational};

use super::character::{Character, CharacterTable, Provenance};
use crate::error::{Error, Result};
use crate::exact_arith::Cyclotomic;
use crate::group_core::FiniteGroup;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√order`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut p = 1;
    loop {
        p += exponent;
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Element of multiplicative order exactly `e` in F_p.
fn primitive_root_of_order(e: u64, p: u64) -> u64 {
    let factors: Vec<u64> = (2..=e).filter(|&q| e.is_multiple_of(q) && is_prime(q)).collect();
    (2..p)
        .map(|g| pow_mod(g, (p - 1) / e, p))
        .find(|&z| factors.iter().all(|&q| pow_mod(z, e / q, p) != 1))
        .unwrap_or(1)
}

/// Basis (rows) of the nullspace of a `rows × cols` matrix over F_p.
fn nullspace_mod(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let inv = inv_mod(m[r][c], p);
        for v in m[r].iter_mut() {
            *v = *v * inv % p;
        }
        for k in 0..m.len() {
            if k != r && m[k][c] != 0 {
                let f = m[k][c];
                for j in 0..cols {
                    m[k][j] = (m[k][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Column-reduces a basis (given as vectors) so that it is the identity on its pivot coordinates.
fn echelon(mut basis: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let n = basis.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..basis.len()).find(|&k| basis[k][c] != 0) else {
            continue;
        };
        basis.swap(r, k);
        let inv = inv_mod(basis[r][c], p);
        for v in basis[r].iter_mut() {
            *v = *v * inv % p;
        }
        for k in 0..basis.len() {
            if k != r && basis[k][c] != 0 {
                let f = basis[k][c];
                for j in 0..n {
                    basis[k][j] = (basis[k][j] + p - f * basis[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    basis.truncate(r);
    (basis, pivots)
}

/// Class constants: `a[j][k][l] = #{x ∈ C_j : x⁻¹·g_l ∈ C_k}`.
fn class_matrices(g: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (j, cj) in classes.iter().enumerate() {
        for &x in &cj.members {
            let xi = g.inv(x);
            for (l, cl) in classes.iter().enumerate() {
                let k = g.class_of(g.mul(xi, cl.representative));
                a[j][k][l] += 1;
            }
        }
    }
    a
}

/// Splits `F_p^r` into common eigenlines of the class matrices.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], r: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for m in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = echelon(space, p);
            let d = basis.len();
            // image of each basis vector, read off on the pivot coordinates
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    pivots
                        .iter()
                        .map(|&k| (0..r).map(|l| m[k][l] * v[l] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // rows: pivot coordinate i, columns: basis index b; matrix (R - λI)
                let sys: Vec<Vec<u64>> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|b| {
                                let v = images[b][i] + if i == b { p - lambda } else { 0 };
                                v % p
                            })
                            .collect()
                    })
                    .collect();
                let null = nullspace_mod(sys, d, p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coef| {
                        (0..r)
                            .map(|l| (0..d).map(|b| coef[b] * basis[b][l] % p).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                next.push(sub);
            }
            if found != d {
                return Err(Error::Dixon("class matrix is not diagonalizable mod p".into()));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Dixon("eigenspaces did not split into lines".into()));
    }
    Ok(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

/// Exact character table of `g` via the class algebra.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let order = g.order() as u64;
    let e = g.exponent() as u64;
    let p = dixon_prime(e, order);
    let id_class = g.class_of(g.identity());
    let a = class_matrices(g);
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inverse_class: Vec<usize> = classes.iter().map(|c| g.class_of(g.inv(c.representative))).collect();
    let mut order_of_mats: Vec<usize> = (0..r).filter(|&j| j != id_class).collect();
    // large classes first tend to separate characters fastest
    order_of_mats.sort_by_key(|&j| std::cmp::Reverse(sizes[j]));
    let mats: Vec<Vec<Vec<u64>>> = order_of_mats.iter().map(|&j| a[j].clone()).collect();
    let lines = common_eigenvectors(&mats, r, p)?;
    if lines.len() != r {
        return Err(Error::Dixon(format!("found {} characters for {r} classes", lines.len())));
    }

    let z = primitive_root_of_order(e, p);
    let e_inv = inv_mod(e % p, p);
    // powers_class[j][l] = class of g_j^l
    let powers_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (0..e as i64).map(|l| g.class_of(g.pow(c.representative, l))).collect())
        .collect();

    let mut rows = Vec::with_capacity(r);
    for v in lines {
        let scale = inv_mod(v[id_class], p);
        let omega: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
        let denom = (0..r)
            .map(|j| omega[j] * omega[inverse_class[j]] % p * inv_mod(sizes[j] % p, p) % p)
            .sum::<u64>()
            % p;
        let d_sq = order % p * inv_mod(denom, p) % p;
        let d = (1..)
            .take_while(|d: &u64| d * d <= order)
            .find(|d| d * d % p == d_sq)
            .ok_or_else(|| Error::Dixon("no integral degree".into()))?;
        let chi_p: Vec<u64> = (0..r)
            .map(|j| d * omega[j] % p * inv_mod(sizes[j] % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let mut mult = Vec::with_capacity(e as usize);
            for k in 0..e {
                let s = (0..e)
                    .map(|l| chi_p[powers_class[j][l as usize]] * pow_mod(z, (e - (k * l) % e) % e, p) % p)
                    .sum::<u64>()
                    % p;
                mult.push(s * e_inv % p);
            }
            if mult.iter().sum::<u64>() != d {
                return Err(Error::Dixon("eigenvalue multiplicities do not sum to the degree".into()));
            }
            let coeffs = mult
                .into_iter()
                .map(|m| BigRational::from_integer(BigInt::from(m)))
                .collect();
            values.push(Cyclotomic::from_powers(e as u32, coeffs)?);
        }
        rows.push(Character::new(g, values)?);
    }
    let table = CharacterTable::new(g, rows, vec![Provenance::Dixon { prime: p }; r])?;
    Ok(table.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::generate_group;

    #[test]
    fn primes() {
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(dixon_prime(4, 16), 13);
        assert_eq!(dixon_prime(2, 8), 7);
        assert_eq!(dixon_prime(4, 128), 29);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    fn roots_mod_p() {
        assert_eq!(pow_mod(primitive_root_of_order(4, 13), 2, 13), 12);
        assert_eq!(primitive_root_of_order(2, 7), 6);
    }

    #[test]
    fn cyclic_and_symmetric() {
        let c5 = generate_group(&[1usize], |a, b| (a + b) % 5, |a| a.to_string()).unwrap().0;
        let t = character_table(&c5).unwrap();
        assert_eq!(t.dims(), vec![1; 5]);
        assert_eq!(t.rows()[1].values().iter().filter(|v| v.order() == 5).count(), 4);
        let s3 = generate_group(
            &[[1u8, 0, 2], [1, 2, 0]],
            |p, q| [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]],
            |p| format!("{p:?}"),
        )
        .unwrap()
        .0;
        let t = character_table(&s3).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 2]);
        assert_eq!(t.provenance()[0], Provenance::Dixon { prime: 7 });
    }

    #[test]
    fn trivial_group() {
        let g = generate_group(&[0u8], |_, _| 0, |_| "e".into()).unwrap().0;
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims(), vec![1]);
    }
}
