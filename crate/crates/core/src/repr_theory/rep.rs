use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exact_arith::{CMatrix, Cyclotomic};
use crate::group_core::{verify_hom, DirectProduct, ElementId, FiniteGroup, GroupHom};

/// A matrix representation: one `dim × dim` matrix per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    group: FiniteGroup,
    dim: usize,
    matrices: Vec<CMatrix>,
}

/// Pairs `(a, b)` with `ρ(ab) ≠ ρ(a)ρ(b)`, checked over the whole group.
pub fn hom_violations(group: &FiniteGroup, matrices: &[CMatrix]) -> Vec<(ElementId, ElementId)> {
    let mut bad = Vec::new();
    for a in group.elements() {
        for b in group.elements() {
            let prod = matrices[a.0].mat_mul(&matrices[b.0]);
            if prod.as_ref() != Ok(&matrices[group.mul(a, b).0]) {
                bad.push((a, b));
            }
        }
    }
    bad
}

impl Representation {
    /// Validates shapes, `ρ(e) = I` and `ρ(ab) = ρ(a)ρ(b)` for every pair.
    pub fn new(group: FiniteGroup, matrices: Vec<CMatrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        let dim = matrices[0].rows();
        if dim == 0 || matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidRepresentation("matrices must be square of one size".into()));
        }
        if !matrices[group.identity().0].is_identity() {
            return Err(Error::InvalidRepresentation("identity is not sent to I".into()));
        }
        if let Some(&(a, b)) = hom_violations(&group, &matrices).first() {
            return Err(Error::InvalidRepresentation(format!(
                "ρ({}·{}) ≠ ρ({})ρ({})",
                group.label(a),
                group.label(b),
                group.label(a),
                group.label(b)
            )));
        }
        Ok(Representation { group, dim, matrices })
    }

    /// Trusted constructor for maps that are homomorphisms by construction.
    fn composed(group: FiniteGroup, dim: usize, matrices: Vec<CMatrix>) -> Self {
        Representation { group, dim, matrices }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::composed(group.clone(), 1, vec![CMatrix::identity(1); group.order()])
    }

    /// One-dimensional representation from its value on every element.
    pub fn from_linear_character(group: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        Self::new(group.clone(), values.into_iter().map(CMatrix::scalar).collect())
    }

    /// Left regular representation: `ρ(g) e_x = e_{gx}`.
    pub fn regular(group: &FiniteGroup) -> Self {
        let n = group.order();
        let matrices = group
            .elements()
            .map(|g| {
                let mut entries = vec![Cyclotomic::zero(); n * n];
                for x in group.elements() {
                    entries[group.mul(g, x).0 * n + x.0] = Cyclotomic::one();
                }
                CMatrix::new(n, n, entries).expect("n×n entries")
            })
            .collect();
        Self::composed(group.clone(), n, matrices)
    }

    /// Extends matrices given for the group's generators, then validates the result.
    pub fn from_generator_images(group: &FiniteGroup, images: &[CMatrix]) -> Result<Self> {
        let gens = group.generators();
        if gens.len() != images.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let dim = images.first().map_or(1, |m| m.rows());
        let mut mats: Vec<Option<CMatrix>> = vec![None; group.order()];
        mats[group.identity().0] = Some(CMatrix::identity(dim));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&s, img) in gens.iter().zip(images) {
                let y = group.mul(x, s);
                let m = mats[x.0].as_ref().unwrap().mat_mul(img)?;
                match &mats[y.0] {
                    Some(prev) if *prev != m => {
                        return Err(Error::InvalidRepresentation(
                            "generator matrices violate a group relation".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        mats[y.0] = Some(m);
                        queue.push_back(y);
                    }
                }
            }
        }
        Self::new(group.clone(), mats.into_iter().map(|m| m.unwrap()).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, x: ElementId) -> &CMatrix {
        &self.matrices[x.0]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// Exhaustive recheck of the homomorphism law.
    pub fn violations(&self) -> Vec<(ElementId, ElementId)> {
        hom_violations(&self.group, &self.matrices)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        same_group(&self.group, &other.group)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(Self::composed(self.group.clone(), self.dim + other.dim, matrices))
    }

    /// `g ↦ S⁻¹ ρ(g) S`.
    pub fn conjugate_by(&self, s: &CMatrix) -> Result<Representation> {
        if s.rows() != self.dim || s.cols() != self.dim {
            return Err(Error::Dimension(format!("{}×{} change of basis", s.rows(), s.cols())));
        }
        let si = s.inverse()?;
        let matrices = self
            .matrices
            .iter()
            .map(|m| si.mat_mul(m)?.mat_mul(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::composed(self.group.clone(), self.dim, matrices))
    }
}

pub(crate) fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GroupMismatch("objects live on different groups".into()))
    }
}

/// `ρ_a ⊗ ρ_b` on `G × H`, with Kronecker-product matrices.
pub fn tensor_product_rep(
    a: &Representation,
    b: &Representation,
    product: &DirectProduct,
) -> Result<Representation> {
    same_group(&a.group, product.proj_left.target())?;
    same_group(&b.group, product.proj_right.target())?;
    let matrices = product
        .group
        .elements()
        .map(|x| {
            a.matrix(product.proj_left.apply(x))
                .kron(b.matrix(product.proj_right.apply(x)))
        })
        .collect();
    Ok(Representation::composed(product.group.clone(), a.dim * b.dim, matrices))
}

/// `ρ ∘ p` for a surjective homomorphism `p: G → G/H`.
pub fn pullback_rep(rep: &Representation, projection: &GroupHom) -> Result<Representation> {
    same_group(&rep.group, projection.target())?;
    if !projection.is_surjective() {
        return Err(Error::InvalidHom("projection is not surjective".into()));
    }
    if !verify_hom(projection).is_hom() {
        return Err(Error::InvalidHom("projection is not a homomorphism".into()));
    }
    let matrices = projection
        .source()
        .elements()
        .map(|x| rep.matrix(projection.apply(x)).clone())
        .collect();
    Ok(Representation::composed(projection.source().clone(), rep.dim, matrices))
}

/// `ρ ∘ ι` for an injective homomorphism `ι: H → G`.
pub fn restrict_rep(rep: &Representation, embedding: &GroupHom) -> Result<Representation> {
    same_group(&rep.group, embedding.target())?;
    if !embedding.is_injective() {
        return Err(Error::InvalidHom("embedding is not injective".into()));
    }
    if !verify_hom(embedding).is_hom() {
        return Err(Error::InvalidHom("embedding is not a homomorphism".into()));
    }
    let matrices = embedding
        .source()
        .elements()
        .map(|x| rep.matrix(embedding.apply(x)).clone())
        .collect();
    Ok(Representation::composed(embedding.source().clone(), rep.dim, matrices))
}

/// All `S` with `S·a(g) = b(g)·S` for every generator `g`, as a basis of the solution space.
///
/// Brute-force linear algebra; used to cross-check the character criterion on small cases.
pub fn intertwiners(a: &Representation, b: &Representation) -> Result<Vec<CMatrix>> {
    same_group(&a.group, &b.group)?;
    let (m, n) = (b.dim, a.dim);
    // unknown S is m×n, flattened row-major
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    for &g in a.group.generators() {
        let (ra, rb) = (a.matrix(g), b.matrix(g));
        for i in 0..m {
            for j in 0..n {
                let mut eq = vec![Cyclotomic::zero(); m * n];
                for k in 0..n {
                    eq[i * n + k] = &eq[i * n + k] + ra.get(k, j);
                }
                for k in 0..m {
                    eq[k * n + j] = &eq[k * n + j] - rb.get(i, k);
                }
                rows.push(eq);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Cyclotomic::zero(); m * n]);
    }
    let system = CMatrix::from_rows(rows)?;
    system
        .nullspace()
        .into_iter()
        .map(|v| CMatrix::new(m, n, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::{direct_product, generate_group};

    fn cyclic(n: usize) -> FiniteGroup {
        generate_group(&[1usize % n], |a, b| (a + b) % n, |a| a.to_string()).unwrap().0
    }

    #[test]
    fn generator_extension_and_validation() {
        let c4 = cyclic(4);
        let rot = CMatrix::parse("0,-1;1,0").unwrap();
        let rho = Representation::from_generator_images(&c4, &[rot]).unwrap();
        assert_eq!(rho.dim(), 2);
        assert!(rho.violations().is_empty());
        // a reflection has order 2, not 4
        let refl = CMatrix::parse("0,1;1,0").unwrap();
        let c3 = cyclic(3);
        assert!(Representation::from_generator_images(&c3, &[refl]).is_err());
        let mut mats = rho.matrices().to_vec();
        mats.swap(1, 2);
        assert!(Representation::new(c4, mats).is_err());
    }

    #[test]
    fn tensor_and_restrict() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let dp = direct_product(&c2, &c3).unwrap();
        let sign = Representation::from_linear_character(
            &c2,
            vec![Cyclotomic::one(), Cyclotomic::from_i64(-1)],
        )
        .unwrap();
        let reg = Representation::regular(&c3);
        let t = tensor_product_rep(&sign, &reg, &dp).unwrap();
        assert_eq!(t.dim(), 3);
        assert!(t.violations().is_empty());
        let back = restrict_rep(&t, &dp.inj_right).unwrap();
        assert_eq!(back, reg);
        assert!(pullback_rep(&sign, &dp.proj_left).unwrap().violations().is_empty());
        assert!(restrict_rep(&t, &dp.proj_left).is_err());
    }

    #[test]
    fn intertwiner_space() {
        let c4 = cyclic(4);
        let rot = CMatrix::parse("0,-1;1,0").unwrap();
        let rho = Representation::from_generator_images(&c4, &[rot]).unwrap();
        // commutant of a rotation by 90° is {aI + bJ}: two-dimensional
        assert_eq!(intertwiners(&rho, &rho).unwrap().len(), 2);
        let s = CMatrix::parse("1,1;0,1").unwrap();
        let other = rho.conjugate_by(&s).unwrap();
        assert!(other.violations().is_empty());
        assert_eq!(intertwiners(&rho, &other).unwrap().len(), 2);
    }
}
