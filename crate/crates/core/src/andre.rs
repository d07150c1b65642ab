//! Andre quasi-fields.
//!
//! Given a field `K`, a finite automorphism group `G` with norm
//! `N(x) = prod_{g in G} g(x)`, and a map `phi: N(K*) -> G` with
//! `phi(1) = id`, the left Andre quasi-field `K_phi` keeps the addition of
//! `K` and multiplies by
//!
//! ```text
//! x ⊙ y = x · alpha_x(y),    alpha_x = phi(N(x)),  alpha_0 = id.
//! ```
//!
//! The right version uses `x ⊙ y = alpha_y(x) · y`.

use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FiniteField, GaloisGroup, GfError};
use crate::quasifield::{QuasiField, QuasiFieldError};

pub const DEFAULT_PHI_BOUND: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AndreError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    QuasiField(#[from] QuasiFieldError),
    #[error("phi has {got} entries, the norm image has {expected} elements")]
    PhiLength { expected: usize, got: usize },
    #[error("phi(1) must be the identity (exponent 0), got {0}")]
    PhiAtOne(usize),
    #[error("phi entry {index} = {value} is not an element of a group of order {order}")]
    PhiOutOfRange { index: usize, value: usize, order: usize },
    #[error("{count} phi maps exceed the enumeration bound {bound}")]
    BoundExceeded { count: u128, bound: usize },
    #[error("cannot divide by zero")]
    DivideByZero,
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Left or right Andre multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AndreSide {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct AndreSpec {
    field: Arc<FiniteField>,
    group: Arc<GaloisGroup>,
    fixed: Vec<usize>,
    norm_image: Vec<usize>,
    norms: Vec<usize>,
    phi: Vec<usize>,
    alpha: Vec<usize>,
}

impl AndreSpec {
    /// `phi[i]` is the group index (generator exponent) assigned to the
    /// `i`-th smallest element of `N(K*)`.
    pub fn new(
        field: Arc<FiniteField>,
        group: Arc<GaloisGroup>,
        phi: Vec<usize>,
    ) -> Result<Self, AndreError> {
        let fixed = group.fixed_field(&field)?;
        let norm_image = group.norm_image(&field)?;
        let norms = (0..field.order())
            .map(|x| group.norm(&field, x))
            .collect::<Result<Vec<_>, _>>()?;
        Self::assemble(field, group, fixed, norm_image, norms, phi)
    }

    fn assemble(
        field: Arc<FiniteField>,
        group: Arc<GaloisGroup>,
        fixed: Vec<usize>,
        norm_image: Vec<usize>,
        norms: Vec<usize>,
        phi: Vec<usize>,
    ) -> Result<Self, AndreError> {
        if phi.len() != norm_image.len() {
            return Err(AndreError::PhiLength { expected: norm_image.len(), got: phi.len() });
        }
        if phi[0] != 0 {
            return Err(AndreError::PhiAtOne(phi[0]));
        }
        if let Some((index, &value)) = phi.iter().enumerate().find(|(_, &v)| v >= group.order()) {
            return Err(AndreError::PhiOutOfRange { index, value, order: group.order() });
        }
        let alpha = norms
            .iter()
            .enumerate()
            .map(|(x, &nx)| {
                if x == 0 {
                    0
                } else {
                    phi[norm_image.binary_search(&nx).expect("norm lies in the image")]
                }
            })
            .collect();
        Ok(Self { field, group, fixed, norm_image, norms, phi, alpha })
    }

    /// Convenience constructor from `GF(p^n)` and the subgroup fixing
    /// `GF(p^d)`.
    pub fn from_parameters(p: usize, n: usize, d: usize, phi: Vec<usize>) -> Result<Self, AndreError> {
        let field = FiniteField::new(p, n)?;
        let group = GaloisGroup::new(&field, d)?;
        Self::new(Arc::new(field), Arc::new(group), phi)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &GaloisGroup {
        &self.group
    }

    pub fn fixed_field(&self) -> &[usize] {
        &self.fixed
    }

    pub fn norm_image(&self) -> &[usize] {
        &self.norm_image
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn norm(&self, x: usize) -> usize {
        self.norms[x]
    }

    /// Group index of `alpha_x`.
    pub fn alpha(&self, x: usize) -> usize {
        self.alpha[x]
    }

    /// Group index of `phi(u)` for `u` in the norm image.
    pub fn phi_at(&self, u: usize) -> Option<usize> {
        self.norm_image.binary_search(&u).ok().map(|i| self.phi[i])
    }

    /// `x ⊙ y = x · alpha_x(y)`.
    #[inline]
    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.field.mul(x, self.group.apply(self.alpha[x], y))
    }

    /// `x ⊙ y = alpha_y(x) · y`.
    #[inline]
    pub fn odot_right(&self, x: usize, y: usize) -> usize {
        self.field.mul(self.group.apply(self.alpha[y], x), y)
    }

    pub fn is_trivial(&self) -> bool {
        self.phi.iter().all(|&g| g == 0)
    }

    fn tables(&self, side: AndreSide) -> Result<QuasiField, AndreError> {
        let q = self.field.order();
        let qf = match side {
            AndreSide::Left => QuasiField::from_fns(q, |a, b| self.field.add(a, b), |x, y| self.odot(x, y))?,
            AndreSide::Right => {
                QuasiField::from_fns(q, |a, b| self.field.add(a, b), |x, y| self.odot_right(x, y))?
            }
        };
        Ok(qf)
    }

    pub fn build(&self, side: AndreSide) -> Result<QuasiField, AndreError> {
        match side {
            AndreSide::Left => self.build_left(),
            AndreSide::Right => self.build_right(),
        }
    }

    /// The left quasi-field `K_phi`, verified against VW1–VW5.
    pub fn build_left(&self) -> Result<QuasiField, AndreError> {
        let qf = self.tables(AndreSide::Left)?;
        let report = qf.check_vw();
        if !report.is_left() {
            return Err(AndreError::Internal(format!("left Andre table fails its axioms:\n{report}")));
        }
        Ok(qf)
    }

    /// The right quasi-field, verified against VW1–VW3, VW4-r, VW5-r.
    pub fn build_right(&self) -> Result<QuasiField, AndreError> {
        let qf = self.tables(AndreSide::Right)?;
        let report = qf.check_vw();
        if !report.is_right() {
            return Err(AndreError::Internal(format!("right Andre table fails its axioms:\n{report}")));
        }
        Ok(qf)
    }

    /// The unique `x` with `x ⊙ a = b` in the left quasi-field:
    /// `x = b · (alpha_{a^-1 b}(a))^-1`.
    pub fn right_divide(&self, a: usize, b: usize) -> Result<usize, AndreError> {
        let q = self.field.order();
        if let Some(&v) = [a, b].iter().find(|&&v| v >= q) {
            return Err(AndreError::OutOfRange(v));
        }
        if a == 0 {
            return Err(AndreError::DivideByZero);
        }
        let k = &self.field;
        let c = k.mul(k.inv(a)?, b);
        let twisted = self.group.apply(self.alpha[c], a);
        Ok(k.mul(b, k.inv(twisted)?))
    }

    /// `phi` is a homomorphism `N(K*) -> G`.
    pub fn predicts_associative(&self) -> bool {
        let k = &self.field;
        self.norm_image.iter().zip(&self.phi).all(|(&u, &gu)| {
            self.norm_image.iter().zip(&self.phi).all(|(&v, &gv)| {
                self.phi_at(k.mul(u, v)) == Some(self.group.compose(gu, gv))
            })
        })
    }

    /// `phi` sends everything to the identity.
    pub fn predicts_right_distributive(&self) -> bool {
        self.is_trivial()
    }
}

/// Number of `phi` maps with `phi(1) = id`.
pub fn phi_count(group_order: usize, image_size: usize) -> u128 {
    (group_order as u128).pow(image_size.saturating_sub(1) as u32)
}

/// All specs over `(K, G)` in lexicographic order of `phi`.
pub fn enumerate_phi(field: Arc<FiniteField>, group: Arc<GaloisGroup>) -> Result<Vec<AndreSpec>, AndreError> {
    enumerate_phi_with_bound(field, group, DEFAULT_PHI_BOUND)
}

pub fn enumerate_phi_with_bound(
    field: Arc<FiniteField>,
    group: Arc<GaloisGroup>,
    bound: usize,
) -> Result<Vec<AndreSpec>, AndreError> {
    let fixed = group.fixed_field(&field)?;
    let norm_image = group.norm_image(&field)?;
    let count = phi_count(group.order(), norm_image.len());
    if count > bound as u128 {
        return Err(AndreError::BoundExceeded { count, bound });
    }
    let norms = (0..field.order())
        .map(|x| group.norm(&field, x))
        .collect::<Result<Vec<_>, _>>()?;
    let g = group.order();
    let mut phi = vec![0; norm_image.len()];
    let mut specs = Vec::with_capacity(count as usize);
    loop {
        specs.push(AndreSpec::assemble(
            field.clone(),
            group.clone(),
            fixed.clone(),
            norm_image.clone(),
            norms.clone(),
            phi.clone(),
        )?);
        let Some(i) = (1..phi.len()).rev().find(|&i| phi[i] + 1 < g) else {
            break;
        };
        phi[i] += 1;
        phi[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(specs)
}

pub fn build_left(spec: &AndreSpec) -> Result<QuasiField, AndreError> {
    spec.build_left()
}

pub fn build_right(spec: &AndreSpec) -> Result<QuasiField, AndreError> {
    spec.build_right()
}

pub fn right_divide(spec: &AndreSpec, a: usize, b: usize) -> Result<usize, AndreError> {
    spec.right_divide(a, b)
}

pub fn predicts_associative(spec: &AndreSpec) -> bool {
    spec.predicts_associative()
}

pub fn predicts_right_distributive(spec: &AndreSpec) -> bool {
    spec.predicts_right_distributive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn andre9() -> AndreSpec {
        AndreSpec::from_parameters(3, 2, 1, vec![0, 1]).unwrap()
    }

    #[test]
    fn andre9_products() {
        let s = andre9();
        assert_eq!(s.norm_image(), &[1, 2]);
        assert_eq!(s.fixed_field(), &[0, 1, 2]);
        let k = s.build_left().unwrap();
        assert_eq!(k.mul(4, 3), 7);
        for y in 0..9 {
            assert_eq!(k.mul(1, y), y);
            assert_eq!(k.mul(0, y), 0);
            assert_eq!(k.mul(y, 0), 0);
        }
        assert_eq!(k.check_vw().vw4_r, Some((1, 3, 3)));
        assert_eq!(s.build_right().unwrap(), k.opposite());
    }

    #[test]
    fn division() {
        let s = andre9();
        assert_eq!(s.right_divide(3, 2).unwrap(), 3);
        assert_eq!(s.right_divide(5, 0).unwrap(), 0);
        assert_eq!(s.right_divide(1, 7).unwrap(), 7);
        assert_eq!(s.right_divide(0, 1), Err(AndreError::DivideByZero));
    }

    #[test]
    fn enumeration_counts() {
        let field = Arc::new(FiniteField::new(3, 2).unwrap());
        let group = Arc::new(GaloisGroup::new(&field, 1).unwrap());
        let specs = enumerate_phi(field.clone(), group).unwrap();
        assert_eq!(specs.iter().map(|s| s.phi().to_vec()).collect::<Vec<_>>(), vec![vec![0, 0], vec![0, 1]]);

        let trivial = Arc::new(GaloisGroup::new(&field, 2).unwrap());
        assert_eq!(enumerate_phi(field, trivial).unwrap().len(), 1);

        let f16 = Arc::new(FiniteField::new(2, 4).unwrap());
        let g16 = Arc::new(GaloisGroup::new(&f16, 2).unwrap());
        let specs = enumerate_phi(f16.clone(), g16.clone()).unwrap();
        assert_eq!(specs.len(), 4);
        assert!(matches!(
            enumerate_phi_with_bound(f16, g16, 3),
            Err(AndreError::BoundExceeded { count: 4, bound: 3 })
        ));
    }

    #[test]
    fn predictions() {
        let s = andre9();
        assert!(s.predicts_associative());
        assert!(!s.predicts_right_distributive());
        let t = AndreSpec::from_parameters(3, 2, 1, vec![0, 0]).unwrap();
        assert!(t.predicts_associative() && t.predicts_right_distributive());
        let k = QuasiField::from_field(t.field()).unwrap();
        assert_eq!(t.build_left().unwrap(), k);
    }

    #[test]
    fn bad_phi() {
        assert_eq!(
            AndreSpec::from_parameters(3, 2, 1, vec![1, 0]).unwrap_err(),
            AndreError::PhiAtOne(1)
        );
        assert_eq!(
            AndreSpec::from_parameters(3, 2, 1, vec![0]).unwrap_err(),
            AndreError::PhiLength { expected: 2, got: 1 }
        );
        assert!(matches!(
            AndreSpec::from_parameters(3, 2, 1, vec![0, 2]),
            Err(AndreError::PhiOutOfRange { index: 1, value: 2, order: 2 })
        ));
    }
}
