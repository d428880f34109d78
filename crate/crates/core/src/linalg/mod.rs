//! Exact linear algebra over a [`FieldSpec`](crate::field::FieldSpec):
//! matrices, polynomials, subspaces, and subspace enumeration.

mod charpoly;
mod factor;
mod matrix;
mod poly;
mod subspace;

pub use charpoly::{char_poly, eigenspace, eigenvalues_in_field, min_poly, roots_in_field};
pub use matrix::{all_vectors, is_zero_vector, Matrix};
pub use poly::Polynomial;
pub use subspace::{
    enumerate_subspaces, gaussian_binomial, subspace_count, Subspace, SubspaceEnumeration,
    DEFAULT_ENUMERATION_CAP,
};

use crate::field::{FieldElement, FieldSpec};

/// Coordinate vector relative to some fixed basis.
pub type Vector = Vec<FieldElement>;

pub fn vec_zero(spec: FieldSpec, n: usize) -> Vector {
    vec![spec.zero(); n]
}

pub fn basis_vector(spec: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = vec_zero(spec, n);
    v[i] = spec.one();
    v
}

pub fn vec_add(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[FieldElement]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[FieldElement]) -> bool {
    a.iter().all(FieldElement::is_zero)
}
