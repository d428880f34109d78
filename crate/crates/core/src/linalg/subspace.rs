//! Subspaces of F^n in canonical reduced row-echelon form, plus the
//! RREF-profile enumeration of all subspaces of F_p^n.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::matrix::Matrix;
use crate::linalg::Vector;

/// Default cap on how many subspaces an exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A subspace of the coordinate space, stored as its unique RREF basis.
/// Two values are equal exactly when they are the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    spec: FieldSpec,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors, canonicalized through RREF.
    pub fn from_rows(spec: FieldSpec, ambient: usize, rows: Vec<Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient), "ragged spanning set");
        let (r, rank, pivots) = Matrix::from_rows(spec, rows).rref();
        let basis_rows: Vec<Vector> = (0..rank).map(|i| r.row(i)).collect();
        Subspace {
            ambient,
            spec,
            basis: Matrix::from_rows_with_cols(spec, ambient, basis_rows),
            pivots,
        }
    }

    /// Builds directly from rows already known to be in RREF with no zero
    /// rows; pivot columns are read off. Used by the enumerator.
    fn from_rref_rows(spec: FieldSpec, ambient: usize, rows: Vec<Vector>, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient,
            spec,
            basis: Matrix::from_rows_with_cols(spec, ambient, rows),
            pivots,
        }
    }

    pub fn zero(spec: FieldSpec, ambient: usize) -> Self {
        Subspace::from_rows(spec, ambient, Vec::new())
    }

    pub fn full(spec: FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(spec, ambient);
        Subspace::from_rows(spec, ambient, (0..ambient).map(|i| id.row(i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces v against the RREF basis; membership means the residue is 0.
    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for j in 0..self.ambient {
                let delta = &factor * &self.basis[(row, j)];
                v[j] = &v[j] - &delta;
            }
        }
        v.iter().all(FieldElement::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.spec, self.ambient, rows)
    }

    /// Intersection via the double annihilator: U = {v : A_U v = 0} where the
    /// rows of A_U span the dot-product annihilator of U.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.annihilator_rows();
        rows.extend(other.annihilator_rows());
        if rows.is_empty() {
            return Subspace::full(self.spec, self.ambient);
        }
        Matrix::from_rows_with_cols(self.spec, self.ambient, rows).kernel()
    }

    fn annihilator_rows(&self) -> Vec<Vector> {
        self.basis.kernel().basis_rows()
    }

    /// Coordinates of v in the basis of this subspace, if v belongs to it.
    pub fn coordinates_of(&self, v: &[FieldElement]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        // The pivot coordinates of v read off the combination directly.
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

impl Matrix {
    /// `from_rows` that keeps the column count when there are no rows.
    pub(crate) fn from_rows_with_cols(spec: FieldSpec, cols: usize, rows: Vec<Vector>) -> Matrix {
        if rows.is_empty() {
            Matrix::zeros(spec, 0, cols)
        } else {
            Matrix::from_rows(spec, rows)
        }
    }
}

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial), or None on
/// u128 overflow.
pub fn gaussian_binomial(p: u64, n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    // Product formula (p^n - 1)(p^{n-1} - 1).../(p^k - 1)... evaluated as an
    // exact integer by cancelling one factor at a time.
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num.checked_mul(pow_u128(p, n - i)?.checked_sub(1)?)?;
        den = den.checked_mul(pow_u128(p, i + 1)?.checked_sub(1)?)?;
        // Keep intermediate values small: the running product is always
        // divisible after each full step pair.
        if num % den == 0 {
            num /= den;
            den = 1;
        }
    }
    if den != 0 && num % den == 0 {
        Some(num / den)
    } else {
        None
    }
}

fn pow_u128(p: u64, e: usize) -> Option<u128> {
    (p as u128).checked_pow(e as u32)
}

/// Total count of subspaces to be enumerated, or None on overflow.
pub fn subspace_count(p: u64, ambient: usize, dim: Option<usize>) -> Option<u128> {
    match dim {
        Some(k) => gaussian_binomial(p, ambient, k),
        None => {
            let mut total = 0u128;
            for k in 0..=ambient {
                total = total.checked_add(gaussian_binomial(p, ambient, k)?)?;
            }
            Some(total)
        }
    }
}

/// Yields every subspace of F_p^ambient exactly once (optionally only those
/// of one dimension), in a fixed order: by dimension, then pivot pattern
/// (lexicographic), then free entries (lexicographic, last entry fastest).
pub fn enumerate_subspaces(
    spec: FieldSpec,
    ambient: usize,
    dim: Option<usize>,
    cap: u128,
) -> Result<SubspaceEnumeration> {
    let p = spec
        .modulus()
        .ok_or(Error::UnsupportedField("a prime field"))?;
    if let Some(k) = dim {
        assert!(k <= ambient, "requested dimension exceeds ambient space");
    }
    let count = subspace_count(p, ambient, dim).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let dims = match dim {
        Some(k) => vec![k],
        None => (0..=ambient).collect(),
    };
    Ok(SubspaceEnumeration {
        spec,
        ambient,
        elements: spec.elements()?,
        dims,
        dim_index: 0,
        pivots: None,
        free_positions: Vec::new(),
        odometer: Vec::new(),
        exhausted_profile: true,
    })
}

#[derive(Debug)]
pub struct SubspaceEnumeration {
    spec: FieldSpec,
    ambient: usize,
    elements: Vec<FieldElement>,
    dims: Vec<usize>,
    dim_index: usize,
    pivots: Option<Vec<usize>>,
    free_positions: Vec<(usize, usize)>,
    odometer: Vec<usize>,
    exhausted_profile: bool,
}

impl SubspaceEnumeration {
    fn build_current(&self) -> Subspace {
        let pivots = self.pivots.as_ref().expect("profile is set");
        let k = pivots.len();
        let mut rows = vec![vec![self.spec.zero(); self.ambient]; k];
        for (r, &pc) in pivots.iter().enumerate() {
            rows[r][pc] = self.spec.one();
        }
        for (slot, &(r, c)) in self.free_positions.iter().enumerate() {
            rows[r][c] = self.elements[self.odometer[slot]].clone();
        }
        Subspace::from_rref_rows(self.spec, self.ambient, rows, pivots.clone())
    }

    /// Positions (row, col) that are free in the RREF profile: to the right
    /// of the row's pivot and not in any pivot column.
    fn set_profile(&mut self, pivots: Vec<usize>) {
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..self.ambient {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        self.free_positions = free;
        self.odometer = vec![0; self.free_positions.len()];
        self.pivots = Some(pivots);
        self.exhausted_profile = false;
    }

    /// Advances to the next free-entry assignment; false when wrapped.
    fn step_odometer(&mut self) -> bool {
        let p = self.elements.len();
        for slot in (0..self.odometer.len()).rev() {
            self.odometer[slot] += 1;
            if self.odometer[slot] < p {
                return true;
            }
            self.odometer[slot] = 0;
        }
        false
    }

    /// Next pivot-column combination in lexicographic order.
    fn step_profile(&mut self) -> bool {
        let k = self.dims[self.dim_index];
        let n = self.ambient;
        let next = match self.pivots.take() {
            None => {
                if k > n {
                    return false;
                }
                (0..k).collect()
            }
            Some(mut pivots) => {
                let mut i = k;
                loop {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    if pivots[i] < n - (k - i) {
                        pivots[i] += 1;
                        for j in (i + 1)..k {
                            pivots[j] = pivots[j - 1] + 1;
                        }
                        break pivots;
                    }
                }
            }
        };
        self.set_profile(next);
        true
    }
}

impl Iterator for SubspaceEnumeration {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            if self.dim_index >= self.dims.len() {
                return None;
            }
            if self.exhausted_profile {
                if self.step_profile() {
                    return Some(self.build_current());
                }
                self.dim_index += 1;
                self.pivots = None;
                self.exhausted_profile = true;
                continue;
            }
            if self.step_odometer() {
                return Some(self.build_current());
            }
            self.exhausted_profile = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::all_vectors;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        let q = FieldSpec::rationals();
        let a = Subspace::from_rows(q, 2, vec![vec![q.from_integer(2), q.from_integer(4)]]);
        let b = Subspace::from_rows(q, 2, vec![vec![q.from_integer(1), q.from_integer(2)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let s = f(3);
        let u = Subspace::from_rows(s, 3, vec![
            vec![s.one(), s.zero(), s.zero()],
            vec![s.zero(), s.one(), s.zero()],
        ]);
        let v = Subspace::from_rows(s, 3, vec![
            vec![s.zero(), s.one(), s.zero()],
            vec![s.zero(), s.zero(), s.one()],
        ]);
        let both = u.sum(&v);
        let meet = u.intersect(&v);
        assert_eq!(both.dim(), 3);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&[s.zero(), s.one(), s.zero()]));
        // dim(U) + dim(V) = dim(U+V) + dim(U∩V)
        assert_eq!(u.dim() + v.dim(), both.dim() + meet.dim());
    }

    #[test]
    fn enumerate_f2_dim2_has_five_subspaces() {
        // Hand list over F_2^2: 0, <e1>, <e2>, <e1+e2>, full.
        let all: Vec<_> = enumerate_subspaces(f(2), 2, None, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 5);
        let dims: Vec<usize> = all.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 1, 2]);
    }

    #[test]
    fn enumerate_f3_dim4_has_212_subspaces() {
        // Gaussian binomials for (3,4): 1 + 40 + 130 + 40 + 1 = 212.
        assert_eq!(gaussian_binomial(3, 4, 1), Some(40));
        assert_eq!(gaussian_binomial(3, 4, 2), Some(130));
        let all: Vec<_> = enumerate_subspaces(f(3), 4, None, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 212);
    }

    #[test]
    fn enumerate_dim_zero_yields_only_origin() {
        for p in [2u64, 3, 5] {
            let mut it = enumerate_subspaces(f(p), 3, Some(0), DEFAULT_ENUMERATION_CAP).unwrap();
            let first = it.next().unwrap();
            assert!(first.is_zero());
            assert!(it.next().is_none());
        }
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        // Cross-check the count against a brute-force scan of all spanning
        // sets of F_2^3.
        let spec = f(2);
        let subs: Vec<_> = enumerate_subspaces(spec, 3, None, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .collect();
        for (i, a) in subs.iter().enumerate() {
            for b in &subs[i + 1..] {
                assert_ne!(a, b);
            }
        }
        let vectors = all_vectors(spec, 3).unwrap();
        let mut seen = Vec::new();
        for a in &vectors {
            for b in &vectors {
                let s = Subspace::from_rows(spec, 3, vec![a.clone(), b.clone()]);
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
        }
        // Spans of <= 2 vectors give every subspace of dim <= 2; the full
        // space adds one more.
        assert_eq!(seen.len() + 1, subs.len());
    }

    #[test]
    fn coordinates_round_trip_through_the_basis() {
        let s = f(5);
        let sub = Subspace::from_rows(s, 3, vec![
            vec![s.from_integer(1), s.from_integer(2), s.from_integer(0)],
            vec![s.from_integer(0), s.from_integer(0), s.from_integer(1)],
        ]);
        let v = vec![s.from_integer(3), s.from_integer(6), s.from_integer(4)];
        let coords = sub.coordinates_of(&v).unwrap();
        let mut rebuilt = vec![s.zero(); 3];
        for (c, row) in coords.iter().zip(sub.basis_rows()) {
            for (t, x) in row.iter().enumerate() {
                rebuilt[t] = &rebuilt[t] + &(c * x);
            }
        }
        assert_eq!(rebuilt, v);
        let outside = vec![s.one(), s.zero(), s.zero()];
        assert_eq!(sub.coordinates_of(&outside), None);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_subspaces(f(3), 4, None, 10).unwrap_err();
        assert_eq!(err, Error::CapExceeded { count: 212, cap: 10 });
    }

    #[test]
    fn rationals_cannot_be_enumerated() {
        let err = enumerate_subspaces(FieldSpec::rationals(), 2, None, 10).unwrap_err();
        assert_eq!(err, Error::UnsupportedField("a prime field"));
    }
}
