//! Representations of structure-constant Lie algebras: validation against
//! the bracket-to-commutator law, invariant subspaces and complements,
//! complete reducibility, symmetric powers of 2-dimensional modules, weight
//! decompositions, common eigenvectors, and triangularization.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::liealg::LieAlgebra;
use crate::linalg::{
    eigenspace, eigenvalues_in_field, enumerate_subspaces, vec_is_zero, vec_scale, Matrix,
    Subspace, Vector,
};

/// A validated representation: one module_dim x module_dim matrix per basis
/// element, satisfying rho([b_i, b_j]) = [rho(b_i), rho(b_j)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    module_dim: usize,
    mats: Vec<Matrix>,
}

/// Eigenvalues of an action matrix paired with their eigenspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub weights: Vec<FieldElement>,
    pub spaces: Vec<Subspace>,
}

impl WeightDecomposition {
    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn weight_of(&self, w: &FieldElement) -> Option<&Subspace> {
        self.weights
            .iter()
            .position(|x| x == w)
            .map(|i| &self.spaces[i])
    }
}

/// Validates the homomorphism law on every basis pair.
pub fn check_representation(algebra: &LieAlgebra, mats: Vec<Matrix>) -> Result<Representation> {
    if mats.len() != algebra.dim() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} matrices, got {}",
            algebra.dim(),
            mats.len()
        )));
    }
    let module_dim = mats.first().map_or(0, Matrix::rows);
    for m in &mats {
        if !m.is_square() || m.rows() != module_dim || m.spec() != algebra.spec() {
            return Err(Error::DimensionMismatch(
                "action matrices must be square, equal-sized, over the algebra's field".into(),
            ));
        }
    }
    let rep = Representation {
        algebra: algebra.clone(),
        module_dim,
        mats,
    };
    for i in 0..algebra.dim() {
        for j in (i + 1)..algebra.dim() {
            let lhs = rep.act(algebra.bracket_basis(i, j));
            let rhs = rep.mats[i].commutator(&rep.mats[j]);
            if lhs != rhs {
                return Err(Error::HomomorphismViolation {
                    i,
                    j,
                    difference: Box::new(lhs.sub(&rhs)),
                });
            }
        }
    }
    Ok(rep)
}

/// The adjoint representation; it passes validation exactly because the
/// Jacobi identity holds.
pub fn adjoint_rep(algebra: &LieAlgebra) -> Representation {
    let mats = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
    check_representation(algebra, mats).expect("Jacobi identity makes ad a representation")
}

impl Representation {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// Action matrix of an algebra element given by coordinates.
    pub fn act(&self, v: &[FieldElement]) -> Matrix {
        assert_eq!(v.len(), self.algebra.dim());
        let mut out = Matrix::zeros(self.algebra.spec(), self.module_dim, self.module_dim);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.mats[i].scale(c));
            }
        }
        out
    }

    /// Smallest subspace containing the vectors and closed under the action,
    /// computed by saturation.
    pub fn submodule_generated(&self, vectors: &[Vector]) -> Result<Subspace> {
        for v in vectors {
            if v.len() != self.module_dim {
                return Err(Error::DimensionMismatch(format!(
                    "module has dimension {} but generator has length {}",
                    self.module_dim,
                    v.len()
                )));
            }
        }
        let spec = self.algebra.spec();
        let mut span = Subspace::from_rows(spec, self.module_dim, vectors.to_vec());
        loop {
            let mut rows = span.basis_rows();
            for m in &self.mats {
                for v in span.basis_rows() {
                    rows.push(m.mul_vec(&v));
                }
            }
            let bigger = Subspace::from_rows(spec, self.module_dim, rows);
            if bigger == span {
                return Ok(span);
            }
            span = bigger;
        }
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.module_dim);
        self.mats
            .iter()
            .all(|m| s.basis_rows().iter().all(|v| s.contains_vector(&m.mul_vec(v))))
    }

    /// All subspaces invariant under every action matrix, in enumeration
    /// order (prime fields only).
    pub fn invariant_subspaces(&self, cap: u128) -> Result<Vec<Subspace>> {
        Ok(
            enumerate_subspaces(self.algebra.spec(), self.module_dim, None, cap)?
                .filter(|s| self.is_invariant(s))
                .collect(),
        )
    }

    /// First invariant w (in enumeration order over all subspaces) with
    /// u ⊕ w = module space, or None after the exhaustive scan.
    pub fn find_complement(&self, u: &Subspace) -> Result<Option<Subspace>> {
        self.find_complement_capped(u, crate::linalg::DEFAULT_ENUMERATION_CAP)
    }

    pub fn find_complement_capped(&self, u: &Subspace, cap: u128) -> Result<Option<Subspace>> {
        if !self.is_invariant(u) {
            return Err(Error::NotInvariant);
        }
        let n = self.module_dim;
        for w in enumerate_subspaces(self.algebra.spec(), n, None, cap)? {
            if u.dim() + w.dim() != n {
                continue;
            }
            let stacked = u.sum(&w);
            if stacked.dim() == n && self.is_invariant(&w) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Every invariant subspace admits an invariant complement. The search
    /// for complements only needs to range over the invariant subspaces.
    pub fn is_completely_reducible(&self, cap: u128) -> Result<bool> {
        let invariant = self.invariant_subspaces(cap)?;
        let n = self.module_dim;
        for u in &invariant {
            let has_complement = invariant
                .iter()
                .any(|w| u.dim() + w.dim() == n && u.sum(w).dim() == n);
            if !has_complement {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The n-th symmetric power of a 2-dimensional module, on the monomial
    /// basis (x^n, x^{n-1}y, ..., y^n), acting by derivations.
    pub fn sym_power(&self, n: usize) -> Result<Representation> {
        if self.module_dim != 2 {
            return Err(Error::BadParameters(
                "symmetric powers are built from a 2-dimensional module".into(),
            ));
        }
        if n == 0 {
            return Err(Error::BadParameters("symmetric power needs n >= 1".into()));
        }
        let spec = self.algebra.spec();
        let dim = n + 1;
        let mut mats = Vec::with_capacity(self.mats.len());
        for m in &self.mats {
            // x -> alpha x + beta y, y -> gamma x + delta y extended as a
            // derivation: monomial index k stands for x^{n-k} y^k.
            let (alpha, beta) = (&m[(0, 0)], &m[(1, 0)]);
            let (gamma, delta) = (&m[(0, 1)], &m[(1, 1)]);
            let mut s = Matrix::zeros(spec, dim, dim);
            for k in 0..=n {
                let a = spec.from_integer((n - k) as i64);
                let b = spec.from_integer(k as i64);
                s[(k, k)] = &(&a * alpha) + &(&b * delta);
                if k + 1 <= n {
                    s[(k + 1, k)] = &a * beta;
                }
                if k >= 1 {
                    s[(k - 1, k)] = &b * gamma;
                }
            }
            mats.push(s);
        }
        check_representation(&self.algebra, mats)
    }

    /// Eigenvalue/eigenspace pairs of the action of h_vector, weights sorted
    /// ascending. Errors with the partial decomposition when the eigenspaces
    /// do not fill the module.
    pub fn weight_decomposition(&self, h_vector: &[FieldElement]) -> Result<WeightDecomposition> {
        let action = self.act(h_vector);
        let weights = eigenvalues_in_field(&action)?;
        let spaces: Vec<Subspace> = weights
            .iter()
            .map(|w| eigenspace(&action, w))
            .collect::<Result<_>>()?;
        let decomp = WeightDecomposition { weights, spaces };
        if decomp.total_dim() < self.module_dim {
            return Err(Error::IncompleteSplit {
                partial: Box::new(decomp),
            });
        }
        Ok(decomp)
    }
}

/// Verifies the highest-weight ladder of the n-th symmetric power of the
/// standard 2-dimensional sl2 module over the rationals: with v = x^n,
/// e(f^k v) = k(n-k+1) f^{k-1} v for k = 1..n, f^{n+1} v = 0, and the e/f
/// actions shift weights by +2/-2.
pub fn ladder_check(n: usize) -> Result<bool> {
    use crate::field::FieldSpec;
    use crate::liealg::{builtin, sl_basis_matrices, BuiltinName};

    let q = FieldSpec::rationals();
    let sl2 = builtin(BuiltinName::Sl2, q, None)?;
    let standard = check_representation(&sl2, sl_basis_matrices(q, 2))?;
    let sym = standard.sym_power(n)?;
    let e_mat = sym.mat(0);
    let f_mat = sym.mat(1);
    let h_vec = sl2.basis_element(2);

    let mut v = vec![q.zero(); n + 1];
    v[0] = q.one();
    let mut f_powers = vec![v.clone()];
    for _ in 0..=n {
        f_powers.push(f_mat.mul_vec(f_powers.last().unwrap()));
    }
    if !vec_is_zero(&f_powers[n + 1]) {
        return Ok(false);
    }
    for k in 1..=n {
        let coeff = q.from_integer((k * (n - k + 1)) as i64);
        let lhs = e_mat.mul_vec(&f_powers[k]);
        if lhs != vec_scale(&coeff, &f_powers[k - 1]) {
            return Ok(false);
        }
    }

    let decomp = sym.weight_decomposition(&h_vec)?;
    let two = q.from_integer(2);
    for (w, space) in decomp.weights.iter().zip(&decomp.spaces) {
        for (mat, shift) in [(e_mat, &two), (f_mat, &(-&two))] {
            let target = w + shift;
            for b in space.basis_rows() {
                let image = mat.mul_vec(&b);
                if vec_is_zero(&image) {
                    continue;
                }
                match decomp.weight_of(&target) {
                    Some(t) if t.contains_vector(&image) => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// Searches for a vector that is simultaneously an eigenvector of every
/// matrix, with all eigenvalues in the base field; None certifies that no
/// such vector exists over the base field. Eigenvalue candidates are tried
/// in ascending order, so the answer is deterministic.
pub fn common_eigenvector(
    mats: &[Matrix],
) -> Result<Option<(Vector, Vec<FieldElement>)>> {
    let (spec, n) = validate_family(mats)?;
    fn search(
        mats: &[Matrix],
        idx: usize,
        current: &Subspace,
        lambdas: &mut Vec<FieldElement>,
    ) -> Result<Option<(Vector, Vec<FieldElement>)>> {
        if current.is_zero() {
            return Ok(None);
        }
        if idx == mats.len() {
            return Ok(Some((current.basis().row(0), lambdas.clone())));
        }
        for lam in eigenvalues_in_field(&mats[idx])? {
            let space = eigenspace(&mats[idx], &lam)?;
            let next = current.intersect(&space);
            lambdas.push(lam);
            if let Some(found) = search(mats, idx + 1, &next, lambdas)? {
                return Ok(Some(found));
            }
            lambdas.pop();
        }
        Ok(None)
    }
    search(mats, 0, &Subspace::full(spec, n), &mut Vec::new())
}

/// A change of basis P with P^{-1} m P upper triangular for every m, built
/// by iterating `common_eigenvector` on quotients; None when some stage has
/// no common eigenvector over the base field.
pub fn triangularize(mats: &[Matrix]) -> Result<Option<Matrix>> {
    let (spec, n) = validate_family(mats)?;
    if n == 0 {
        return Ok(Some(Matrix::identity(spec, 0)));
    }
    let Some((v, _)) = common_eigenvector(mats)? else {
        return Ok(None);
    };
    // Extend v to a basis with greedily chosen standard vectors.
    let mut cols = vec![v];
    for i in 0..n {
        if cols.len() == n {
            break;
        }
        let mut e = vec![spec.zero(); n];
        e[i] = spec.one();
        let mut candidate = cols.clone();
        candidate.push(e);
        if Matrix::from_rows(spec, candidate.clone()).rank() == candidate.len() {
            cols = candidate;
        }
    }
    let basis = Matrix::from_rows(spec, cols).transpose();
    let inv = basis.inverse().expect("columns were chosen independent");
    let conjugated: Vec<Matrix> = mats.iter().map(|m| inv.matmul(m).matmul(&basis)).collect();
    let sub: Vec<Matrix> = conjugated
        .iter()
        .map(|m| {
            let mut s = Matrix::zeros(spec, n - 1, n - 1);
            for i in 1..n {
                for j in 1..n {
                    s[(i - 1, j - 1)] = m[(i, j)].clone();
                }
            }
            s
        })
        .collect();
    let Some(p_sub) = triangularize(&sub)? else {
        return Ok(None);
    };
    let mut block = Matrix::identity(spec, n);
    for i in 1..n {
        for j in 1..n {
            block[(i, j)] = p_sub[(i - 1, j - 1)].clone();
        }
    }
    Ok(Some(basis.matmul(&block)))
}

fn validate_family(mats: &[Matrix]) -> Result<(crate::field::FieldSpec, usize)> {
    let first = mats.first().ok_or_else(|| {
        Error::DimensionMismatch("need at least one matrix".into())
    })?;
    let (spec, n) = (first.spec(), first.rows());
    for m in mats {
        if !m.is_square() || m.rows() != n || m.spec() != spec {
            return Err(Error::DimensionMismatch(
                "matrices must be square, equal-sized, over one field".into(),
            ));
        }
    }
    Ok((spec, n))
}

/// True when every entry strictly below the diagonal vanishes.
pub fn is_upper_triangular(m: &Matrix) -> bool {
    for i in 0..m.rows() {
        for j in 0..i.min(m.cols()) {
            if !m[(i, j)].is_zero() {
                return false;
            }
        }
    }
    true
}
