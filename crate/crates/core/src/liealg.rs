//! Structure-constant Lie algebras: construction with Jacobi validation,
//! brackets and adjoint maps, derived/lower-central series, ideals,
//! radical, center, simplicity, and the builtin catalog.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{
    basis_vector, enumerate_subspaces, vec_add, vec_is_zero, vec_zero, Matrix, Subspace,
    Vector,
};

/// A finite-dimensional Lie algebra presented by structure constants on a
/// labelled basis: `[b_i, b_j] = sum_k c[i][j][k] b_k`. Values of this type
/// always satisfy antisymmetry and the Jacobi identity; the constructors
/// reject anything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    spec: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
}

/// One line of a bracket table: `[left, right] = sum of (coeff, label)`.
#[derive(Debug, Clone)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<(FieldElement, String)>,
}

impl LieAlgebra {
    /// Builds from a sparse table of brackets on unordered basis pairs.
    /// Unlisted pairs default to zero; both orders of one pair may not be
    /// listed; a self-bracket must be zero.
    pub fn from_bracket_table(
        spec: FieldSpec,
        labels: &[&str],
        entries: &[BracketEntry],
    ) -> Result<LieAlgebra> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        check_labels(&labels)?;
        let dim = labels.len();
        let index = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))
        };
        let mut table = vec![vec![vec_zero(spec, dim); dim]; dim];
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for entry in entries {
            let i = index(&entry.left)?;
            let j = index(&entry.right)?;
            let mut rhs = vec_zero(spec, dim);
            for (coeff, label) in &entry.terms {
                if !spec.contains(coeff) {
                    return Err(Error::MixedFields);
                }
                let k = index(label)?;
                rhs[k] = &rhs[k] + coeff;
            }
            if i == j {
                if !vec_is_zero(&rhs) {
                    return Err(Error::AntisymmetryViolation(format!(
                        "[{0}, {0}] must be 0",
                        entry.left
                    )));
                }
                continue;
            }
            let key = (i.min(j), i.max(j));
            if seen.contains(&key) {
                return Err(Error::DuplicatePair(
                    labels[key.0].clone(),
                    labels[key.1].clone(),
                ));
            }
            seen.push(key);
            table[j][i] = rhs.iter().map(|c| -c).collect();
            table[i][j] = rhs;
        }
        Self::from_structure_constants(spec, labels, table)
    }

    /// Convenience wrapper with integer coefficients.
    pub fn from_integer_table(
        spec: FieldSpec,
        labels: &[&str],
        entries: &[(&str, &str, &[(i64, &str)])],
    ) -> Result<LieAlgebra> {
        let entries: Vec<BracketEntry> = entries
            .iter()
            .map(|(l, r, terms)| BracketEntry {
                left: l.to_string(),
                right: r.to_string(),
                terms: terms
                    .iter()
                    .map(|&(c, lab)| (spec.from_integer(c), lab.to_string()))
                    .collect(),
            })
            .collect();
        Self::from_bracket_table(spec, labels, &entries)
    }

    /// Builds from the full tensor, validating antisymmetry and Jacobi on
    /// every basis triple.
    pub fn from_structure_constants(
        spec: FieldSpec,
        labels: Vec<String>,
        table: Vec<Vec<Vector>>,
    ) -> Result<LieAlgebra> {
        check_labels(&labels)?;
        let dim = labels.len();
        assert_eq!(table.len(), dim);
        assert!(table.iter().all(|row| row.len() == dim));
        assert!(table
            .iter()
            .all(|row| row.iter().all(|v| v.len() == dim && v.iter().all(|c| spec.contains(c)))));
        let algebra = LieAlgebra { spec, dim, labels, table };
        algebra.check_antisymmetry()?;
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..self.dim {
            if !vec_is_zero(&self.table[i][i]) {
                return Err(Error::AntisymmetryViolation(format!(
                    "[{0}, {0}] is nonzero",
                    self.labels[i]
                )));
            }
            for j in 0..i {
                let neg: Vector = self.table[j][i].iter().map(|c| -c).collect();
                if self.table[i][j] != neg {
                    return Err(Error::AntisymmetryViolation(format!(
                        "[{}, {}] != -[{}, {}]",
                        self.labels[i], self.labels[j], self.labels[j], self.labels[i]
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let mut sum = self.bracket_coords(&self.table[i][j], k);
                    sum = vec_add(&sum, &self.bracket_coords(&self.table[j][k], i));
                    sum = vec_add(&sum, &self.bracket_coords(&self.table[k][i], j));
                    if !vec_is_zero(&sum) {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// [v, b_k] for a coordinate vector v.
    fn bracket_coords(&self, v: &[FieldElement], k: usize) -> Vector {
        let mut out = vec_zero(self.spec, self.dim);
        for (l, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (t, c) in self.table[l][k].iter().enumerate() {
                out[t] = &out[t] + &(coeff * c);
            }
        }
        out
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        basis_vector(self.spec, self.dim, i)
    }

    /// Structure-constant vector of [b_i, b_j].
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// Coordinate vector from (coefficient, label) terms.
    pub fn element(&self, terms: &[(FieldElement, &str)]) -> Result<Vector> {
        let mut v = vec_zero(self.spec, self.dim);
        for (c, label) in terms {
            let i = self.index_of(label)?;
            v[i] = &v[i] + c;
        }
        Ok(v)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[FieldElement], v: &[FieldElement]) -> Result<Vector> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {} but operands have lengths {} and {}",
                self.dim,
                u.len(),
                v.len()
            )));
        }
        let mut out = vec_zero(self.spec, self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of a -> [x, a] in the chosen basis; linear in x.
    pub fn ad(&self, x: &[FieldElement]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {} but operand has length {}",
                self.dim,
                x.len()
            )));
        }
        let mut m = Matrix::zeros(self.spec, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket_coords_left(x, j);
            for k in 0..self.dim {
                m[(k, j)] = col[k].clone();
            }
        }
        Ok(m)
    }

    /// [x, b_j] for a coordinate vector x.
    fn bracket_coords_left(&self, x: &[FieldElement], j: usize) -> Vector {
        let mut out = vec_zero(self.spec, self.dim);
        for (i, coeff) in x.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (t, c) in self.table[i][j].iter().enumerate() {
                out[t] = &out[t] + &(coeff * c);
            }
        }
        out
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&self.basis_element(i)).expect("basis vector fits")
    }

    pub fn is_abelian(&self) -> bool {
        self.table
            .iter()
            .all(|row| row.iter().all(|v| vec_is_zero(v)))
    }

    /// Span of [u, v] over basis vectors u of a and v of b, in ambient
    /// coordinates.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for u in a.basis_rows() {
            for v in b.basis_rows() {
                rows.push(self.bracket(&u, &v).expect("ambient vectors"));
            }
        }
        Subspace::from_rows(self.spec, self.dim, rows)
    }

    /// Derived series L ⊇ [L,L] ⊇ ... on subspace carriers; the list stops
    /// after the first repeated term or once it reaches zero.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|current| self.bracket_span(current, current))
    }

    /// Lower central series L, [L,L], [L,[L,L]], ...
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.spec, self.dim);
        self.series(|current| self.bracket_span(&full, current))
    }

    fn series(&self, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.spec, self.dim)];
        loop {
            let last = out.last().unwrap();
            if last.is_zero() {
                return out;
            }
            let next = step(last);
            let repeat = next == *last;
            out.push(next);
            if repeat {
                return out;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Solvability of a bracket-closed carrier, via its derived series in
    /// ambient coordinates.
    pub fn is_solvable_subspace(&self, s: &Subspace) -> bool {
        let mut current = s.clone();
        loop {
            if current.is_zero() {
                return true;
            }
            let next = self.bracket_span(&current, &current);
            if next == current {
                return false;
            }
            current = next;
        }
    }

    /// True when [b_i, s] ⊆ s for every basis element b_i.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim);
        for i in 0..self.dim {
            for u in s.basis_rows() {
                let w = self
                    .bracket(&self.basis_element(i), &u)
                    .expect("ambient vectors");
                if !s.contains_vector(&w) {
                    return false;
                }
            }
        }
        true
    }

    /// Every ideal, by exhaustive subspace enumeration (prime fields only).
    pub fn ideals(&self, cap: u128) -> Result<Vec<Subspace>> {
        Ok(enumerate_subspaces(self.spec, self.dim, None, cap)?
            .filter(|s| self.is_ideal(s))
            .collect())
    }

    /// Re-expresses the bracket on a bracket-closed carrier.
    pub fn restrict_to(&self, s: &Subspace) -> Result<SubalgebraView> {
        let rows = s.basis_rows();
        let k = rows.len();
        let mut table = vec![vec![vec_zero(self.spec, k); k]; k];
        for a in 0..k {
            for b in 0..k {
                let w = self.bracket(&rows[a], &rows[b]).expect("ambient vectors");
                let coords = s.coordinates_of(&w).ok_or(Error::NotASubalgebra)?;
                table[a][b] = coords;
            }
        }
        let labels = s
            .pivot_columns()
            .iter()
            .map(|&c| self.labels[c].clone())
            .collect();
        let induced = LieAlgebra::from_structure_constants(self.spec, labels, table)?;
        Ok(SubalgebraView {
            parent: self.clone(),
            carrier: s.clone(),
            induced,
        })
    }

    /// Quotient by an ideal; the quotient basis is the cosets of the
    /// coordinates outside the ideal's pivot columns.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let pivots = ideal.pivot_columns();
        let rest: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let k = rest.len();
        let reduce = |v: &Vector| -> Vector {
            // Kill the pivot coordinates using the ideal's RREF basis.
            let mut v = v.clone();
            for (row_idx, &pc) in pivots.iter().enumerate() {
                if v[pc].is_zero() {
                    continue;
                }
                let factor = v[pc].clone();
                let row = ideal.basis().row(row_idx);
                for t in 0..self.dim {
                    let delta = &factor * &row[t];
                    v[t] = &v[t] - &delta;
                }
            }
            v
        };
        let mut table = vec![vec![vec_zero(self.spec, k); k]; k];
        for a in 0..k {
            for b in 0..k {
                let w = self
                    .bracket(&self.basis_element(rest[a]), &self.basis_element(rest[b]))
                    .expect("basis vectors");
                let reduced = reduce(&w);
                table[a][b] = rest.iter().map(|&c| reduced[c].clone()).collect();
            }
        }
        let labels = rest.iter().map(|&c| self.labels[c].clone()).collect();
        LieAlgebra::from_structure_constants(self.spec, labels, table)
    }

    /// The maximal solvable ideal. Over F_p it is found by exhaustive ideal
    /// enumeration and verified to contain every other solvable ideal; over
    /// the rationals it is the Killing-orthogonal complement of [L, L].
    pub fn radical(&self, cap: u128) -> Result<Subspace> {
        if self.spec.is_prime_field() {
            let solvable_ideals: Vec<Subspace> = self
                .ideals(cap)?
                .into_iter()
                .filter(|s| self.is_solvable_subspace(s))
                .collect();
            let best = solvable_ideals
                .iter()
                .max_by_key(|s| s.dim())
                .cloned()
                .expect("the zero ideal is always solvable");
            for other in &solvable_ideals {
                assert!(
                    best.contains_subspace(other),
                    "maximal solvable ideal must contain every solvable ideal"
                );
            }
            Ok(best)
        } else {
            let gram = self.killing_gram();
            let derived = self.bracket_span(
                &Subspace::full(self.spec, self.dim),
                &Subspace::full(self.spec, self.dim),
            );
            let rows: Vec<Vector> = derived
                .basis_rows()
                .iter()
                .map(|d| gram.mul_vec(d))
                .collect();
            Ok(Matrix::from_rows_with_cols(self.spec, self.dim, rows).kernel())
        }
    }

    /// Gram matrix of tr(ad b_i ∘ ad b_j); kept here so the radical over the
    /// rationals does not depend on the form-level API.
    pub(crate) fn killing_gram(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut gram = Matrix::zeros(self.spec, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                let t = ads[i].matmul(&ads[j]).trace();
                gram[(i, j)] = t.clone();
                gram[(j, i)] = t;
            }
        }
        gram
    }

    pub fn is_semisimple(&self, cap: u128) -> Result<bool> {
        Ok(self.radical(cap)?.is_zero())
    }

    /// Non-abelian with no ideals besides 0 and L. Needs exhaustive ideal
    /// enumeration, hence a prime field.
    pub fn is_simple(&self, cap: u128) -> Result<bool> {
        if self.is_abelian() {
            return Ok(false);
        }
        Ok(self.ideals(cap)?.iter().all(|s| s.is_zero() || s.is_full()))
    }

    /// Intersection of the kernels of all ad b_i.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            let ad = self.ad_basis(i);
            for r in 0..self.dim {
                rows.push(ad.row(r));
            }
        }
        Matrix::from_rows_with_cols(self.spec, self.dim, rows).kernel()
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lie algebra of dimension {} on basis (", self.dim)?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A bracket-closed subspace together with the algebra induced on its basis.
#[derive(Debug, Clone)]
pub struct SubalgebraView {
    pub parent: LieAlgebra,
    pub carrier: Subspace,
    pub induced: LieAlgebra,
}

/// A span of matrices closed under commutators, re-expressed as structure
/// constants; the embedding keeps the spanning matrices.
pub fn commutator_algebra_of_matrices(
    mats: &[Matrix],
    labels: &[&str],
) -> Result<(LieAlgebra, Vec<Matrix>)> {
    assert!(!mats.is_empty(), "need at least one matrix");
    assert_eq!(mats.len(), labels.len(), "one label per matrix");
    let spec = mats[0].spec();
    let n = mats[0].rows();
    for m in mats {
        if !m.is_square() || m.rows() != n || m.spec() != spec {
            return Err(Error::DimensionMismatch(
                "matrices must be square, equal-sized, over one field".into(),
            ));
        }
    }
    let k = mats.len();
    let flat = Matrix::from_rows(spec, mats.iter().map(Matrix::flatten).collect());
    if flat.rank() != k {
        return Err(Error::NotIndependent);
    }
    let coords_matrix = flat.transpose();
    let mut table = vec![vec![vec_zero(spec, k); k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let com = mats[i].commutator(&mats[j]);
            let coords = coords_matrix
                .solve(&com.flatten())?
                .ok_or(Error::NotClosed(i, j))?;
            table[j][i] = coords.iter().map(|c| -c).collect();
            table[i][j] = coords;
        }
    }
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let algebra = LieAlgebra::from_structure_constants(spec, labels, table)?;
    Ok((algebra, mats.to_vec()))
}

/// Names of the builtin catalog algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinName {
    Gl,
    Sl,
    Sl2,
    Fsl2,
    Heisenberg,
    Aff2,
}

impl std::str::FromStr for BuiltinName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(BuiltinName::Gl),
            "sl" => Ok(BuiltinName::Sl),
            "sl2" => Ok(BuiltinName::Sl2),
            "fsl2" => Ok(BuiltinName::Fsl2),
            "heisenberg" => Ok(BuiltinName::Heisenberg),
            "aff2" => Ok(BuiltinName::Aff2),
            _ => Err(Error::BadParameters(format!("unknown builtin `{s}`"))),
        }
    }
}

/// Catalog constructor. `n` applies to gl/sl and defaults to 2.
///
/// sl2 is permitted in characteristic 2 even though its defining brackets
/// collapse there; fsl2 is the dedicated characteristic-2 object and is
/// rejected over any other field.
pub fn builtin(name: BuiltinName, spec: FieldSpec, n: Option<usize>) -> Result<LieAlgebra> {
    let n = n.unwrap_or(2);
    if !(1..=6).contains(&n) {
        return Err(Error::BadParameters(format!(
            "matrix size {n} outside the supported range 1..=6"
        )));
    }
    match name {
        BuiltinName::Gl => {
            let (algebra, _) = commutator_algebra_of_matrices(
                &gl_basis_matrices(spec, n),
                &gl_basis_labels(n).iter().map(String::as_str).collect::<Vec<_>>(),
            )?;
            Ok(algebra)
        }
        BuiltinName::Sl => {
            if n < 2 {
                return Err(Error::BadParameters("sl requires n >= 2".into()));
            }
            let (algebra, _) = commutator_algebra_of_matrices(
                &sl_basis_matrices(spec, n),
                &sl_basis_labels(n).iter().map(String::as_str).collect::<Vec<_>>(),
            )?;
            Ok(algebra)
        }
        BuiltinName::Sl2 => {
            let (algebra, _) =
                commutator_algebra_of_matrices(&sl_basis_matrices(spec, 2), &["e", "f", "h"])?;
            Ok(algebra)
        }
        BuiltinName::Fsl2 => {
            if spec.characteristic() != 2 {
                return Err(Error::BadParameters(
                    "fsl2 exists only in characteristic 2".into(),
                ));
            }
            LieAlgebra::from_integer_table(
                spec,
                &["e", "f", "h"],
                &[
                    ("e", "f", &[(1, "h")]),
                    ("h", "e", &[(1, "e")]),
                    ("h", "f", &[(-1, "f")]),
                ],
            )
        }
        BuiltinName::Heisenberg => LieAlgebra::from_integer_table(
            spec,
            &["x", "y", "z"],
            &[("x", "y", &[(1, "z")])],
        ),
        BuiltinName::Aff2 => LieAlgebra::from_integer_table(
            spec,
            &["h", "x"],
            &[("h", "x", &[(1, "x")])],
        ),
    }
}

/// Standard matrix units e_{rs} of gl(n), row-major, 1-indexed labels.
pub fn gl_basis_matrices(spec: FieldSpec, n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let mut m = Matrix::zeros(spec, n, n);
            m[(r, s)] = spec.one();
            out.push(m);
        }
    }
    out
}

pub fn gl_basis_labels(n: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(n * n);
    for r in 1..=n {
        for s in 1..=n {
            out.push(format!("e{r}{s}"));
        }
    }
    out
}

/// Off-diagonal units plus the diagonal differences e_{kk} - e_{k+1,k+1}.
pub fn sl_basis_matrices(spec: FieldSpec, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for r in 0..n {
        for s in 0..n {
            if r != s {
                let mut m = Matrix::zeros(spec, n, n);
                m[(r, s)] = spec.one();
                out.push(m);
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = Matrix::zeros(spec, n, n);
        m[(k, k)] = spec.one();
        m[(k + 1, k + 1)] = -&spec.one();
        out.push(m);
    }
    out
}

pub fn sl_basis_labels(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for r in 1..=n {
        for s in 1..=n {
            if r != s {
                out.push(format!("e{r}{s}"));
            }
        }
    }
    for k in 1..n {
        out.push(format!("h{k}"));
    }
    out
}

/// The two matrices generating the standard 2-dimensional solvable
/// counterexample algebra in characteristic p: a cyclic permutation x and
/// the counting diagonal y, with [x, y] = x.
pub fn shift_and_counting_pair(spec: FieldSpec, n: usize) -> (Matrix, Matrix) {
    let x = Matrix::cyclic_permutation(spec, n);
    let y = Matrix::diagonal(spec, &(0..n as i64).collect::<Vec<_>>());
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_scale;
    use crate::testutil::{rand_vector, rng};

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn sl2_table_is_accepted() {
        let a = LieAlgebra::from_integer_table(
            f(5),
            &["e", "f", "h"],
            &[
                ("e", "f", &[(1, "h")]),
                ("h", "e", &[(2, "e")]),
                ("h", "f", &[(-2, "f")]),
            ],
        )
        .unwrap();
        assert_eq!(a.dim(), 3);
        let e = a.basis_element(0);
        let fv = a.basis_element(1);
        let h = a.basis_element(2);
        assert_eq!(a.bracket(&e, &fv).unwrap(), h);
    }

    #[test]
    fn heisenberg_table_is_accepted() {
        let a = LieAlgebra::from_integer_table(f(3), &["x", "y", "z"], &[("x", "y", &[(1, "z")])])
            .unwrap();
        assert_eq!(a.dim(), 3);
        assert!(!a.is_abelian());
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [[a,b],c] + [[b,c],a] + [[c,a],b] = c - a + b != 0.
        let err = LieAlgebra::from_integer_table(
            q(),
            &["a", "b", "c"],
            &[
                ("a", "b", &[(1, "a")]),
                ("b", "c", &[(1, "b")]),
                ("a", "c", &[(1, "c")]),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::JacobiViolation { i: 0, j: 1, k: 2 });
    }

    #[test]
    fn duplicate_pair_and_label_are_rejected() {
        let err = LieAlgebra::from_integer_table(
            f(5),
            &["e", "f", "h"],
            &[("e", "f", &[(1, "h")]), ("f", "e", &[(1, "h")])],
        )
        .unwrap_err();
        assert_eq!(err, Error::DuplicatePair("e".into(), "f".into()));

        let err = LieAlgebra::from_integer_table(f(5), &["e", "e"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("e".into()));

        let err = LieAlgebra::from_integer_table(
            f(5),
            &["e", "f"],
            &[("e", "e", &[(1, "f")])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::AntisymmetryViolation(_)));
    }

    #[test]
    fn bracket_of_anything_with_itself_vanishes() {
        let a = builtin(BuiltinName::Sl2, f(5), None).unwrap();
        let mut r = rng(11);
        for _ in 0..100 {
            let u = rand_vector(f(5), 3, &mut r);
            assert!(vec_is_zero(&a.bracket(&u, &u).unwrap()));
        }
    }

    #[test]
    fn fsl2_brackets() {
        let a = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let e = a.basis_element(0);
        let fv = a.basis_element(1);
        let h = a.basis_element(2);
        assert_eq!(a.bracket(&h, &e).unwrap(), e);
        assert_eq!(a.bracket(&h, &fv).unwrap(), fv); // -f = f in char 2
        assert_eq!(a.bracket(&e, &fv).unwrap(), h);
        assert!(builtin(BuiltinName::Fsl2, f(3), None).is_err());
    }

    #[test]
    fn ad_examples() {
        let h3 = builtin(BuiltinName::Heisenberg, f(2), None).unwrap();
        let zero_ad = h3.ad(&vec_zero(f(2), 3)).unwrap();
        assert!(zero_ad.is_zero());

        let ax = h3.ad_basis(0);
        let y = h3.basis_element(1);
        let z = h3.basis_element(2);
        assert_eq!(ax.mul_vec(&y), z);
        assert!(vec_is_zero(&ax.mul_vec(&h3.basis_element(0))));
        assert!(vec_is_zero(&ax.mul_vec(&z)));

        // (ad e)^2 f = e in fsl2 over F_2.
        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let ade = fsl.ad_basis(0);
        let sq = ade.matmul(&ade);
        assert_eq!(sq.mul_vec(&fsl.basis_element(1)), fsl.basis_element(0));
    }

    #[test]
    fn commutator_algebra_recovers_sl2() {
        let (a, embed) = commutator_algebra_of_matrices(
            &sl_basis_matrices(f(5), 2),
            &["e", "f", "h"],
        )
        .unwrap();
        assert_eq!(embed.len(), 3);
        let e = a.basis_element(0);
        let fv = a.basis_element(1);
        let h = a.basis_element(2);
        assert_eq!(a.bracket(&e, &fv).unwrap(), h);
        assert_eq!(a.bracket(&h, &e).unwrap(), vec_scale(&f(5).from_integer(2), &e));
    }

    #[test]
    fn commutator_algebra_of_counterexample_pair() {
        for p in [2u64, 3, 5] {
            let (x, y) = shift_and_counting_pair(f(p), p as usize);
            assert_eq!(x.commutator(&y), x);
            let (a, _) = commutator_algebra_of_matrices(&[x, y], &["x", "y"]).unwrap();
            assert_eq!(a.dim(), 2);
            assert_eq!(
                a.bracket(&a.basis_element(0), &a.basis_element(1)).unwrap(),
                a.basis_element(0)
            );
        }
    }

    #[test]
    fn commutator_algebra_of_single_matrix_is_abelian() {
        let m = Matrix::from_i64(f(3), &[&[1, 2], &[0, 1]]);
        let (a, _) = commutator_algebra_of_matrices(&[m], &["m"]).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.is_abelian());
    }

    #[test]
    fn commutator_algebra_detects_non_closure() {
        // span{e11, e12 ... nope: [e11, e21] = -e21... use {e12, e11}:
        // [e11, e12] = e12 is inside, but {e12, e21} fails: [e12,e21]=h.
        let spec = f(5);
        let mut e12 = Matrix::zeros(spec, 2, 2);
        e12[(0, 1)] = spec.one();
        let mut e21 = Matrix::zeros(spec, 2, 2);
        e21[(1, 0)] = spec.one();
        let err = commutator_algebra_of_matrices(&[e12, e21], &["a", "b"]).unwrap_err();
        assert_eq!(err, Error::NotClosed(0, 1));
    }

    #[test]
    fn derived_series_of_abelian_and_fsl2() {
        let ab = LieAlgebra::from_integer_table(f(3), &["a", "b"], &[]).unwrap();
        let series = ab.derived_series();
        let dims: Vec<usize> = series.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 0]);
        assert!(ab.is_solvable());

        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let dims: Vec<usize> = fsl.derived_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 3]);
        assert!(!fsl.is_solvable());
    }

    #[test]
    fn derived_series_of_counterexample_algebra() {
        for p in [2u64, 3, 5] {
            let (x, y) = shift_and_counting_pair(f(p), p as usize);
            let (s, _) = commutator_algebra_of_matrices(&[x, y], &["x", "y"]).unwrap();
            let dims: Vec<usize> = s.derived_series().iter().map(Subspace::dim).collect();
            assert_eq!(dims, vec![2, 1, 0]);
            assert!(s.is_solvable());
        }
    }

    #[test]
    fn zero_dimensional_algebra_is_solvable_and_nilpotent() {
        let zero = LieAlgebra::from_integer_table(f(3), &[], &[]).unwrap();
        assert_eq!(zero.dim(), 0);
        assert!(zero.is_solvable());
        assert!(zero.is_nilpotent());
        assert!(zero.is_abelian());
    }

    #[test]
    fn lower_central_series_examples() {
        let h3 = builtin(BuiltinName::Heisenberg, f(3), None).unwrap();
        let dims: Vec<usize> = h3.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 1, 0]);
        assert!(h3.is_nilpotent());

        let aff = builtin(BuiltinName::Aff2, q(), None).unwrap();
        let dims: Vec<usize> = aff.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1, 1]);
        assert!(!aff.is_nilpotent());
        assert!(aff.is_solvable());

        let ab = LieAlgebra::from_integer_table(f(2), &["a", "b"], &[]).unwrap();
        assert!(ab.is_nilpotent());
    }

    #[test]
    fn ideal_examples() {
        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let ideals = fsl.ideals(1 << 20).unwrap();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().any(Subspace::is_zero));
        assert!(ideals.iter().any(Subspace::is_full));
        assert!(fsl.is_simple(1 << 20).unwrap());

        let h3 = builtin(BuiltinName::Heisenberg, f(2), None).unwrap();
        let z_line = Subspace::from_rows(f(2), 3, vec![h3.basis_element(2)]);
        assert!(h3.is_ideal(&z_line));
        assert!(h3.is_ideal(&Subspace::zero(f(2), 3)));
        let e_line = Subspace::from_rows(f(2), 3, vec![h3.basis_element(0)]);
        assert!(!h3.is_ideal(&e_line));
    }

    #[test]
    fn restrict_and_quotient() {
        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let e_line = Subspace::from_rows(f(2), 3, vec![fsl.basis_element(0)]);
        let view = fsl.restrict_to(&e_line).unwrap();
        assert_eq!(view.induced.dim(), 1);
        assert!(view.induced.is_abelian());

        let h3 = builtin(BuiltinName::Heisenberg, f(3), None).unwrap();
        let z_line = Subspace::from_rows(f(3), 3, vec![h3.basis_element(2)]);
        let quot = h3.quotient(&z_line).unwrap();
        assert_eq!(quot.dim(), 2);
        assert!(quot.is_abelian());
        assert_eq!(quot.labels(), ["x".to_string(), "y".to_string()]);

        // dim(L) = dim(I) + dim(L/I)
        assert_eq!(h3.dim(), z_line.dim() + quot.dim());

        let (x, y) = shift_and_counting_pair(f(3), 3);
        let (s, _) = commutator_algebra_of_matrices(&[x, y], &["x", "y"]).unwrap();
        let x_line = Subspace::from_rows(f(3), 2, vec![s.basis_element(0)]);
        let quot = s.quotient(&x_line).unwrap();
        assert_eq!(quot.dim(), 1);
        assert!(quot.is_abelian());

        let not_ideal = Subspace::from_rows(f(2), 3, vec![fsl.basis_element(0)]);
        assert_eq!(fsl.quotient(&not_ideal).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn radical_examples() {
        let sl2 = builtin(BuiltinName::Sl2, q(), None).unwrap();
        assert!(sl2.radical(1 << 20).unwrap().is_zero());
        assert!(sl2.is_semisimple(1 << 20).unwrap());

        let aff = builtin(BuiltinName::Aff2, f(3), None).unwrap();
        assert!(aff.radical(1 << 20).unwrap().is_full());

        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        assert!(fsl.radical(1 << 20).unwrap().is_zero());

        // Solvable algebras over the rationals are their own radical.
        let aff_q = builtin(BuiltinName::Aff2, q(), None).unwrap();
        assert!(aff_q.radical(1 << 20).unwrap().is_full());
    }

    #[test]
    fn center_examples() {
        for p in [2u64, 3, 5] {
            let h3 = builtin(BuiltinName::Heisenberg, f(p), None).unwrap();
            let c = h3.center();
            assert_eq!(c.dim(), 1);
            assert!(c.contains_vector(&h3.basis_element(2)));
        }
        let ab = LieAlgebra::from_integer_table(f(2), &["a", "b"], &[]).unwrap();
        assert!(ab.center().is_full());
        assert!(!ab.is_simple(1 << 20).unwrap());
    }

    #[test]
    fn builtin_catalog_shapes() {
        let sl = builtin(BuiltinName::Sl, f(3), Some(2)).unwrap();
        assert_eq!(sl.dim(), 3);
        for m in sl_basis_matrices(f(3), 2) {
            assert!(m.trace().is_zero());
        }
        let gl = builtin(BuiltinName::Gl, f(2), Some(2)).unwrap();
        assert_eq!(gl.dim(), 4);
        let sl3 = builtin(BuiltinName::Sl, q(), Some(3)).unwrap();
        assert_eq!(sl3.dim(), 8);
    }

    #[test]
    fn jacobi_in_adjoint_form_on_catalog() {
        let algebras = vec![
            builtin(BuiltinName::Sl2, f(5), None).unwrap(),
            builtin(BuiltinName::Fsl2, f(2), None).unwrap(),
            builtin(BuiltinName::Heisenberg, f(3), None).unwrap(),
            builtin(BuiltinName::Aff2, q(), None).unwrap(),
            builtin(BuiltinName::Gl, f(3), Some(2)).unwrap(),
        ];
        let mut r = rng(7);
        for a in &algebras {
            for _ in 0..200 {
                let x = rand_vector(a.spec(), a.dim(), &mut r);
                let y = rand_vector(a.spec(), a.dim(), &mut r);
                let lhs = a.ad(&a.bracket(&x, &y).unwrap()).unwrap();
                let rhs = a.ad(&x).unwrap().commutator(&a.ad(&y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn solvability_closure_on_prime_catalog() {
        // If I and L/I are solvable then L is; and sums of solvable ideals
        // are solvable. Exhaustive over all ideals of the small catalog.
        let algebras = vec![
            builtin(BuiltinName::Sl2, f(3), None).unwrap(),
            builtin(BuiltinName::Fsl2, f(2), None).unwrap(),
            builtin(BuiltinName::Heisenberg, f(2), None).unwrap(),
            builtin(BuiltinName::Aff2, f(5), None).unwrap(),
        ];
        for a in &algebras {
            let ideals = a.ideals(1 << 20).unwrap();
            for i in &ideals {
                let quotient_solvable = a.quotient(i).unwrap().is_solvable();
                if a.is_solvable_subspace(i) && quotient_solvable {
                    assert!(a.is_solvable());
                }
                for j in &ideals {
                    if a.is_solvable_subspace(i) && a.is_solvable_subspace(j) {
                        assert!(a.is_solvable_subspace(&i.sum(j)));
                    }
                }
            }
            let radical = a.radical(1 << 20).unwrap();
            for i in &ideals {
                if a.is_solvable_subspace(i) {
                    assert!(radical.contains_subspace(i));
                }
            }
        }
    }
}
