//! Exact dense matrices over a [`FieldSpec`], with reduced row-echelon form,
//! kernels, and deterministic linear solving.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::subspace::Subspace;
use crate::linalg::{vec_is_zero, Vector};

/// Row-major matrix with entries in a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    spec: FieldSpec,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(spec: FieldSpec, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(entries.iter().all(|e| spec.contains(e)), "entries must belong to spec");
        Matrix { rows, cols, spec, entries }
    }

    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            spec,
            entries: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(spec, n, n);
        for i in 0..n {
            m[(i, i)] = spec.one();
        }
        m
    }

    pub fn from_rows(spec: FieldSpec, rows: Vec<Vector>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Matrix::new(spec, nrows, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(spec: FieldSpec, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            spec,
            rows.iter()
                .map(|r| r.iter().map(|&n| spec.from_integer(n)).collect())
                .collect(),
        )
    }

    /// Cyclic permutation sending e_1 to e_n and e_{j+1} to e_j: ones on the
    /// superdiagonal and in the lower-left corner.
    pub fn cyclic_permutation(spec: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(spec, n, n);
        for i in 0..n.saturating_sub(1) {
            m[(i, i + 1)] = spec.one();
        }
        if n > 0 {
            m[(n - 1, 0)] = spec.one();
        }
        m
    }

    pub fn diagonal(spec: FieldSpec, entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(spec, n, n);
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = spec.from_integer(d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::new(self.spec, self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix::new(self.spec, self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|a| -a).collect();
        Matrix::new(self.spec, self.rows, self.cols, entries)
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        Matrix::new(self.spec, self.rows, self.cols, entries)
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = &out[(i, j)] + &(&self[(i, k)] * &other[(k, j)]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(self.cols, v.len(), "vector length must match cols");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.spec.zero();
                for j in 0..self.cols {
                    acc = &acc + &(&self[(i, j)] * &v[j]);
                }
                acc
            })
            .collect()
    }

    /// Square-matrix power by repeated squaring; `m^0` is the identity.
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.spec, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            base = base.matmul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> FieldElement {
        assert!(self.is_square());
        let mut acc = self.spec.zero();
        for i in 0..self.rows {
            acc = &acc + &self[(i, i)];
        }
        acc
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Row-major entries flattened into a vector.
    pub fn flatten(&self) -> Vector {
        self.entries.clone()
    }

    /// Unique reduced row-echelon form, its rank, and the pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pivot_row);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for j in col..m.cols {
                m[(row, j)] = &m[(row, j)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let delta = &factor * &m[(row, j)];
                        m[(r, j)] = &m[(r, j)] - &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots.len(), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The subspace of all v with `self * v = 0`.
    pub fn kernel(&self) -> Subspace {
        let (r, _, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::new();
        for &f in &free {
            let mut v = vec![self.spec.zero(); self.cols];
            v[f] = self.spec.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -&r[(prow, f)];
            }
            rows.push(v);
        }
        Subspace::from_rows(self.spec, self.cols, rows)
    }

    /// Some x with `self * x = b`, or None if the system is inconsistent.
    /// Free variables are pinned to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has {} entries",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zeros(self.spec, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.spec.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r[(prow, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Inverse via Gauss-Jordan on [A | I]; None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(self.spec, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.spec.one();
        }
        let (r, _, pivots) = aug.rref();
        // Nonsingular exactly when the pivots stay in the left block.
        if (0..n).any(|i| pivots.get(i) != Some(&i)) {
            return None;
        }
        let mut inv = Matrix::zeros(self.spec, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All vectors of F_p^n in lexicographic coordinate order (first coordinate
/// most significant). Exhaustive-scan oracle for small spaces.
pub fn all_vectors(spec: FieldSpec, n: usize) -> Result<Vec<Vector>> {
    let p = spec
        .modulus()
        .ok_or(Error::UnsupportedField("a prime field"))?;
    let elems = spec.elements()?;
    let total = (p as u128).checked_pow(n as u32).expect("space too large");
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&d| elems[d].clone()).collect());
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p as usize {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// True if v is componentwise zero.
pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    vec_is_zero(v)
}
