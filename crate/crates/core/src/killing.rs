//! The Killing form and trace forms of representations, their radicals and
//! degeneracy, and both Cartan criteria evaluated as reports so the
//! characteristic-p failures are observable rather than assumed.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::liealg::LieAlgebra;
use crate::linalg::{vec_add, Matrix, Subspace};
use crate::repr::Representation;

/// A symmetric bilinear form on an algebra, stored as its Gram matrix in
/// the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    label: String,
}

impl BilinearForm {
    fn new(gram: Matrix, label: impl Into<String>) -> Self {
        assert!(gram.is_square());
        assert_eq!(gram, gram.transpose(), "gram matrix must be symmetric");
        BilinearForm { gram, label: label.into() }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn apply(&self, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        let gu = self.gram.mul_vec(v);
        let mut acc = self.gram.spec().zero();
        for (a, b) in u.iter().zip(&gu) {
            acc = &acc + &(a * b);
        }
        acc
    }

    /// {x : form(x, y) = 0 for all y} = kernel of the Gram matrix.
    pub fn radical(&self) -> Subspace {
        self.gram.kernel()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }
}

/// kappa(b_i, b_j) = tr(ad b_i ∘ ad b_j).
pub fn killing_form(algebra: &LieAlgebra) -> BilinearForm {
    BilinearForm::new(algebra.killing_gram(), "killing")
}

/// gram[i][j] = tr(rho(b_i) rho(b_j)) for a validated representation of the
/// given algebra.
pub fn trace_form(algebra: &LieAlgebra, rep: &Representation) -> Result<BilinearForm> {
    check_rep_matches(algebra, rep)?;
    let n = algebra.dim();
    let mut gram = Matrix::zeros(algebra.spec(), n, n);
    for i in 0..n {
        for j in 0..=i {
            let t = rep.mat(i).matmul(rep.mat(j)).trace();
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    Ok(BilinearForm::new(gram, "trace"))
}

/// kappa([b_i, b_j], b_k) = kappa(b_i, [b_j, b_k]) on all basis triples.
pub fn associativity_check(algebra: &LieAlgebra, form: &BilinearForm) -> bool {
    let n = algebra.dim();
    assert_eq!(form.dim(), n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = form.apply(algebra.bracket_basis(i, j), &algebra.basis_element(k));
                let rhs = form.apply(&algebra.basis_element(i), algebra.bracket_basis(j, k));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// The three statements of Cartan's solvability criterion evaluated
/// independently: in characteristic 0 they must agree, in characteristic p
/// they may not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanReport {
    /// tr(rho(a) rho(b)) = 0 for all a in L, b in [L, L].
    pub stmt1: bool,
    /// tr(rho(a)^2) = 0 for all a in [L, L].
    pub stmt2: bool,
    pub solvable: bool,
    pub consistent: bool,
}

/// stmt2 is checked on a basis of [L, L] together with all pairwise basis
/// sums: in characteristic 2 the polarization identity fails, so basis-only
/// checking would not certify the quantifier over all of [L, L].
pub fn cartan_statements(algebra: &LieAlgebra, rep: &Representation) -> Result<CartanReport> {
    check_rep_matches(algebra, rep)?;
    let full = Subspace::full(algebra.spec(), algebra.dim());
    let derived = algebra.bracket_span(&full, &full);
    let derived_basis = derived.basis_rows();

    let mut stmt1 = true;
    'outer: for i in 0..algebra.dim() {
        for d in &derived_basis {
            let prod = rep.act(&algebra.basis_element(i)).matmul(&rep.act(d));
            if !prod.trace().is_zero() {
                stmt1 = false;
                break 'outer;
            }
        }
    }

    let mut spanning: Vec<_> = derived_basis.clone();
    for a in 0..derived_basis.len() {
        for b in (a + 1)..derived_basis.len() {
            spanning.push(vec_add(&derived_basis[a], &derived_basis[b]));
        }
    }
    let stmt2 = spanning.iter().all(|u| {
        let m = rep.act(u);
        m.matmul(&m).trace().is_zero()
    });

    let solvable = algebra.is_solvable();
    Ok(CartanReport {
        stmt1,
        stmt2,
        solvable,
        consistent: stmt1 == stmt2 && stmt2 == solvable,
    })
}

/// Both sides of the semisimplicity criterion, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub semisimple: bool,
    pub nondegenerate: bool,
    pub equivalent: bool,
}

pub fn cartan_semisimplicity(algebra: &LieAlgebra, cap: u128) -> Result<SemisimplicityReport> {
    let semisimple = algebra.is_semisimple(cap)?;
    let nondegenerate = killing_form(algebra).is_nondegenerate();
    Ok(SemisimplicityReport {
        semisimple,
        nondegenerate,
        equivalent: semisimple == nondegenerate,
    })
}

fn check_rep_matches(algebra: &LieAlgebra, rep: &Representation) -> Result<()> {
    if rep.algebra() != algebra {
        return Err(Error::InvalidRepresentation);
    }
    Ok(())
}
