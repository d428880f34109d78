//! Jordan-Chevalley decomposition over the two supported perfect fields:
//! any square matrix splits uniquely as a commuting sum of a semisimple part
//! (squarefree minimal polynomial) and a nilpotent part. In characteristic p
//! "semisimple" is strictly weaker than "diagonalisable over the base
//! field", and this module exposes both notions.

use crate::error::{Error, Result};
use crate::linalg::{min_poly, roots_in_field, Matrix, Polynomial};

/// A decomposition `source = semisimple + nilpotent` with commuting parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    pub source: Matrix,
}

/// Splits `a` into its semisimple and nilpotent parts by Newton iteration
/// on the squarefree part g of the minimal polynomial: with ug + vg' = 1,
/// the map s -> s - g(s) v(s) squares the "distance" g(s) each step, so at
/// most ceil(log2 dim) + 1 steps reach g(s) = 0. The result is a polynomial
/// in `a`, hence commutes with everything commuting with `a`.
pub fn chevalley_decompose(a: &Matrix) -> Result<JordanPair> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let n = a.rows();
    if n == 0 {
        return Ok(JordanPair {
            semisimple: a.clone(),
            nilpotent: a.clone(),
            source: a.clone(),
        });
    }
    let g = min_poly(a)?.squarefree_part()?;
    let gp = g.derivative();
    let (one, _, v) = g.ext_gcd(&gp);
    assert!(
        one.degree() == Some(0),
        "squarefree polynomial over a perfect field is coprime to its derivative"
    );
    let mut s = a.clone();
    let steps = usize::BITS - n.leading_zeros() + 1;
    for _ in 0..steps {
        let gs = g.eval_matrix(&s);
        if gs.is_zero() {
            break;
        }
        s = s.sub(&gs.matmul(&v.eval_matrix(&s)));
    }
    assert!(
        g.eval_matrix(&s).is_zero(),
        "Newton iteration must converge within the step bound"
    );
    Ok(JordanPair {
        nilpotent: a.sub(&s),
        semisimple: s,
        source: a.clone(),
    })
}

/// Squarefree minimal polynomial; equivalently, no nilpotent part.
pub fn is_semisimple_matrix(a: &Matrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    Ok(poly_is_squarefree(&min_poly(a)?))
}

/// Minimal polynomial splits into distinct linear factors over the base
/// field: squarefree, and dividing out each in-field root reaches degree 0.
pub fn is_diagonalisable_over_base(a: &Matrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let mp = min_poly(a)?;
    if !poly_is_squarefree(&mp) {
        return Ok(false);
    }
    let spec = a.spec();
    let mut rest = mp.clone();
    for root in roots_in_field(&mp)? {
        let lin = Polynomial::new(spec, vec![-&root, spec.one()]);
        let (q, r) = rest.divmod(&lin)?;
        assert!(r.is_zero(), "reported root must divide the minimal polynomial");
        rest = q;
    }
    Ok(rest.degree() == Some(0))
}

fn poly_is_squarefree(f: &Polynomial) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// True when some power of `a` vanishes; checked via a^dim = 0.
pub fn is_nilpotent_matrix(a: &Matrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    Ok(a.pow(a.rows() as u64).is_zero())
}
