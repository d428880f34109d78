//! Characteristic and minimal polynomials, and in-field eigenvalue search.
//!
//! The characteristic polynomial is computed by the Berkowitz iteration,
//! which never divides and is therefore valid in any characteristic.
//! Eigenvalue search deliberately stays inside the base field: over F_p it
//! scans all p residues, over the rationals it tests rational-root
//! candidates. Roots in proper extensions are out of scope by design.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::factor::positive_divisors;
use crate::linalg::matrix::Matrix;
use crate::linalg::poly::Polynomial;
use crate::linalg::subspace::Subspace;
use crate::linalg::Vector;

/// Monic characteristic polynomial det(XI - m), by Berkowitz's
/// division-free Toeplitz iteration.
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let spec = m.spec();
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::one(spec));
    }
    // Coefficient vector in descending powers, grown one principal
    // submatrix at a time.
    let mut v = vec![spec.one(), -&m[(0, 0)]];
    for r in 1..n {
        // q_0 = m[r][r], q_k = R B^{k-1} S against the leading r x r block B.
        let mut col = Vec::with_capacity(r + 2);
        col.push(spec.one());
        col.push(-&m[(r, r)]);
        let mut w: Vector = (0..r).map(|i| m[(i, r)].clone()).collect();
        for _ in 1..=r {
            let mut q = spec.zero();
            for j in 0..r {
                q = &q + &(&m[(r, j)] * &w[j]);
            }
            col.push(-&q);
            let mut next = vec![spec.zero(); r];
            for (i, item) in next.iter_mut().enumerate() {
                for j in 0..r {
                    *item = &*item + &(&m[(i, j)] * &w[j]);
                }
            }
            w = next;
        }
        // v <- T v where T is lower-triangular Toeplitz with first column col.
        let mut out = vec![spec.zero(); r + 2];
        for (i, entry) in out.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                *entry = &*entry + &(&col[i - j] * vj);
            }
        }
        v = out;
    }
    v.reverse();
    Ok(Polynomial::new(spec, v))
}

/// Monic minimal polynomial: least common multiple of the annihilators of
/// the standard basis vectors, each found as the first Krylov dependence.
pub fn min_poly(m: &Matrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let spec = m.spec();
    let n = m.rows();
    let mut acc = Polynomial::one(spec);
    for i in 0..n {
        if acc.degree() == Some(n) {
            break;
        }
        let mut v = vec![spec.zero(); n];
        v[i] = spec.one();
        let mut krylov: Vec<Vector> = vec![v.clone()];
        loop {
            let next = m.mul_vec(krylov.last().unwrap());
            // Columns are the Krylov vectors so far; solve for a dependence.
            let cols = Matrix::from_rows(spec, krylov.clone()).transpose();
            if let Some(c) = cols.solve(&next)? {
                let k = krylov.len();
                let mut coeffs: Vector = c.iter().map(|x| -x).collect();
                coeffs.push(spec.one());
                debug_assert_eq!(coeffs.len(), k + 1);
                let ann = Polynomial::new(spec, coeffs);
                acc = acc.lcm(&ann);
                break;
            }
            krylov.push(next);
        }
    }
    Ok(acc)
}

/// All roots of the characteristic polynomial that lie in the base field,
/// sorted ascending. May be incomplete with respect to field extensions.
pub fn eigenvalues_in_field(m: &Matrix) -> Result<Vec<FieldElement>> {
    let cp = char_poly(m)?;
    roots_in_field(&cp)
}

/// In-field roots of an arbitrary nonzero polynomial, sorted ascending.
pub fn roots_in_field(poly: &Polynomial) -> Result<Vec<FieldElement>> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let spec = poly.spec();
    let mut roots = match spec.modulus() {
        Some(_) => spec
            .elements()?
            .into_iter()
            .filter(|lam| poly.eval(lam).is_zero())
            .collect(),
        None => rational_roots(poly),
    };
    roots.sort_by(FieldElement::compare);
    Ok(roots)
}

fn rational_roots(poly: &Polynomial) -> Vec<FieldElement> {
    let spec = poly.spec();
    let mut roots = Vec::new();
    let nonzero_from = poly
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if nonzero_from > 0 {
        roots.push(spec.zero());
    }
    let trimmed: Vec<&FieldElement> = poly.coeffs()[nonzero_from..].iter().collect();
    if trimmed.len() < 2 {
        return roots;
    }
    // Clear denominators to integer coefficients.
    let rat = |c: &FieldElement| c.rational().expect("rational field").clone();
    let mut scale = BigInt::one();
    for c in &trimmed {
        scale = scale.lcm(rat(c).denom());
    }
    let ints: Vec<BigInt> = trimmed
        .iter()
        .map(|c| {
            let q = rat(c) * BigRational::from(scale.clone());
            debug_assert!(q.denom().is_one());
            q.numer().clone()
        })
        .collect();
    let constant = ints.first().expect("nonempty");
    let leading = ints.last().expect("nonempty");
    debug_assert!(!constant.is_zero() && !leading.is_zero());
    for num in positive_divisors(constant) {
        for den in positive_divisors(leading) {
            for sign in [1, -1] {
                let cand = BigRational::new(&num * BigInt::from(sign), den.clone());
                let elem = FieldElement::from_big_rational(cand);
                if poly.eval(&elem).is_zero() && !roots.contains(&elem) {
                    roots.push(elem);
                }
            }
        }
    }
    roots
}

/// kernel(m - lam I): nonzero exactly when lam is an eigenvalue.
pub fn eigenspace(m: &Matrix, lam: &FieldElement) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let shifted = m.sub(&Matrix::identity(m.spec(), m.rows()).scale(lam));
    Ok(shifted.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        let q = FieldSpec::rationals();
        let m = Matrix::zeros(q, 2, 2);
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64(q, &[0, 0, 1]));
    }

    #[test]
    fn char_poly_of_diagonal() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 0], &[0, 2]]);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64(q, &[2, -3, 1]));
    }

    #[test]
    fn char_poly_next_to_leading_coefficient_is_minus_trace() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let cp = char_poly(&m).unwrap();
        assert_eq!(cp.coeff(2), -&m.trace());
        assert!(cp.is_monic());
    }

    #[test]
    fn char_poly_of_cyclic_permutation_is_xp_minus_one() {
        for p in [2u64, 3, 5, 7] {
            let spec = f(p);
            let m = Matrix::cyclic_permutation(spec, p as usize);
            let mut coeffs = vec![0i64; p as usize + 1];
            coeffs[0] = -1;
            coeffs[p as usize] = 1;
            assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64(spec, &coeffs));
        }
    }

    #[test]
    fn char_poly_rejects_non_square() {
        let m = Matrix::zeros(f(2), 2, 3);
        assert_eq!(char_poly(&m), Err(Error::NotSquare));
    }

    #[test]
    fn min_poly_examples() {
        let q = FieldSpec::rationals();
        assert_eq!(
            min_poly(&Matrix::identity(q, 3)).unwrap(),
            Polynomial::from_i64(q, &[-1, 1])
        );
        let nilp = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
        assert_eq!(min_poly(&nilp).unwrap(), Polynomial::from_i64(q, &[0, 0, 1]));

        // diag(1,1,2): oracle checks by substitution and by exhausting the
        // degree-1 monic candidates x - c for the present eigenvalues.
        let m = Matrix::from_i64(q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let mp = min_poly(&m).unwrap();
        assert_eq!(mp, Polynomial::from_i64(q, &[2, -3, 1]));
        assert!(mp.eval_matrix(&m).is_zero());
        for c in [1i64, 2] {
            let cand = Polynomial::from_i64(q, &[-c, 1]);
            assert!(!cand.eval_matrix(&m).is_zero());
        }
        assert!(mp.divides(&char_poly(&m).unwrap()));
    }

    #[test]
    fn eigenvalues_of_cyclic_permutation() {
        for p in [2u64, 3, 5] {
            let spec = f(p);
            let m = Matrix::cyclic_permutation(spec, p as usize);
            assert_eq!(eigenvalues_in_field(&m).unwrap(), vec![spec.one()]);
            let space = eigenspace(&m, &spec.one()).unwrap();
            assert_eq!(space.dim(), 1);
            let all_ones = vec![spec.one(); p as usize];
            assert!(space.contains_vector(&all_ones));
        }
    }

    #[test]
    fn rotation_matrix_has_no_rational_eigenvalues() {
        let q = FieldSpec::rationals();
        let rot = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
        assert!(eigenvalues_in_field(&rot).unwrap().is_empty());
    }

    #[test]
    fn counting_diagonal_has_every_residue() {
        for p in [2u64, 3, 5, 7] {
            let spec = f(p);
            let m = Matrix::diagonal(spec, &(0..p as i64).collect::<Vec<_>>());
            let eigs = eigenvalues_in_field(&m).unwrap();
            assert_eq!(eigs, spec.elements().unwrap());
            for (i, lam) in eigs.iter().enumerate() {
                let space = eigenspace(&m, lam).unwrap();
                assert_eq!(space.dim(), 1);
                let mut e = vec![spec.zero(); p as usize];
                e[i] = spec.one();
                assert!(space.contains_vector(&e));
            }
        }
    }

    #[test]
    fn non_eigenvalue_gives_zero_eigenspace() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 0], &[0, 2]]);
        assert!(eigenspace(&m, &q.from_integer(5)).unwrap().is_zero());
    }

    #[test]
    fn rational_roots_with_zero_and_fraction() {
        let q = FieldSpec::rationals();
        // x^2 (2x - 1): roots 0 (double) and 1/2.
        let poly = Polynomial::from_i64(q, &[0, 0, -1, 2]);
        assert_eq!(
            roots_in_field(&poly).unwrap(),
            vec![q.zero(), q.from_fraction(1, 2).unwrap()]
        );
    }

    #[test]
    fn rational_roots_with_fractional_root() {
        let q = FieldSpec::rationals();
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3: roots 1/2 and -3.
        let poly = Polynomial::from_i64(q, &[-3, 5, 2]);
        assert_eq!(
            roots_in_field(&poly).unwrap(),
            vec![q.from_integer(-3), q.from_fraction(1, 2).unwrap()]
        );
    }
}
