//! Dense univariate polynomials over a [`FieldSpec`]: Euclidean arithmetic,
//! extended gcd, and the squarefree part (valid in any characteristic).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::matrix::Matrix;

/// Coefficients stored lowest degree first; the zero polynomial is the empty
/// list, otherwise the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        assert!(coeffs.iter().all(|c| spec.contains(c)));
        Polynomial { spec, coeffs }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Polynomial { spec, coeffs: Vec::new() }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Polynomial::constant(spec.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::new(c.spec(), vec![c])
    }

    /// The monomial X.
    pub fn x(spec: FieldSpec) -> Self {
        Polynomial::new(spec, vec![spec.zero(), spec.one()])
    }

    pub fn from_i64(spec: FieldSpec, coeffs: &[i64]) -> Self {
        Polynomial::new(spec, coeffs.iter().map(|&c| spec.from_integer(c)).collect())
    }

    /// Monic product of (X - r) over the given roots.
    pub fn from_roots(spec: FieldSpec, roots: &[FieldElement]) -> Self {
        let mut acc = Polynomial::one(spec);
        for r in roots {
            let lin = Polynomial::new(spec, vec![-r, spec.one()]);
            acc = acc.mul(&lin);
        }
        acc
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Polynomial::new(self.spec, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Polynomial::new(self.spec, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.spec, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.spec, coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(self.spec, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dlead_inv = divisor.leading().unwrap().inv()?;
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let k = rem.len() - 1;
            let factor = &rem[k] * &dlead_inv;
            if !factor.is_zero() {
                quot[k - ddeg] = factor.clone();
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let idx = k - ddeg + i;
                    let delta = &factor * d;
                    rem[idx] = &rem[idx] - &delta;
                }
            }
            rem.pop();
        }
        Ok((
            Polynomial::new(self.spec, quot),
            Polynomial::new(self.spec, rem),
        ))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn monic(&self) -> Result<Polynomial> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.inv()?))
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &self.spec.from_integer(k as i64) * c)
            .collect();
        Polynomial::new(self.spec, coeffs)
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Horner evaluation with a square matrix substituted for X.
    pub fn eval_matrix(&self, at: &Matrix) -> Matrix {
        assert!(at.is_square());
        let n = at.rows();
        let mut acc = Matrix::zeros(self.spec, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(at);
            for i in 0..n {
                acc[(i, i)] = &acc[(i, i)] + c;
            }
        }
        acc
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    /// Extended Euclid: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let spec = self.spec;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Polynomial::one(spec), Polynomial::zero(spec));
        let (mut v0, mut v1) = (Polynomial::zero(spec), Polynomial::one(spec));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            (r0, r1) = (r1, r);
            (u0, u1) = (u1.clone(), u0.sub(&q.mul(&u1)));
            (v0, v1) = (v1.clone(), v0.sub(&q.mul(&v1)));
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let lead_inv = r0.leading().unwrap().inv().expect("nonzero");
        (
            r0.scale(&lead_inv),
            u0.scale(&lead_inv),
            v0.scale(&lead_inv),
        )
    }

    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.spec);
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divmod(&g).expect("gcd divides product");
        debug_assert!(r.is_zero());
        q.monic().expect("nonzero")
    }

    /// Monic polynomial with the same roots (in any extension) and no
    /// repeated factors. Over F_p, when the derivative vanishes the
    /// polynomial is a polynomial in X^p and the recursion strips that
    /// p-th-power layer; coefficient p-th roots are the identity on F_p.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic()?;
        if f.degree() == Some(0) {
            return Ok(f);
        }
        let fp = f.derivative();
        if fp.is_zero() {
            let p = self.spec.characteristic();
            debug_assert!(p > 0, "nonconstant characteristic-0 polynomial has f' != 0");
            return f.compress_pth_powers(p).squarefree_part();
        }
        let g = f.gcd(&fp);
        let (w, r) = f.divmod(&g).expect("gcd divides f");
        debug_assert!(r.is_zero());
        // Strip from g everything sharing a factor with w; what survives has
        // every multiplicity divisible by p and recurses through the
        // derivative-zero branch above.
        let mut c = g;
        loop {
            let d = c.gcd(&w);
            if d.degree().unwrap_or(0) == 0 {
                break;
            }
            let (q, r) = c.divmod(&d).expect("gcd divides");
            debug_assert!(r.is_zero());
            c = q;
        }
        if c.degree().unwrap_or(0) == 0 {
            return w.monic();
        }
        w.mul(&c.squarefree_part()?).monic()
    }

    /// Companion matrix of a monic polynomial of degree >= 1.
    pub fn companion_matrix(&self) -> Result<Matrix> {
        if !self.is_monic() || self.degree() == Some(0) {
            return Err(Error::BadParameters(
                "companion matrix needs a monic polynomial of degree >= 1".into(),
            ));
        }
        let n = self.degree().unwrap();
        let mut m = Matrix::zeros(self.spec, n, n);
        for i in 1..n {
            m[(i, i - 1)] = self.spec.one();
        }
        for i in 0..n {
            m[(i, n - 1)] = -&self.coeff(i);
        }
        Ok(m)
    }

    /// Given f with f' = 0 over F_p (so f = h(X^p)), returns h.
    fn compress_pth_powers(&self, p: u64) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p as usize)
            .cloned()
            .collect();
        Polynomial::new(self.spec, coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn divmod_round_trips() {
        let q = FieldSpec::rationals();
        let a = Polynomial::from_i64(q, &[2, 0, -3, 1]);
        let b = Polynomial::from_i64(q, &[-1, 1]);
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        // Derivative of x^2+x+1 over F_2 is 1, so Euclid terminates at once.
        let p = Polynomial::from_i64(f(2), &[1, 1, 1]);
        assert_eq!(p.derivative(), Polynomial::one(f(2)));
        assert_eq!(p.gcd(&p.derivative()), Polynomial::one(f(2)));
    }

    #[test]
    fn squarefree_part_of_squared_linear() {
        let q = FieldSpec::rationals();
        let sq = Polynomial::from_i64(q, &[1, -2, 1]); // (x-1)^2
        assert_eq!(sq.squarefree_part().unwrap(), Polynomial::from_i64(q, &[-1, 1]));
    }

    #[test]
    fn squarefree_part_of_xp_minus_one() {
        // x^p - 1 = (x - 1)^p over F_p.
        for p in [2u64, 3, 5, 7] {
            let spec = f(p);
            let mut coeffs = vec![0i64; p as usize + 1];
            coeffs[0] = -1;
            coeffs[p as usize] = 1;
            let poly = Polynomial::from_i64(spec, &coeffs);
            assert_eq!(
                poly.squarefree_part().unwrap(),
                Polynomial::from_i64(spec, &[-1, 1])
            );
        }
    }

    #[test]
    fn squarefree_part_keeps_squarefree_input() {
        let p = Polynomial::from_i64(f(2), &[1, 1, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
    }

    #[test]
    fn squarefree_part_rejects_zero() {
        assert_eq!(
            Polynomial::zero(f(2)).squarefree_part(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_part_with_irreducible_square_over_f2() {
        // (x^2 + x + 1)^2 (x + 1)^3: one multiplicity divisible by p = 2,
        // one not, with an irreducible quadratic factor.
        let spec = f(2);
        let quad = Polynomial::from_i64(spec, &[1, 1, 1]);
        let lin = Polynomial::from_i64(spec, &[1, 1]);
        let poly = quad.mul(&quad).mul(&lin).mul(&lin).mul(&lin);
        let expect = quad.mul(&lin);
        assert_eq!(poly.squarefree_part().unwrap(), expect);
    }

    #[test]
    fn squarefree_part_handles_mixed_pth_power_multiplicities() {
        // (x-1)^2 (x-2)^3 over F_3: one multiplicity divisible by p, one not.
        let spec = f(3);
        let one = spec.one();
        let two = spec.from_integer(2);
        let poly = Polynomial::from_roots(spec, &[one.clone(), one.clone(), two.clone(), two.clone(), two.clone()]);
        let expect = Polynomial::from_roots(spec, &[one, two]);
        assert_eq!(poly.squarefree_part().unwrap(), expect);
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let spec = f(5);
        let a = Polynomial::from_i64(spec, &[1, 0, 1]);
        let b = Polynomial::from_i64(spec, &[2, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert!(g.is_monic());
    }

    #[test]
    fn eval_matrix_matches_scalar_eval_on_diagonal() {
        let q = FieldSpec::rationals();
        let poly = Polynomial::from_i64(q, &[2, -3, 1]);
        let m = Matrix::from_i64(q, &[&[1, 0], &[0, 2]]);
        let evald = poly.eval_matrix(&m);
        assert_eq!(evald[(0, 0)], poly.eval(&q.from_integer(1)));
        assert_eq!(evald[(1, 1)], poly.eval(&q.from_integer(2)));
    }
}
