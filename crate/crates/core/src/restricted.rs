//! p-mappings of modular Lie algebras: the Jacobson correction terms
//! s_i(a, b), existence and construction of a p-mapping by solving
//! ad(y) = (ad b_j)^p per basis element, axiom verification, p-th-power
//! closure of matrix algebras, and the solution-space/uniqueness analysis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::killing::killing_form;
use crate::liealg::LieAlgebra;
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_zero, Matrix, Vector};

fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A candidate p-operation given by its basis images; extension to arbitrary
/// elements goes through the semilinearity and Jacobson-sum axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMapping {
    algebra: LieAlgebra,
    images: Vec<Vector>,
}

/// Why no p-mapping exists: the basis element whose system is inconsistent
/// and the matrix (ad b_j)^p that no ad(y) matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRestrictableWitness {
    pub basis_index: usize,
    pub ad_power: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PMappingSearch {
    Restricted(PMapping),
    NotRestrictable(NonRestrictableWitness),
}

/// The Jacobson terms s_1 .. s_{p-1} for a fixed pair (a, b), extracted from
/// (ad(a⊗X + b⊗1))^{p-1}(a⊗1) in L ⊗ F[X]: the coefficient of X^{i-1} is
/// i·s_i(a, b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiTable {
    pub a: Vector,
    pub b: Vector,
    pub entries: Vec<Vector>,
}

impl SiTable {
    pub fn sum(&self, spec: FieldSpec, dim: usize) -> Vector {
        let mut acc = vec_zero(spec, dim);
        for s in &self.entries {
            acc = vec_add(&acc, s);
        }
        acc
    }
}

fn prime_of(algebra: &LieAlgebra) -> Result<u64> {
    algebra
        .spec()
        .modulus()
        .ok_or(Error::UnsupportedField("a prime field"))
}

/// Checks (ad x)^m(y) = sum_{i=0..m} (-1)^{m-i} C(m, i) x^i y x^{m-i} for
/// every ordered pair from the sample, comparing against directly iterated
/// commutators.
pub fn ad_power_identity_check(mats: &[Matrix], m: u64) -> Result<bool> {
    let first = mats
        .first()
        .ok_or_else(|| Error::DimensionMismatch("need at least one matrix".into()))?;
    let spec = first.spec();
    let n = first.rows();
    spec.modulus().ok_or(Error::UnsupportedField("a prime field"))?;
    for mat in mats {
        if !mat.is_square() || mat.rows() != n || mat.spec() != spec {
            return Err(Error::DimensionMismatch(
                "matrices must be square, equal-sized, over one field".into(),
            ));
        }
    }
    for x in mats {
        for y in mats {
            let mut lhs = y.clone();
            for _ in 0..m {
                lhs = x.commutator(&lhs);
            }
            let mut rhs = Matrix::zeros(spec, n, n);
            for i in 0..=m {
                let sign = if (m - i) % 2 == 0 { 1 } else { -1 };
                let coeff = spec.from_integer(sign * binomial(m, i));
                let term = x.pow(i).matmul(y).matmul(&x.pow(m - i)).scale(&coeff);
                rhs = rhs.add(&term);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: u64, k: u64) -> i64 {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as i64
}

/// Expands (ad(aX + b))^{p-1}(a) inside L ⊗ F[X], where the bracket acts as
/// [u ⊗ X^r, v ⊗ X^s] = [u, v] ⊗ X^{r+s}, and divides the X^{i-1}
/// coefficient by i.
pub fn jacobson_si(algebra: &LieAlgebra, a: &[FieldElement], b: &[FieldElement]) -> Result<SiTable> {
    let p = prime_of(algebra)?;
    let dim = algebra.dim();
    if a.len() != dim || b.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "algebra has dimension {dim} but operands have lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let spec = algebra.spec();
    // w = a X + b as a polynomial with coefficients in L.
    let w = [b.to_vec(), a.to_vec()];
    let mut acc: Vec<Vector> = vec![a.to_vec()];
    for _ in 0..(p - 1) {
        let mut next: Vec<Vector> = vec![vec_zero(spec, dim); acc.len() + 1];
        for (r, wr) in w.iter().enumerate() {
            for (s, vs) in acc.iter().enumerate() {
                let term = algebra.bracket(wr, vs)?;
                next[r + s] = vec_add(&next[r + s], &term);
            }
        }
        acc = next;
    }
    debug_assert!(
        acc.last().is_none_or(|top| vec_is_zero(top)),
        "the X^{{p-1}} coefficient must vanish"
    );
    let mut entries = Vec::with_capacity(p as usize - 1);
    for i in 1..p {
        let inv = spec.from_integer(i as i64).inv()?;
        entries.push(vec_scale(&inv, &acc[i as usize - 1]));
    }
    Ok(SiTable {
        a: a.to_vec(),
        b: b.to_vec(),
        entries,
    })
}

/// For each basis element solves the linear system ad(y) = (ad b_j)^p over
/// the coordinates of y; free variables are pinned to zero, so the images
/// are deterministic. Returns the inconsistency certificate when some
/// system has no solution.
pub fn find_p_mapping(algebra: &LieAlgebra) -> Result<PMappingSearch> {
    let p = prime_of(algebra)?;
    let dim = algebra.dim();
    let spec = algebra.spec();
    // Column k is the flattened matrix of ad b_k.
    let system = Matrix::from_rows_with_cols(
        spec,
        dim,
        (0..dim).map(|k| algebra.ad_basis(k).flatten()).collect::<Vec<_>>(),
    )
    .transpose();
    let mut images = Vec::with_capacity(dim);
    for j in 0..dim {
        let target = algebra.ad_basis(j).pow(p);
        match system.solve(&target.flatten())? {
            Some(y) => images.push(y),
            None => {
                return Ok(PMappingSearch::NotRestrictable(NonRestrictableWitness {
                    basis_index: j,
                    ad_power: target,
                }))
            }
        }
    }
    Ok(PMappingSearch::Restricted(PMapping { algebra: algebra.clone(), images }))
}

impl PMapping {
    /// Wraps basis images without checking the axioms; `verify` reports
    /// whether they actually hold.
    pub fn from_images(algebra: LieAlgebra, images: Vec<Vector>) -> Result<Self> {
        prime_of(&algebra)?;
        if images.len() != algebra.dim() || images.iter().any(|v| v.len() != algebra.dim()) {
            return Err(Error::DimensionMismatch(
                "one image vector per basis element required".into(),
            ));
        }
        Ok(PMapping { algebra, images })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &Vector {
        &self.images[j]
    }

    /// v^{[p]} for v = sum alpha_j b_j: folds the Jacobson sum axiom over
    /// the nonzero terms in ascending basis order, applying semilinearity
    /// to each scaled basis term.
    pub fn evaluate(&self, v: &[FieldElement]) -> Result<Vector> {
        let order: Vec<usize> = (0..self.algebra.dim()).collect();
        self.evaluate_with_term_order(v, &order)
    }

    /// Same fold with an explicit term order; any order must agree when the
    /// s_i implementation is correct.
    pub fn evaluate_with_term_order(&self, v: &[FieldElement], order: &[usize]) -> Result<Vector> {
        let dim = self.algebra.dim();
        let p = prime_of(&self.algebra)?;
        if v.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {dim} but operand has length {}",
                v.len()
            )));
        }
        let spec = self.algebra.spec();
        let mut acc_vec: Option<Vector> = None;
        let mut acc_img = vec_zero(spec, dim);
        for &j in order {
            if v[j].is_zero() {
                continue;
            }
            let term = vec_scale(&v[j], &self.algebra.basis_element(j));
            let term_img = vec_scale(&v[j].pow(p), &self.images[j]);
            match acc_vec {
                None => {
                    acc_vec = Some(term);
                    acc_img = term_img;
                }
                Some(prev) => {
                    let si = jacobson_si(&self.algebra, &prev, &term)?;
                    acc_img = vec_add(&vec_add(&acc_img, &term_img), &si.sum(spec, dim));
                    acc_vec = Some(vec_add(&prev, &term));
                }
            }
        }
        Ok(acc_img)
    }
}

/// Outcome of checking the three p-mapping axioms; `first_violation` names
/// the earliest failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMappingVerification {
    pub axiom1: bool,
    pub axiom2: bool,
    pub axiom3: bool,
    pub first_violation: Option<String>,
}

impl PMappingVerification {
    pub fn all_pass(&self) -> bool {
        self.axiom1 && self.axiom2 && self.axiom3
    }
}

/// Axiom 1 exactly on every basis element; axiom 2 exhaustively over all
/// scalars per basis element; axiom 3 on all basis pairs plus `samples`
/// random pairs evaluated through the fold.
pub fn verify_p_mapping(pm: &PMapping, samples: usize, seed: u64) -> Result<PMappingVerification> {
    let algebra = pm.algebra();
    let p = prime_of(algebra)?;
    let spec = algebra.spec();
    let dim = algebra.dim();
    let mut first_violation = None;
    let mut note = |flag: &mut bool, msg: String| {
        *flag = false;
        if first_violation.is_none() {
            first_violation = Some(msg);
        }
    };

    let mut axiom1 = true;
    for j in 0..dim {
        let lhs = algebra.ad(pm.image(j))?;
        let rhs = algebra.ad_basis(j).pow(p);
        if lhs != rhs {
            note(&mut axiom1, format!("ad(b{j}^[p]) != (ad b{j})^p at basis index {j}"));
            break;
        }
    }

    let mut axiom2 = true;
    'a2: for j in 0..dim {
        for alpha in spec.elements()? {
            let scaled = vec_scale(&alpha, &algebra.basis_element(j));
            let lhs = pm.evaluate(&scaled)?;
            let rhs = vec_scale(&alpha.pow(p), pm.image(j));
            if lhs != rhs {
                note(
                    &mut axiom2,
                    format!("(alpha b{j})^[p] != alpha^p b{j}^[p] for alpha = {alpha}"),
                );
                break 'a2;
            }
        }
    }

    let mut axiom3 = true;
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                pairs.push((algebra.basis_element(i), algebra.basis_element(j)));
            }
        }
    }
    let mut rng = seeded_rng(seed);
    let p_i64 = p as i64;
    for _ in 0..samples {
        let u: Vector = (0..dim)
            .map(|_| spec.from_integer(rng.gen_range(0..p_i64)))
            .collect();
        let v: Vector = (0..dim)
            .map(|_| spec.from_integer(rng.gen_range(0..p_i64)))
            .collect();
        pairs.push((u, v));
    }
    for (u, v) in &pairs {
        let lhs = pm.evaluate(&vec_add(u, v))?;
        let si = jacobson_si(algebra, u, v)?;
        let rhs = vec_add(
            &vec_add(&pm.evaluate(u)?, &pm.evaluate(v)?),
            &si.sum(spec, dim),
        );
        if lhs != rhs {
            note(&mut axiom3, "Jacobson sum axiom fails".to_string());
            break;
        }
    }

    Ok(PMappingVerification { axiom1, axiom2, axiom3, first_violation })
}

/// Which matrix family the p-th power map is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosurePredicate {
    /// All of gl: closure is immediate.
    Gl,
    /// Trace-zero matrices: checks tr(m^p) = 0 for every input.
    Sl,
}

pub fn pth_power_closure_check(mats: &[Matrix], predicate: ClosurePredicate) -> Result<bool> {
    let first = mats
        .first()
        .ok_or_else(|| Error::DimensionMismatch("need at least one matrix".into()))?;
    let spec = first.spec();
    let p = spec
        .modulus()
        .ok_or(Error::UnsupportedField("a prime field"))?;
    for m in mats {
        if !m.is_square() || m.spec() != spec {
            return Err(Error::DimensionMismatch(
                "matrices must be square over one prime field".into(),
            ));
        }
    }
    match predicate {
        ClosurePredicate::Gl => Ok(true),
        ClosurePredicate::Sl => {
            for m in mats {
                if !m.trace().is_zero() {
                    return Err(Error::BadParameters(
                        "sl closure check requires trace-zero inputs".into(),
                    ));
                }
            }
            Ok(mats.iter().all(|m| m.pow(p).trace().is_zero()))
        }
    }
}

/// The solution set of each basis system ad(y) = (ad b_j)^p is a coset of
/// the center, so the p-mapping is unique exactly when the center vanishes.
/// A non-degenerate Killing form forces a zero center, hence uniqueness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpaceReport {
    pub center_dim: usize,
    pub unique: bool,
    pub killing_nondegenerate: bool,
}

pub fn p_mapping_solution_space(algebra: &LieAlgebra) -> Result<SolutionSpaceReport> {
    prime_of(algebra)?;
    let center_dim = algebra.center().dim();
    let killing_nondegenerate = killing_form(algebra).is_nondegenerate();
    let unique = center_dim == 0;
    assert!(
        !killing_nondegenerate || unique,
        "a non-degenerate Killing form forces a trivial center"
    );
    Ok(SolutionSpaceReport { center_dim, unique, killing_nondegenerate })
}

/// Checks f(a + b) = f(a) + f(b) on sampled pairs and f(alpha a) = alpha^p
/// f(a) exhaustively over alpha for every basis element.
pub fn is_p_semilinear(
    algebra: &LieAlgebra,
    map: &dyn Fn(&[FieldElement]) -> Vector,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    let p = prime_of(algebra)?;
    let spec = algebra.spec();
    let dim = algebra.dim();
    for j in 0..dim {
        let b = algebra.basis_element(j);
        let fb = map(&b);
        for alpha in spec.elements()? {
            if map(&vec_scale(&alpha, &b)) != vec_scale(&alpha.pow(p), &fb) {
                return Ok(false);
            }
        }
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..samples {
        let u: Vector = (0..dim)
            .map(|_| spec.from_integer(rng.gen_range(0..p as i64)))
            .collect();
        let v: Vector = (0..dim)
            .map(|_| spec.from_integer(rng.gen_range(0..p as i64)))
            .collect();
        if map(&vec_add(&u, &v)) != vec_add(&map(&u), &map(&v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The additive (hence linear) extension of a basis-image table.
pub fn linear_extension(images: Vec<Vector>) -> impl Fn(&[FieldElement]) -> Vector {
    move |v: &[FieldElement]| {
        let mut acc = vec![v[0].spec().zero(); images[0].len()];
        for (c, img) in v.iter().zip(&images) {
            acc = vec_add(&acc, &vec_scale(c, img));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{builtin, gl_basis_matrices, BuiltinName};
    use crate::linalg::all_vectors;
    use crate::testutil::{rand_matrix, rand_vector, rng};

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn pmap_of(algebra: &LieAlgebra) -> PMapping {
        match find_p_mapping(algebra).unwrap() {
            PMappingSearch::Restricted(pm) => pm,
            PMappingSearch::NotRestrictable(w) => {
                panic!("expected a p-mapping, got witness at {}", w.basis_index)
            }
        }
    }

    #[test]
    fn ad_power_identity_small_cases() {
        let mut r = rng(3);
        for p in [2u64, 3, 5] {
            let mats: Vec<Matrix> = (0..3).map(|_| rand_matrix(f(p), 2, 2, &mut r)).collect();
            assert!(ad_power_identity_check(&mats, 1).unwrap());
            assert!(ad_power_identity_check(&mats, p).unwrap());
            assert!(ad_power_identity_check(&mats, 2 * p).unwrap());
        }
        let zero = Matrix::zeros(f(3), 2, 2);
        let y = Matrix::from_i64(f(3), &[&[1, 2], &[0, 1]]);
        for m in 1..=4 {
            let mut lhs = y.clone();
            for _ in 0..m {
                lhs = zero.commutator(&lhs);
            }
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn ad_to_the_p_is_ad_of_pth_power() {
        // (ad x)^p(y) = x^p y - y x^p over F_p.
        let mut r = rng(5);
        for p in [2u64, 3] {
            for _ in 0..20 {
                let x = rand_matrix(f(p), 2, 2, &mut r);
                let y = rand_matrix(f(p), 2, 2, &mut r);
                let mut lhs = y.clone();
                for _ in 0..p {
                    lhs = x.commutator(&lhs);
                }
                let xp = x.pow(p);
                assert_eq!(lhs, xp.matmul(&y).sub(&y.matmul(&xp)));
            }
        }
    }

    #[test]
    fn jacobson_si_on_heisenberg() {
        let h3 = builtin(BuiltinName::Heisenberg, f(2), None).unwrap();
        let x = h3.basis_element(0);
        let y = h3.basis_element(1);
        let table = jacobson_si(&h3, &x, &y).unwrap();
        // (ad(xX + y))(x) = [y, x] = -z = z over F_2.
        assert_eq!(table.entries, vec![h3.basis_element(2)]);

        let zero = vec_zero(f(2), 3);
        let table = jacobson_si(&h3, &zero, &y).unwrap();
        assert!(table.entries.iter().all(|s| vec_is_zero(s)));
    }

    #[test]
    fn jacobson_si_matches_matrix_expansion_in_gl2() {
        // Oracle: expand (aX + b)^p as a matrix polynomial and compare the
        // X^i coefficients with s_i, plus a^p at X^p and b^p at X^0.
        let mut r = rng(17);
        for p in [2u64, 3, 5] {
            let spec = f(p);
            let gl = builtin(BuiltinName::Gl, spec, Some(2)).unwrap();
            for _ in 0..20 {
                let a = rand_matrix(spec, 2, 2, &mut r);
                let b = rand_matrix(spec, 2, 2, &mut r);
                // Matrix coordinates in the e_{rs} basis are just entries.
                let a_coords = a.flatten();
                let b_coords = b.flatten();
                let table = jacobson_si(&gl, &a_coords, &b_coords).unwrap();

                // (aX + b)^p by repeated convolution.
                let mut poly: Vec<Matrix> = vec![Matrix::identity(spec, 2)];
                for _ in 0..p {
                    let mut next = vec![Matrix::zeros(spec, 2, 2); poly.len() + 1];
                    for (d, coeff) in poly.iter().enumerate() {
                        next[d] = next[d].add(&b.matmul(coeff));
                        next[d + 1] = next[d + 1].add(&a.matmul(coeff));
                    }
                    poly = next;
                }
                assert_eq!(poly[0], b.pow(p));
                assert_eq!(poly[p as usize], a.pow(p));
                for i in 1..p as usize {
                    let mut si_mat = Matrix::zeros(spec, 2, 2);
                    for (k, c) in table.entries[i - 1].iter().enumerate() {
                        si_mat = si_mat.add(&gl_basis_matrices(spec, 2)[k].scale(c));
                    }
                    assert_eq!(si_mat, poly[i], "p = {p}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn jacobson_sum_rule_in_gl() {
        // (a + b)^p = a^p + b^p + sum_i s_i(a, b) with >= 100 random pairs.
        let mut r = rng(19);
        let mut checked = 0;
        for p in [2u64, 3, 5] {
            let spec = f(p);
            for n in 2..=3usize {
                let gl = builtin(BuiltinName::Gl, spec, Some(n)).unwrap();
                for _ in 0..20 {
                    let a = rand_matrix(spec, n, n, &mut r);
                    let b = rand_matrix(spec, n, n, &mut r);
                    let table = jacobson_si(&gl, &a.flatten(), &b.flatten()).unwrap();
                    let si_sum = table.sum(spec, n * n);
                    let mut sum_mat = Matrix::zeros(spec, n, n);
                    for (k, c) in si_sum.iter().enumerate() {
                        sum_mat = sum_mat.add(&gl_basis_matrices(spec, n)[k].scale(c));
                    }
                    let lhs = a.add(&b).pow(p);
                    let rhs = a.pow(p).add(&b.pow(p)).add(&sum_mat);
                    assert_eq!(lhs, rhs);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 100);
    }

    #[test]
    fn sl2_images_over_f3_and_f5() {
        for p in [3u64, 5] {
            let sl2 = builtin(BuiltinName::Sl2, f(p), None).unwrap();
            let pm = pmap_of(&sl2);
            assert!(vec_is_zero(pm.image(0)));
            assert!(vec_is_zero(pm.image(1)));
            assert_eq!(pm.image(2), &sl2.basis_element(2));
            assert!(verify_p_mapping(&pm, 100, 7).unwrap().all_pass());
        }
    }

    #[test]
    fn heisenberg_images_are_zero() {
        for p in [2u64, 3] {
            let h3 = builtin(BuiltinName::Heisenberg, f(p), None).unwrap();
            let pm = pmap_of(&h3);
            for j in 0..3 {
                assert!(vec_is_zero(pm.image(j)), "p = {p}, basis {j}");
            }
            assert!(verify_p_mapping(&pm, 100, 11).unwrap().all_pass());
        }
    }

    #[test]
    fn fsl2_is_not_restrictable() {
        let fsl = builtin(BuiltinName::Fsl2, f(2), None).unwrap();
        let witness = match find_p_mapping(&fsl).unwrap() {
            PMappingSearch::NotRestrictable(w) => w,
            PMappingSearch::Restricted(_) => panic!("fsl2 must not be restrictable"),
        };
        assert_eq!(witness.basis_index, 0);
        // Exhaustive certificate: no alpha among all 8 vectors satisfies
        // ad(alpha) = (ad e)^2.
        let target = fsl.ad_basis(0).pow(2);
        assert_eq!(witness.ad_power, target);
        for alpha in all_vectors(f(2), 3).unwrap() {
            assert_ne!(fsl.ad(&alpha).unwrap(), target);
        }
    }

    #[test]
    fn evaluate_on_basis_and_sums() {
        let h3 = builtin(BuiltinName::Heisenberg, f(2), None).unwrap();
        let pm = pmap_of(&h3);
        assert_eq!(pm.evaluate(&h3.basis_element(0)).unwrap(), *pm.image(0));
        let xy = vec_add(&h3.basis_element(0), &h3.basis_element(1));
        assert_eq!(pm.evaluate(&xy).unwrap(), h3.basis_element(2));
    }

    #[test]
    fn aff2_evaluation_law_exhaustive() {
        // (alpha h + beta x)^[p] = alpha^p h + alpha^{p-1} beta x.
        for p in [2u64, 3, 5] {
            let spec = f(p);
            let aff = builtin(BuiltinName::Aff2, spec, None).unwrap();
            let pm = pmap_of(&aff);
            for alpha in spec.elements().unwrap() {
                for beta in spec.elements().unwrap() {
                    let v = vec![alpha.clone(), beta.clone()];
                    let expect = vec![alpha.pow(p), &alpha.pow(p - 1) * &beta];
                    assert_eq!(pm.evaluate(&v).unwrap(), expect, "p = {p}");
                }
            }
        }
    }

    #[test]
    fn forced_wrong_image_fails_axiom_one() {
        let sl2 = builtin(BuiltinName::Sl2, f(3), None).unwrap();
        let images = vec![
            vec_zero(f(3), 3),
            vec_zero(f(3), 3),
            vec_zero(f(3), 3), // h -> 0 is wrong: (ad h)^3 = ad h != 0
        ];
        let pm = PMapping::from_images(sl2, images).unwrap();
        let report = verify_p_mapping(&pm, 20, 13).unwrap();
        assert!(!report.axiom1);
        assert!(!report.all_pass());
        assert!(report.first_violation.is_some());
    }

    #[test]
    fn trivial_pmapping_on_one_dimensional_algebra() {
        let a = LieAlgebra::from_integer_table(f(3), &["a"], &[]).unwrap();
        let pm = PMapping::from_images(a, vec![vec_zero(f(3), 1)]).unwrap();
        assert!(verify_p_mapping(&pm, 50, 17).unwrap().all_pass());
    }

    #[test]
    fn fold_order_independence() {
        let mut r = rng(29);
        for p in [2u64, 3] {
            let spec = f(p);
            let algebras = [
                builtin(BuiltinName::Heisenberg, spec, None).unwrap(),
                builtin(BuiltinName::Aff2, spec, None).unwrap(),
            ];
            for algebra in &algebras {
                let pm = pmap_of(algebra);
                for _ in 0..30 {
                    let v = rand_vector(spec, algebra.dim(), &mut r);
                    let reference = pm.evaluate(&v).unwrap();
                    let mut order: Vec<usize> = (0..algebra.dim()).collect();
                    for _ in 0..3 {
                        let i = r.gen_range(0..order.len());
                        let j = r.gen_range(0..order.len());
                        order.swap(i, j);
                        assert_eq!(
                            pm.evaluate_with_term_order(&v, &order).unwrap(),
                            reference
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn functoriality_of_evaluated_images() {
        // ad(v^[p]) = (ad v)^p for random v.
        let mut r = rng(37);
        let mut checked = 0;
        for (p, name) in [
            (3u64, BuiltinName::Sl2),
            (3, BuiltinName::Heisenberg),
            (5, BuiltinName::Aff2),
        ] {
            let algebra = builtin(name, f(p), None).unwrap();
            let pm = pmap_of(&algebra);
            for _ in 0..40 {
                let v = rand_vector(f(p), algebra.dim(), &mut r);
                let img = pm.evaluate(&v).unwrap();
                assert_eq!(algebra.ad(&img).unwrap(), algebra.ad(&v).unwrap().pow(p));
                checked += 1;
            }
        }
        assert!(checked >= 100);
    }

    #[test]
    fn pth_power_closure_checks() {
        // All 8 trace-zero binary 2x2 matrices.
        let spec = f(2);
        let mut traceless = Vec::new();
        for v in all_vectors(spec, 3).unwrap() {
            let m = Matrix::from_rows(
                spec,
                vec![
                    vec![v[0].clone(), v[1].clone()],
                    vec![v[2].clone(), v[0].clone()],
                ],
            );
            traceless.push(m);
        }
        assert_eq!(traceless.len(), 8);
        assert!(pth_power_closure_check(&traceless, ClosurePredicate::Sl).unwrap());

        let mut e12 = Matrix::zeros(f(5), 2, 2);
        e12[(0, 1)] = f(5).one();
        assert!(e12.pow(5).is_zero());
        assert!(pth_power_closure_check(&[e12], ClosurePredicate::Sl).unwrap());

        let h = Matrix::diagonal(f(3), &[1, -1]);
        assert_eq!(h.pow(3), h);
        assert!(pth_power_closure_check(&[h.clone()], ClosurePredicate::Sl).unwrap());
        assert!(pth_power_closure_check(&[h], ClosurePredicate::Gl).unwrap());

        let not_traceless = Matrix::identity(f(3), 2);
        assert!(matches!(
            pth_power_closure_check(&[not_traceless], ClosurePredicate::Sl),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn solution_space_reports() {
        let aff = builtin(BuiltinName::Aff2, f(3), None).unwrap();
        let r = p_mapping_solution_space(&aff).unwrap();
        assert_eq!(r.center_dim, 0);
        assert!(r.unique);

        let h3 = builtin(BuiltinName::Heisenberg, f(3), None).unwrap();
        let r = p_mapping_solution_space(&h3).unwrap();
        assert_eq!(r.center_dim, 1);
        assert!(!r.unique);

        let sl2 = builtin(BuiltinName::Sl2, f(3), None).unwrap();
        let r = p_mapping_solution_space(&sl2).unwrap();
        assert_eq!(r.center_dim, 0);
        assert!(r.unique);
        assert!(r.killing_nondegenerate);
    }

    #[test]
    fn solutions_differ_by_center() {
        // Shifting any image by a central element preserves axiom 1.
        let h3 = builtin(BuiltinName::Heisenberg, f(3), None).unwrap();
        let pm = pmap_of(&h3);
        let z = h3.basis_element(2);
        for j in 0..3 {
            let shifted = vec_add(pm.image(j), &z);
            assert_eq!(
                h3.ad(&shifted).unwrap(),
                h3.ad_basis(j).pow(3),
                "basis {j}"
            );
        }
    }

    #[test]
    fn p_semilinearity_checks() {
        let h3 = builtin(BuiltinName::Heisenberg, f(3), None).unwrap();
        let dim = h3.dim();

        let zero_map = linear_extension(vec![vec_zero(f(3), dim); dim]);
        assert!(is_p_semilinear(&h3, &zero_map, 50, 43).unwrap());

        // Any linear map over the prime field is p-semilinear because the
        // Frobenius fixes F_p; exhaustive scalar scans confirm it for the
        // identity over F_2 and F_3 and for the doubling map over F_3.
        let h2 = builtin(BuiltinName::Heisenberg, f(2), None).unwrap();
        let identity2 = linear_extension((0..3).map(|i| h2.basis_element(i)).collect());
        assert!(is_p_semilinear(&h2, &identity2, 50, 47).unwrap());

        let identity3 = linear_extension((0..3).map(|i| h3.basis_element(i)).collect());
        assert!(is_p_semilinear(&h3, &identity3, 50, 53).unwrap());

        let doubling = linear_extension(
            (0..3)
                .map(|i| vec_scale(&f(3).from_integer(2), &h3.basis_element(i)))
                .collect(),
        );
        assert!(is_p_semilinear(&h3, &doubling, 50, 59).unwrap());

        // Over F_2 the Heisenberg p-mapping is not additive: the Jacobson
        // term makes (x + y)^[2] = z while x^[2] + y^[2] = 0. (Over F_3 the
        // correction terms vanish because (ad(aX + b))^2 lands in the
        // center, so that p-mapping is additive.)
        let pm = pmap_of(&h2);
        let pmap_fn = move |v: &[FieldElement]| pm.evaluate(v).unwrap();
        assert!(!is_p_semilinear(&h2, &pmap_fn, 200, 61).unwrap());
    }
}
