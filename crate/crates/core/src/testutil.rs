//! Seeded random generators shared by the unit tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Matrix, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_element(spec: FieldSpec, r: &mut ChaCha8Rng) -> FieldElement {
    match spec.modulus() {
        Some(p) => spec.from_integer(r.gen_range(0..p) as i64),
        None => {
            let n = r.gen_range(-6..=6);
            let d = r.gen_range(1..=4);
            spec.from_fraction(n, d).expect("nonzero denominator")
        }
    }
}

pub fn rand_vector(spec: FieldSpec, n: usize, r: &mut ChaCha8Rng) -> Vector {
    (0..n).map(|_| rand_element(spec, r)).collect()
}

pub fn rand_matrix(spec: FieldSpec, rows: usize, cols: usize, r: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_rows(spec, (0..rows).map(|_| rand_vector(spec, cols, r)).collect())
}
