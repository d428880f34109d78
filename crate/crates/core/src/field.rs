//! Exact scalar arithmetic for the two supported coefficient fields: the
//! prime field F_p and the rational numbers.
//!
//! F_p residues are kept reduced in `[0, p)`; rationals are arbitrary
//! precision and always in lowest terms with positive denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus: products of two residues must fit u64.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A coefficient field: either F_p for a prime p, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    /// The prime field F_p. Rejects composite moduli and p >= 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// p for F_p, 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Prime(p) => p,
            Kind::Rationals => 0,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.0, Kind::Prime(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        match self.0 {
            Kind::Prime(p) => FieldElement(Repr::Mod {
                residue: n.rem_euclid(p as i64) as u64,
                modulus: p,
            }),
            Kind::Rationals => FieldElement(Repr::Rat(BigRational::from(BigInt::from(n)))),
        }
    }

    /// Exact fraction n/d; over F_p this is n * d^{-1}.
    pub fn from_fraction(&self, n: i64, d: i64) -> Result<FieldElement> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Prime(_) => self.from_integer(n).div(&self.from_integer(d)),
            Kind::Rationals => Ok(FieldElement(Repr::Rat(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    /// Parses `-3`, `2/5`, etc. F_p scalars are reduced mod p.
    pub fn parse_scalar(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        let bad = || Error::ParseScalar(text.to_string());
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let numer: BigInt = num_str.parse().map_err(|_| bad())?;
        let denom: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Prime(p) => {
                let n = self.reduce_bigint(&numer, p);
                let d = self.reduce_bigint(&denom, p);
                n.div(&d)
            }
            Kind::Rationals => Ok(FieldElement(Repr::Rat(BigRational::new(numer, denom)))),
        }
    }

    fn reduce_bigint(&self, n: &BigInt, p: u64) -> FieldElement {
        let p_big = BigInt::from(p);
        let mut r = n % &p_big;
        if r.is_negative() {
            r += &p_big;
        }
        let (_, digits) = r.to_u64_digits();
        FieldElement(Repr::Mod {
            residue: digits.first().copied().unwrap_or(0),
            modulus: p,
        })
    }

    /// Every element of F_p in residue order. Unsupported for the rationals.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        match self.0 {
            Kind::Prime(p) => Ok((0..p)
                .map(|r| FieldElement(Repr::Mod { residue: r, modulus: p }))
                .collect()),
            Kind::Rationals => Err(Error::UnsupportedField("a prime field")),
        }
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        *self == a.spec()
    }

    fn check_member(&self, a: &FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    /// Checked arithmetic entry point: validates operand membership.
    pub fn arith(
        &self,
        op: FieldOp,
        a: &FieldElement,
        b: Option<&FieldElement>,
    ) -> Result<FieldElement> {
        self.check_member(a)?;
        if let Some(b) = b {
            self.check_member(b)?;
        }
        let rhs = || b.ok_or(Error::DivisionByZero);
        match op {
            FieldOp::Add => Ok(a + rhs()?),
            FieldOp::Sub => Ok(a - rhs()?),
            FieldOp::Mul => Ok(a * rhs()?),
            FieldOp::Div => a.div(rhs()?),
            FieldOp::Neg => Ok(-a),
            FieldOp::Inv => a.inv(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// An exact scalar belonging to a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Mod { residue: u64, modulus: u64 },
    Rat(BigRational),
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match &self.0 {
            Repr::Mod { modulus, .. } => FieldSpec(Kind::Prime(*modulus)),
            Repr::Rat(_) => FieldSpec(Kind::Rationals),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Mod { residue, .. } => *residue == 0,
            Repr::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Mod { residue, .. } => *residue == 1,
            Repr::Rat(q) => q.is_one(),
        }
    }

    /// Residue for F_p elements, None for rationals.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod { residue, .. } => Some(*residue),
            Repr::Rat(_) => None,
        }
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Mod { .. } => None,
            Repr::Rat(q) => Some(q),
        }
    }

    pub fn from_big_rational(q: BigRational) -> FieldElement {
        FieldElement(Repr::Rat(q))
    }

    /// Total order within one field: residues by value, rationals by value.
    pub fn compare(&self, other: &FieldElement) -> std::cmp::Ordering {
        match (&self.0, &other.0) {
            (Repr::Mod { residue: a, .. }, Repr::Mod { residue: b, .. }) => {
                self.same_modulus(other);
                a.cmp(b)
            }
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            _ => panic!("mixed-field comparison"),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.0 {
            Repr::Mod { residue, modulus } => Ok(FieldElement(Repr::Mod {
                residue: mod_pow(*residue, *modulus - 2, *modulus),
                modulus: *modulus,
            })),
            Repr::Rat(q) => Ok(FieldElement(Repr::Rat(q.recip()))),
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self * &other.inv()?)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// a^p over F_p (the Frobenius map, which fixes the prime field).
    pub fn frobenius(&self) -> Result<FieldElement> {
        match &self.0 {
            Repr::Mod { modulus, .. } => Ok(self.pow(*modulus)),
            Repr::Rat(_) => Err(Error::UnsupportedField("a prime field")),
        }
    }

    fn same_modulus(&self, other: &FieldElement) -> u64 {
        match (&self.0, &other.0) {
            (Repr::Mod { modulus: p, .. }, Repr::Mod { modulus: q, .. }) if p == q => *p,
            _ => panic!("mixed-field arithmetic: {:?} vs {:?}", self.spec(), other.spec()),
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, other: &FieldElement) -> FieldElement {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat(a + b)),
            (Repr::Mod { residue: a, .. }, Repr::Mod { residue: b, .. }) => {
                let p = self.same_modulus(other);
                FieldElement(Repr::Mod { residue: (a + b) % p, modulus: p })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, other: &FieldElement) -> FieldElement {
        self + &(-other)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, other: &FieldElement) -> FieldElement {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat(a * b)),
            (Repr::Mod { residue: a, .. }, Repr::Mod { residue: b, .. }) => {
                let p = self.same_modulus(other);
                FieldElement(Repr::Mod { residue: (a * b) % p, modulus: p })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rat(a) => FieldElement(Repr::Rat(-a)),
            Repr::Mod { residue, modulus } => FieldElement(Repr::Mod {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { residue, .. } => write!(f, "{residue}"),
            Repr::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
