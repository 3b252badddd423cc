//! Exact scalars: arbitrary-precision rationals and small prime fields.
//!
//! Every geometric routine in this crate is generic over [`FieldElement`].
//! Elements carry whatever context they need (a prime-field residue knows its
//! modulus), so constants are produced from an existing element with the
//! `*_like` constructors instead of from a separate field object.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest accepted modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime below 65536")]
    BadModulus(u64),
    #[error("characteristic {0} is not supported")]
    SmallCharacteristic(u64),
    #[error("denominator of {value} is not invertible mod {modulus}")]
    NonInvertibleDenominator { value: String, modulus: u32 },
    #[error("malformed rational {0:?}")]
    Parse(String),
    #[error("coefficients too large for rational root search")]
    RootSearchTooLarge,
}

/// Commutative ring with unit; enough structure for forms and polynomials
/// whose coefficients are themselves symbolic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// The field contract shared by [`Rational`] and [`Fp`].
pub trait FieldElement: Ring + Eq + Hash + Ord + fmt::Display {
    fn inv(&self) -> Result<Self, ScalarError>;

    /// Image of a rational number in this element's field.
    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, r: &Rational) -> Result<Self, ScalarError>;

    /// Some square root, if one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Multiplier that puts a coefficient list in canonical form, or `None`
    /// when every coefficient is zero. The first nonzero entry decides the sign
    /// (rationals) or becomes one (prime fields).
    fn canonical_scale(coeffs: &[Self]) -> Option<Self>;

    /// Distinct roots in this field of `sum coeffs[i] * t^i`, sorted.
    /// The polynomial must not be identically zero.
    fn univariate_roots(coeffs: &[Self]) -> Result<Vec<Self>, ScalarError>;

    /// Modulus for prime-field elements.
    fn modulus(&self) -> Option<u32>;

    fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * rhs.inv()?)
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Exact reduced fraction. The denominator is always positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ScalarError> {
        let d = denom.into();
        if d.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

/// Reduced fraction equal to `n/d`, sign carried on the numerator.
pub fn make_rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    Rational::new(n, d)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::Parse(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::new(n, d)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

fn big_divisors(n: &BigInt) -> Result<Vec<BigInt>, ScalarError> {
    let n = n.abs().to_u64().filter(|&v| v <= 1_000_000_000_000);
    let n = n.ok_or(ScalarError::RootSearchTooLarge)?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(BigInt::from(i));
            if i != n / i {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Ok(out)
}

impl FieldElement for Rational {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn from_rational_like(&self, r: &Rational) -> Result<Self, ScalarError> {
        Ok(r.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        let (n, d) = (self.0.numer(), self.0.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational(BigRational::new(rn, rd)))
    }

    fn canonical_scale(coeffs: &[Self]) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.0.is_zero())?;
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in coeffs.iter().filter(|c| !c.0.is_zero()) {
            g = g.gcd(c.0.numer());
            l = l.lcm(c.0.denom());
        }
        let sign = if lead.0.is_negative() { -BigInt::one() } else { BigInt::one() };
        Some(Rational(BigRational::new(sign * l, g)))
    }

    fn univariate_roots(coeffs: &[Self]) -> Result<Vec<Self>, ScalarError> {
        // Clear denominators, then apply the rational root theorem.
        let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.0.denom()));
        let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (&c.0 * &l).to_integer()).collect();
        while ints.last().is_some_and(|c| c.is_zero()) {
            ints.pop();
        }
        assert!(!ints.is_empty(), "univariate_roots of the zero polynomial");
        let mut roots = Vec::new();
        let lead_zero = ints.iter().take_while(|c| c.is_zero()).count();
        if lead_zero > 0 {
            roots.push(Rational::zero());
            ints.drain(..lead_zero);
        }
        if ints.len() > 1 {
            let num_divs = big_divisors(&ints[0])?;
            let den_divs = big_divisors(ints.last().unwrap())?;
            let eval = |r: &BigRational| {
                ints.iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * r + BigRational::from_integer(c.clone()))
            };
            for n in &num_divs {
                for d in &den_divs {
                    for cand in [BigRational::new(n.clone(), d.clone()), BigRational::new(-n.clone(), d.clone())] {
                        if eval(&cand).is_zero() {
                            roots.push(Rational(cand));
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    fn modulus(&self) -> Option<u32> {
        None
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// True iff `n` is an odd prime below [`MAX_PRIME`].
pub fn is_small_odd_prime(n: u64) -> bool {
    if !(3..MAX_PRIME).contains(&n) || n.is_multiple_of(2) {
        return false;
    }
    let mut i = 3;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

/// The field F_p for an odd prime 3 < p < 2^16.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if p == 2 || p == 3 {
            return Err(ScalarError::SmallCharacteristic(p));
        }
        if !is_small_odd_prime(p) {
            return Err(ScalarError::BadModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, n: i64) -> Fp {
        Fp { modulus: self.p, value: n.rem_euclid(self.p as i64) as u32 }
    }

    pub fn zero(&self) -> Fp {
        self.elem(0)
    }

    pub fn one(&self) -> Fp {
        self.elem(1)
    }

    pub fn from_rational(&self, r: &Rational) -> Result<Fp, ScalarError> {
        let p = BigInt::from(self.p);
        let n = r.numer().mod_floor(&p).to_i64().unwrap();
        let d = r.denom().mod_floor(&p).to_i64().unwrap();
        if d == 0 {
            return Err(ScalarError::NonInvertibleDenominator { value: r.to_string(), modulus: self.p });
        }
        Ok(self.elem(n) * self.elem(d).inv().expect("nonzero"))
    }

    /// All elements in increasing residue order.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        let p = self.p;
        (0..p).map(move |v| Fp { modulus: p, value: v })
    }
}

/// Residue in F_p. Only constructed through [`PrimeField`], so the modulus is
/// always a valid prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fp {
    modulus: u32,
    value: u32,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn pow_u64(&self, mut e: u64) -> Fp {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp { modulus: self.modulus, value: acc as u32 }
    }

    /// Legendre symbol as 0, 1 or -1.
    pub fn legendre(&self) -> i32 {
        if self.value == 0 {
            return 0;
        }
        if self.pow_u64((self.modulus as u64 - 1) / 2).value == 1 {
            1
        } else {
            -1
        }
    }

    fn check(&self, rhs: &Fp) {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime-field moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u64 + rhs.value as u64) % self.modulus as u64;
        Fp { modulus: self.modulus, value: v as u32 }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.modulus as u64;
        let v = (self.value as u64 + p - rhs.value as u64) % p;
        Fp { modulus: self.modulus, value: v as u32 }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u64 * rhs.value as u64) % self.modulus as u64;
        Fp { modulus: self.modulus, value: v as u32 }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Fp { modulus: self.modulus, value: v }
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { modulus: self.modulus, value: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { modulus: self.modulus, value: 1 }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        self.field().elem(n)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn pow(&self, e: u32) -> Self {
        self.pow_u64(e as u64)
    }
}

impl FieldElement for Fp {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.value == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.pow_u64(self.modulus as u64 - 2))
    }

    fn from_rational_like(&self, r: &Rational) -> Result<Self, ScalarError> {
        self.field().from_rational(r)
    }

    /// Tonelli–Shanks.
    fn sqrt(&self) -> Option<Self> {
        match self.legendre() {
            0 => return Some(*self),
            -1 => return None,
            _ => {}
        }
        let p = self.modulus as u64;
        let f = self.field();
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = f.elements().find(|z| z.legendre() == -1).expect("non-residue exists");
        let mut m = s;
        let mut c = z.pow_u64(q);
        let mut t = self.pow_u64(q);
        let mut r = self.pow_u64(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow_u64(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }

    fn canonical_scale(coeffs: &[Self]) -> Option<Self> {
        coeffs.iter().find(|c| c.value != 0).map(|c| c.inv().expect("nonzero"))
    }

    fn univariate_roots(coeffs: &[Self]) -> Result<Vec<Self>, ScalarError> {
        assert!(coeffs.iter().any(|c| c.value != 0), "univariate_roots of the zero polynomial");
        let f = coeffs[0].field();
        Ok(f.elements()
            .filter(|t| coeffs.iter().rev().fold(f.zero(), |acc, c| acc * *t + *c).value == 0)
            .collect())
    }

    fn modulus(&self) -> Option<u32> {
        Some(self.modulus)
    }
}

/// Quadratic residues mod p mapped to their square roots (ascending).
pub type SquaresTable = BTreeMap<u32, Vec<u32>>;

/// Table of every square mod `p` (including 0) and its roots.
pub fn squares_table(p: u64) -> Result<SquaresTable, ScalarError> {
    if !is_small_odd_prime(p) {
        return Err(ScalarError::BadModulus(p));
    }
    let mut table = SquaresTable::new();
    for y in 0..p {
        table.entry((y * y % p) as u32).or_default().push(y as u32);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn make_rational_normalizes() {
        assert_eq!(make_rational(2, 4).unwrap(), q(1, 2));
        let z = make_rational(0, 5).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::from(0), BigInt::from(1)));
        let h = make_rational(-3, -6).unwrap();
        assert_eq!((h.numer().clone(), h.denom().clone()), (BigInt::from(1), BigInt::from(2)));
        assert_eq!(make_rational(1, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(q(-3, 6).to_string(), "-1/2");
        assert_eq!(q(8, 2).to_string(), "4");
        assert_eq!("-3/6".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), q(7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn field_inv_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.elem(3).inv().unwrap(), f7.elem(5));
        assert_eq!(f7.one().inv().unwrap(), f7.one());
        assert_eq!(Rational::one().inv().unwrap(), Rational::one());
        assert_eq!(f7.zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Rational::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(f7.elem(3).to_string(), "3 mod 7");
    }

    #[test]
    fn prime_field_rejects_bad_moduli() {
        assert!(matches!(PrimeField::new(2), Err(ScalarError::SmallCharacteristic(2))));
        assert!(matches!(PrimeField::new(3), Err(ScalarError::SmallCharacteristic(3))));
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(65521).is_ok());
    }

    #[test]
    fn from_rational_denominator() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.from_rational(&q(1, 2)).unwrap(), f5.elem(3));
        assert!(matches!(
            f5.from_rational(&q(1, 5)),
            Err(ScalarError::NonInvertibleDenominator { .. })
        ));
    }

    #[test]
    fn squares_table_mod_7() {
        let t = squares_table(7).unwrap();
        assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2, 4]);
        assert_eq!(t[&2], vec![3, 4]);
        assert!(!t.contains_key(&3));
        assert!(squares_table(15).is_err());
        assert!(squares_table(2).is_err());
    }

    #[test]
    fn rational_sqrt_is_exact() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
    }

    #[test]
    fn rational_roots() {
        // (t - 1)(t - 2)(2t + 3)
        let c = [q(6, 1), q(-5, 1), q(-3, 1), q(2, 1)];
        assert_eq!(Rational::univariate_roots(&c).unwrap(), vec![q(-3, 2), q(1, 1), q(2, 1)]);
        // t^2 (t - 1/2)
        let c = [q(0, 1), q(0, 1), q(-1, 2), q(1, 1)];
        assert_eq!(Rational::univariate_roots(&c).unwrap(), vec![q(0, 1), q(1, 2)]);
        // 2t^2 - 1 has no rational root
        assert!(Rational::univariate_roots(&[q(-1, 1), q(0, 1), q(2, 1)]).unwrap().is_empty());
    }

    #[test]
    fn canonical_scale_removes_content() {
        let c = [q(0, 1), q(-16, 1), q(8, 3)];
        let s = Rational::canonical_scale(&c).unwrap();
        let scaled: Vec<_> = c.iter().map(|x| x.clone() * s.clone()).collect();
        assert_eq!(scaled, vec![q(0, 1), q(6, 1), q(-1, 1)]);
    }

    proptest! {
        #[test]
        fn double_inverse(p in prop::sample::select(vec![5u64, 7, 101, 211, 409, 65521]), v in 1u64..65521) {
            let f = PrimeField::new(p).unwrap();
            let x = f.elem(v as i64);
            prop_assume!(!x.is_zero());
            prop_assert_eq!(x.inv().unwrap().inv().unwrap(), x);
            prop_assert_eq!(x.pow_u64(p - 1), f.one());
        }

        #[test]
        fn rational_add_sub_roundtrip(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = q(a, b);
            let y = q(c, d);
            prop_assert_eq!(x.clone() + y.clone() - y.clone(), x.clone());
            if !y.is_zero() {
                prop_assert_eq!(y.inv().unwrap().inv().unwrap(), y);
            }
        }

        #[test]
        fn squares_table_partition(p in prop::sample::select(vec![5u64, 7, 11, 13, 101, 409, 1009])) {
            let t = squares_table(p).unwrap();
            prop_assert_eq!(t.len() as u64, p.div_ceil(2));
            prop_assert_eq!(t.values().map(Vec::len).sum::<usize>() as u64, p);
            for (r, ys) in &t {
                for y in ys {
                    prop_assert_eq!((*y as u64 * *y as u64) % p, *r as u64);
                }
            }
        }

        #[test]
        fn tonelli_shanks(p in prop::sample::select(vec![5u64, 13, 17, 41, 97, 101, 257, 65521]), v in 0u64..65521) {
            let f = PrimeField::new(p).unwrap();
            let x = f.elem(v as i64);
            match x.sqrt() {
                Some(r) => prop_assert_eq!(r * r, x),
                None => prop_assert_eq!(x.legendre(), -1),
            }
        }
    }
}
