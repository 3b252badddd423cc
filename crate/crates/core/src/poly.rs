//! Sparse polynomials over Q in the fixed variables x, y, a, b.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! lexicographic on (e_y, e_x, e_a, e_b). Zero coefficients are never stored,
//! so two equal polynomials always have identical term tables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::scalar::{FieldElement, Rational, Ring, ScalarError};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    X,
    Y,
    A,
    B,
}

/// Exponent vector. Field order gives the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub y: u32,
    pub x: u32,
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub fn new(x: u32, y: u32, a: u32, b: u32) -> Self {
        Monomial { x, y, a, b }
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial { x: self.x + o.x, y: self.y + o.y, a: self.a + o.a, b: self.b + o.b }
    }

    fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::A => self.a,
            Var::B => self.b,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

/// Partial assignment of the four variables to polynomials.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub x: Option<MultiPoly>,
    pub y: Option<MultiPoly>,
    pub a: Option<MultiPoly>,
    pub b: Option<MultiPoly>,
}

impl Bindings {
    fn get(&self, v: Var) -> Option<&MultiPoly> {
        match v {
            Var::X => self.x.as_ref(),
            Var::Y => self.y.as_ref(),
            Var::A => self.a.as_ref(),
            Var::B => self.b.as_ref(),
        }
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::default(), c.into());
        p
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Rational::from(n))
    }

    pub fn var(v: Var) -> Self {
        let m = match v {
            Var::X => Monomial::new(1, 0, 0, 0),
            Var::Y => Monomial::new(0, 1, 0, 0),
            Var::A => Monomial::new(0, 0, 1, 0),
            Var::B => Monomial::new(0, 0, 0, 1),
        };
        MultiPoly::monomial(Rational::one(), m)
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }
    pub fn y() -> Self {
        Self::var(Var::Y)
    }
    pub fn a() -> Self {
        Self::var(Var::A)
    }
    pub fn b() -> Self {
        Self::var(Var::B)
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// The curve's right-hand side f(x) = x³ + a·x² + b·x.
    pub fn curve_rhs() -> Self {
        let x = Self::x();
        x.pow(3) + Self::a() * x.pow(2) + Self::b() * x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (*m, k.clone() * c.clone())).collect() }
    }

    /// Rewrites every y² as f(x) until each term has y-degree at most one.
    pub fn reduce_mod_curve(&self) -> Self {
        if self.degree_in(Var::Y) < 2 {
            return self.clone();
        }
        let f = Self::curve_rhs();
        let mut f_pows = vec![MultiPoly::int(1)];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let k = (m.y / 2) as usize;
            while f_pows.len() <= k {
                let next = f_pows.last().unwrap().clone() * f.clone();
                f_pows.push(next);
            }
            let rest = Monomial { y: m.y % 2, ..*m };
            out = out + (f_pows[k].clone() * MultiPoly::monomial(c.clone(), rest));
        }
        out
    }

    /// Replaces the bound variables by the given polynomials.
    pub fn substitute(&self, bindings: &Bindings) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::default();
            let mut term = MultiPoly::constant(c.clone());
            for v in [Var::X, Var::Y, Var::A, Var::B] {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                match bindings.get(v) {
                    Some(p) => term = term * p.pow(e),
                    None => match v {
                        Var::X => kept.x = e,
                        Var::Y => kept.y = e,
                        Var::A => kept.a = e,
                        Var::B => kept.b = e,
                    },
                }
            }
            out = out + term * MultiPoly::monomial(Rational::one(), kept);
        }
        out
    }

    /// Full evaluation at (x, y, a, b) in any supported field.
    pub fn evaluate<F: FieldElement>(&self, x: &F, y: &F, a: &F, b: &F) -> Result<F, ScalarError> {
        let mut acc = x.zero_like();
        for (m, c) in &self.terms {
            let c = x.from_rational_like(c)?;
            acc = acc + c * x.pow(m.x) * y.pow(m.y) * a.pow(m.a) * b.pow(m.b);
        }
        Ok(acc)
    }
}

pub fn poly_mul(lhs: &MultiPoly, rhs: &MultiPoly) -> MultiPoly {
    lhs.clone() * rhs.clone()
}

pub fn reduce_mod_curve(q: &MultiPoly) -> MultiPoly {
    q.reduce_mod_curve()
}

pub fn is_zero(q: &MultiPoly) -> bool {
    q.is_zero()
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero()
    }
    fn one_like(&self) -> Self {
        MultiPoly::int(1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        MultiPoly::int(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for MultiPoly {
    /// Terms "c·x^i·y^j·a^k·b^l", highest monomial first, joined by " + ".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, e) in [("x", m.x), ("y", m.y), ("a", m.a), ("b", m.b)] {
                match e {
                    0 => {}
                    1 => write!(f, "·{name}")?,
                    _ => write!(f, "·{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;
    use proptest::prelude::*;

    fn x() -> MultiPoly {
        MultiPoly::x()
    }
    fn y() -> MultiPoly {
        MultiPoly::y()
    }
    fn a() -> MultiPoly {
        MultiPoly::a()
    }
    fn b() -> MultiPoly {
        MultiPoly::b()
    }

    #[test]
    fn products() {
        assert_eq!(poly_mul(&(x() + y()), &(x() - y())), x().pow(2) - y().pow(2));
        assert_eq!(poly_mul(&(x() + a()), &(x() + b())), x().pow(2) + (a() + b()) * x() + a() * b());
        assert!(poly_mul(&(x() + a()), &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn curve_reduction() {
        let f = MultiPoly::curve_rhs();
        assert_eq!(reduce_mod_curve(&y().pow(2)), x().pow(3) + a() * x().pow(2) + b() * x());
        assert_eq!(reduce_mod_curve(&y().pow(3)), y() * f.clone());
        assert!(is_zero(&reduce_mod_curve(&(y().pow(2) - f))));
        assert!(is_zero(&(x() - x())));
        assert!(!is_zero(&(x() - y())));
    }

    #[test]
    fn substitution_and_evaluation() {
        let f = MultiPoly::curve_rhs();
        let bound = f.substitute(&Bindings { a: Some(MultiPoly::int(0)), b: Some(MultiPoly::int(4)), ..Default::default() });
        assert_eq!(bound, x().pow(3) + MultiPoly::int(4) * x());

        let q = x().pow(2) + b();
        let r = q.substitute(&Bindings { x: Some(MultiPoly::int(2)), b: Some(MultiPoly::int(4)), ..Default::default() });
        assert_eq!(r, MultiPoly::int(8));
        let two = Rational::from(2);
        let four = Rational::from(4);
        let zero = Rational::zero();
        assert_eq!(q.evaluate(&two, &zero, &zero, &four).unwrap(), Rational::from(8));

        let half_x = x().scale(&Rational::new(1, 5).unwrap());
        let f5 = PrimeField::new(5).unwrap();
        let one = f5.one();
        assert!(matches!(
            half_x.evaluate(&one, &one, &one, &one),
            Err(ScalarError::NonInvertibleDenominator { .. })
        ));
    }

    #[test]
    fn display_is_canonical() {
        let p = x().pow(2) - y().pow(2) + MultiPoly::constant(Rational::new(1, 2).unwrap()) * a() * b();
        assert_eq!(p.to_string(), "-1·y^2 + 1·x^2 + 1/2·a·b");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..4, 0u32..2, 0u32..2), -5i64..6), 0..6).prop_map(|ts| {
            MultiPoly::from_terms(ts.into_iter().map(|((ex, ey, ea, eb), c)| (Monomial::new(ex, ey, ea, eb), Rational::from(c))))
        })
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_ring_map(q in small_poly(), r in small_poly()) {
            let rq = q.reduce_mod_curve();
            prop_assert!(rq.degree_in(Var::Y) <= 1);
            prop_assert_eq!(rq.reduce_mod_curve(), rq.clone());
            let lhs = (q.clone() * r.clone()).reduce_mod_curve();
            let rhs = (rq * r.reduce_mod_curve()).reduce_mod_curve();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
            prop_assert_eq!(p.clone() * (q.clone() + r.clone()), p.clone() * q.clone() + p.clone() * r.clone());
            prop_assert_eq!(p.clone() * q.clone(), q * p.clone());
            prop_assert!((p.clone() - p).is_zero());
        }

        #[test]
        fn reduction_agrees_on_curve_points(
            q in small_poly(),
            p in prop::sample::select(vec![5u64, 7, 101, 211, 409, 65521]),
            seed in 0i64..100_000,
            av in 0i64..65521,
            bv in 0i64..65521,
        ) {
            let f = PrimeField::new(p).unwrap();
            let (a, b) = (f.elem(av), f.elem(bv));
            // walk x from the seed until f(x) is a square
            let point = (0..p as i64).map(|i| f.elem(seed + i)).find_map(|x| {
                let rhs = x * x * x + a * x * x + b * x;
                rhs.sqrt().map(|y| (x, y))
            });
            let (px, py) = point.unwrap();
            let direct = q.evaluate(&px, &py, &a, &b).unwrap();
            let reduced = q.reduce_mod_curve().evaluate(&px, &py, &a, &b).unwrap();
            prop_assert_eq!(direct, reduced);
        }
    }
}
