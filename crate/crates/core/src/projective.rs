//! Projective points, lines of the dual plane, and homogeneous ternary forms.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{FieldElement, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("projective triple [0:0:0]")]
    ZeroTriple,
    #[error("monomial exponents {0:?} do not sum to degree {1}")]
    BadMonomial((u32, u32, u32), u32),
    #[error("form has no nonzero coefficient")]
    ZeroForm,
    #[error("expected a form of degree {expected}, got {found}")]
    WrongDegree { expected: u32, found: u32 },
}

fn plain<F: FieldElement>(c: &F) -> String {
    match c.modulus() {
        // residues print without the "mod p" suffix inside a triple
        Some(p) => {
            let s = c.to_string();
            s.trim_end_matches(&format!(" mod {p}")).to_string()
        }
        None => c.to_string(),
    }
}

pub(crate) fn cross<F: FieldElement>(p: &[F; 3], q: &[F; 3]) -> [F; 3] {
    [
        p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone(),
        p[2].clone() * q[0].clone() - p[0].clone() * q[2].clone(),
        p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone(),
    ]
}

fn scale_by<F: FieldElement>(c: [F; 3], s: &F) -> [F; 3] {
    c.map(|v| v * s.clone())
}

/// Point of the projective plane, stored normalized so that the last nonzero
/// coordinate is one. Equality is therefore projective equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint<F> {
    coords: [F; 3],
}

impl<F: FieldElement> ProjPoint<F> {
    pub fn new(x: F, y: F, z: F) -> Result<Self, FormError> {
        Self::from_coords([x, y, z])
    }

    pub fn from_coords(c: [F; 3]) -> Result<Self, FormError> {
        let last = c.iter().rev().find(|v| !v.is_zero()).ok_or(FormError::ZeroTriple)?;
        let s = last.inv().expect("nonzero");
        Ok(ProjPoint { coords: scale_by(c, &s) })
    }

    pub fn affine(x: F, y: F) -> Self {
        let one = x.one_like();
        ProjPoint { coords: [x, y, one] }
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }

    /// Reinterprets the triple as a line of the dual plane.
    pub fn to_line(&self) -> DualPoint<F> {
        DualPoint::from_coords(self.coords.clone()).expect("nonzero triple")
    }
}

impl<F: FieldElement> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "[{}:{}:{}]", plain(x), plain(y), plain(z))
    }
}

impl<F: FieldElement> Serialize for ProjPoint<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A line `U·X + V·Y + W·Z = 0`, i.e. a point `[U:V:W]` of the dual plane.
/// Normalized so that the first nonzero coordinate is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DualPoint<F> {
    coords: [F; 3],
}

impl<F: FieldElement> DualPoint<F> {
    pub fn new(u: F, v: F, w: F) -> Result<Self, FormError> {
        Self::from_coords([u, v, w])
    }

    pub fn from_coords(c: [F; 3]) -> Result<Self, FormError> {
        let first = c.iter().find(|v| !v.is_zero()).ok_or(FormError::ZeroTriple)?;
        let s = first.inv().expect("nonzero");
        Ok(DualPoint { coords: scale_by(c, &s) })
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }

    /// Reinterprets the line as a point, for geometry inside the dual plane.
    pub fn to_point(&self) -> ProjPoint<F> {
        ProjPoint::from_coords(self.coords.clone()).expect("nonzero triple")
    }

    pub fn contains(&self, pt: &ProjPoint<F>) -> bool {
        let [u, v, w] = &self.coords;
        let [x, y, z] = pt.coords();
        (u.clone() * x.clone() + v.clone() * y.clone() + w.clone() * z.clone()).is_zero()
    }
}

impl<F: FieldElement> fmt::Display for DualPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, w] = &self.coords;
        write!(f, "[{}:{}:{}]", plain(u), plain(v), plain(w))
    }
}

impl<F: FieldElement> Serialize for DualPoint<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exponent triple `(i, j, k)` of the monomial `U^i·V^j·W^k`.
pub type TernaryMonomial = (u32, u32, u32);

/// Homogeneous form of fixed degree in three variables (U, V, W, or X, Y, Z
/// depending on the plane it lives in). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct TernaryForm<R> {
    degree: u32,
    coeffs: BTreeMap<TernaryMonomial, R>,
}

impl<R: Ring> TernaryForm<R> {
    /// Builds a form from its terms; rejects a wrong-degree monomial and an
    /// all-zero table.
    pub fn new(degree: u32, terms: impl IntoIterator<Item = (TernaryMonomial, R)>) -> Result<Self, FormError> {
        let mut form = TernaryForm { degree, coeffs: BTreeMap::new() };
        for (m, c) in terms {
            if m.0 + m.1 + m.2 != degree {
                return Err(FormError::BadMonomial(m, degree));
            }
            form.add_term(m, c);
        }
        if form.coeffs.is_empty() {
            return Err(FormError::ZeroForm);
        }
        Ok(form)
    }

    pub fn zero(degree: u32) -> Self {
        TernaryForm { degree, coeffs: BTreeMap::new() }
    }

    /// `u·U + v·V + w·W`.
    pub fn linear(u: R, v: R, w: R) -> Self {
        let mut f = Self::zero(1);
        f.add_term((1, 0, 0), u);
        f.add_term((0, 1, 0), v);
        f.add_term((0, 0, 1), w);
        f
    }

    fn add_term(&mut self, m: TernaryMonomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(m, s);
                }
            }
            None => {
                self.coeffs.insert(m, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: TernaryMonomial) -> Option<&R> {
        self.coeffs.get(&m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TernaryMonomial, &R)> {
        self.coeffs.iter()
    }

    pub fn expect_degree(&self, d: u32) -> Result<(), FormError> {
        if self.degree != d {
            return Err(FormError::WrongDegree { expected: d, found: self.degree });
        }
        Ok(())
    }

    pub fn evaluate(&self, pt: &[R; 3]) -> R {
        let zero = pt[0].zero_like();
        self.coeffs.iter().fold(zero, |acc, ((i, j, k), c)| {
            acc + c.clone() * pt[0].pow(*i) * pt[1].pow(*j) * pt[2].pow(*k)
        })
    }

    /// Partial derivative with respect to coordinate `var` (0, 1 or 2).
    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (&(i, j, k), c) in &self.coeffs {
            let e = [i, j, k][var];
            if e == 0 {
                continue;
            }
            let mut m = [i, j, k];
            m[var] -= 1;
            out.add_term((m[0], m[1], m[2]), c.from_i64_like(e as i64) * c.clone());
        }
        out
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.coeffs {
            out.add_term(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.degree + rhs.degree);
        for ((a, b, c), x) in &self.coeffs {
            for ((d, e, f), y) in &rhs.coeffs {
                out.add_term((a + d, b + e, c + f), x.clone() * y.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = self.coeffs.values().next().expect("nonzero form").one_like();
        let mut acc = TernaryForm { degree: 0, coeffs: BTreeMap::from([((0, 0, 0), one)]) };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<S: Ring, E>(&self, mut f: impl FnMut(&R) -> Result<S, E>) -> Result<TernaryForm<S>, E> {
        let mut out = TernaryForm::zero(self.degree);
        for (m, c) in &self.coeffs {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }
}

impl<F: FieldElement> TernaryForm<F> {
    /// Content-normalized copy: integer content removed with a positive
    /// leading coefficient over Q, monic over F_p. The leading term is the
    /// highest monomial in (i, j, k) lexicographic order.
    pub fn normalized(&self) -> Self {
        let lead_first: Vec<F> = self.coeffs.values().rev().cloned().collect();
        match F::canonical_scale(&lead_first) {
            Some(s) => self.scale(&s),
            None => self.clone(),
        }
    }

    /// Projective equality of two forms (one is a nonzero multiple of the other).
    pub fn same_curve(&self, other: &Self) -> bool {
        self.degree == other.degree && self.normalized() == other.normalized()
    }

    pub fn eval_at(&self, pt: &ProjPoint<F>) -> F {
        self.evaluate(pt.coords())
    }
}

fn monomial_key(m: &TernaryMonomial) -> String {
    format!("U{}V{}W{}", m.0, m.1, m.2)
}

impl<R: Ring + fmt::Display> Serialize for TernaryForm<R> {
    /// JSON table `{"UiVjWk": "coef"}` with decreasing monomials.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (m, c) in self.coeffs.iter().rev() {
            map.serialize_entry(&monomial_key(m), &c.to_string())?;
        }
        map.end()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TernaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j, k), c)) in self.coeffs.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, e) in [("U", i), ("V", j), ("W", k)] {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{PrimeField, Rational};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn points_normalize_projectively() {
        let p = ProjPoint::new(q(4), q(8), q(2)).unwrap();
        assert_eq!(p, ProjPoint::affine(q(2), q(4)));
        assert_eq!(p.to_string(), "[2:4:1]");
        let inf = ProjPoint::new(q(0), q(-3), q(0)).unwrap();
        assert_eq!(inf.to_string(), "[0:1:0]");
        assert_eq!(ProjPoint::new(q(0), q(0), q(0)), Err(FormError::ZeroTriple));
    }

    #[test]
    fn lines_normalize_on_first_coordinate() {
        let l = DualPoint::new(q(32), q(0), q(-64)).unwrap();
        assert_eq!(l.to_string(), "[1:0:-2]");
        let f7 = PrimeField::new(7).unwrap();
        let l7 = DualPoint::new(f7.elem(3), f7.elem(1), f7.elem(0)).unwrap();
        assert_eq!(l7.to_string(), "[1:5:0]");
    }

    #[test]
    fn form_construction_checks() {
        assert!(TernaryForm::new(3, [((1, 1, 0), q(1))]).is_err());
        assert_eq!(TernaryForm::new(3, [((3, 0, 0), q(0))]), Err(FormError::ZeroForm));
        let f = TernaryForm::new(3, [((3, 0, 0), q(1)), ((0, 3, 0), q(1)), ((0, 0, 3), q(1))]).unwrap();
        assert_eq!(f.evaluate(&[q(1), q(1), q(1)]), q(3));
        assert_eq!(f.partial(0).to_string(), "3·U^2");
        assert!(f.partial(0).partial(1).is_zero());
        let w3 = TernaryForm::new(3, [((0, 0, 3), q(1))]).unwrap();
        assert_eq!(w3.evaluate(&[q(0), q(1), q(0)]), q(0));
    }

    #[test]
    fn form_algebra() {
        let u = TernaryForm::linear(q(1), q(0), q(0));
        let v = TernaryForm::linear(q(0), q(1), q(0));
        let s = u.add(&v);
        let d = u.sub(&v);
        assert_eq!(s.mul(&d), u.pow(2).sub(&v.pow(2)));
        let json = serde_json::to_string(&s.pow(2).normalized()).unwrap();
        assert_eq!(json, r#"{"U2V0W0":"1","U1V1W0":"2","U0V2W0":"1"}"#);
    }
}
