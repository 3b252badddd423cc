//! The chord construction: p ↦ the line through p and p + β, and the cubic
//! in the dual plane that contains every such line.

use serde::Serialize;
use thiserror::Error;

use crate::curve::{CurveParams, CurvePoint};
use crate::poly::MultiPoly;
pub use crate::projective::{DualPoint, TernaryForm};
use crate::projective::{cross, ProjPoint};
use crate::scalar::{FieldElement, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("no unique line through coincident points {0}")]
    CoincidentPoints(String),
}

/// The chord through p and p + β as a dual point [U:V:W].
///
/// Affine p ∉ {β} uses [y(x²+b) : bx − x³ : −2bxy]; O and β form one fiber and
/// both map to the line X = 0.
pub fn chord_map<F: FieldElement>(p: &CurvePoint<F>) -> DualPoint<F> {
    let b = p.curve().b();
    match p.xy() {
        Some((x, y)) if !p.is_beta() => {
            let x2 = x.clone() * x.clone();
            let u = y.clone() * (x2.clone() + b.clone());
            let v = b.clone() * x.clone() - x2 * x.clone();
            let w = -(b.from_i64_like(2) * b.clone() * x.clone() * y.clone());
            DualPoint::new(u, v, w).expect("b(a²−4b) ≠ 0 keeps the chord nonzero")
        }
        _ => {
            let z = b.zero_like();
            DualPoint::new(z.one_like(), z.clone(), z).expect("nonzero")
        }
    }
}

/// The three chord coordinates as polynomials in x, y, b.
pub fn chord_lines_symbolic() -> [MultiPoly; 3] {
    let (x, y, b) = (MultiPoly::x(), MultiPoly::y(), MultiPoly::b());
    [
        y.clone() * (x.pow(2) + b.clone()),
        b.clone() * x.clone() - x.pow(3),
        MultiPoly::int(-2) * b * x * y,
    ]
}

/// G(U,V,W) = 4b²·T·V² − (4b − a²)·W³ + 2a·T·W² + T²·W with T = 2bU − aW.
///
/// Generic over the coefficient ring so that `a`, `b` may be symbolic.
pub fn chord_cubic_from<R: Ring>(a: &R, b: &R) -> TernaryForm<R> {
    let c = |n: i64| a.from_i64_like(n);
    let zero = c(0);
    let v = TernaryForm::linear(zero.clone(), c(1), zero.clone());
    let w = TernaryForm::linear(zero.clone(), zero.clone(), c(1));
    let t = TernaryForm::linear(c(2) * b.clone(), zero, -a.clone());
    let k = c(4) * b.clone() - a.clone() * a.clone();
    t.mul(&v.pow(2))
        .scale(&(c(4) * b.clone() * b.clone()))
        .sub(&w.pow(3).scale(&k))
        .add(&t.mul(&w.pow(2)).scale(&(c(2) * a.clone())))
        .add(&t.pow(2).mul(&w))
}

/// The image cubic of the chord construction, denominator-cleared.
pub fn chord_cubic<F: FieldElement>(params: &CurveParams<F>) -> TernaryForm<F> {
    chord_cubic_from(params.a(), params.b())
}

/// The image cubic with symbolic a, b.
pub fn chord_cubic_symbolic() -> TernaryForm<MultiPoly> {
    chord_cubic_from(&MultiPoly::a(), &MultiPoly::b())
}

/// Coefficients of e·(U − μ⁻¹W)·V² = W³ − c1·(U − μ⁻¹W)·W² − c2·(U − μ⁻¹W)²·W.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "F: std::fmt::Display")]
pub struct CubicInvariants<F> {
    #[serde(serialize_with = "ser_display")]
    pub e: F,
    #[serde(serialize_with = "ser_display")]
    pub c1: F,
    #[serde(serialize_with = "ser_display")]
    pub c2: F,
    #[serde(rename = "muInv", serialize_with = "ser_display")]
    pub mu_inv: F,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn cubic_invariants<F: FieldElement>(params: &CurveParams<F>) -> CubicInvariants<F> {
    let (a, b) = (params.a().clone(), params.b().clone());
    let c = |n: i64| a.from_i64_like(n);
    let k = c(4) * b.clone() - a.clone() * a.clone();
    let k_inv = k.inv().expect("a² ≠ 4b");
    CubicInvariants {
        e: c(8) * b.pow(3) * k_inv.clone(),
        c1: c(4) * a.clone() * b.clone() * k_inv.clone(),
        c2: c(4) * b.clone() * b.clone() * k_inv,
        mu_inv: a.clone() * (c(2) * b).inv().expect("b ≠ 0"),
    }
}

impl<F: FieldElement> CubicInvariants<F> {
    /// The displayed cubic e·T'·V² − W³ + c1·T'·W² + c2·T'²·W with T' = U − μ⁻¹W.
    pub fn as_form(&self) -> TernaryForm<F> {
        let one = self.e.one_like();
        let zero = self.e.zero_like();
        let v = TernaryForm::linear(zero.clone(), one.clone(), zero.clone());
        let w = TernaryForm::linear(zero.clone(), zero, one.clone());
        let t = TernaryForm::linear(one, self.e.zero_like(), -self.mu_inv.clone());
        t.mul(&v.pow(2))
            .scale(&self.e)
            .sub(&w.pow(3))
            .add(&t.mul(&w.pow(2)).scale(&self.c1))
            .add(&t.pow(2).mul(&w).scale(&self.c2))
    }
}

/// The unique line through two distinct projective points.
pub fn line_through<F: FieldElement>(p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<DualPoint<F>, ChordError> {
    DualPoint::from_coords(cross(p.coords(), q.coords()))
        .map_err(|_| ChordError::CoincidentPoints(p.to_string()))
}
