//! The cubic y²z = x³ + a·x²z + b·xz² with zero O = [0:1:0] and the
//! two-torsion point β = (0, 0).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::projective::{FormError, ProjPoint, TernaryForm};
use crate::scalar::{squares_table, FieldElement, Fp, PrimeField, Rational, Ring, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("β degenerate: b = 0")]
    BetaDegenerate,
    #[error("double root: a² = 4b")]
    DoubleRoot,
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("points lie on different curves")]
    CurveMismatch,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Debug)]
struct Params<F> {
    a: F,
    b: F,
}

/// Validated curve parameters. Cheap to clone; points hold a handle to them.
#[derive(Clone, Debug)]
pub struct CurveParams<F>(Arc<Params<F>>);

impl<F: FieldElement> PartialEq for CurveParams<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.a == other.0.a && self.0.b == other.0.b)
    }
}

impl<F: FieldElement> Eq for CurveParams<F> {}

/// Accepts (a, b) iff b·(a² − 4b) ≠ 0.
pub fn validate_curve<F: FieldElement>(a: F, b: F) -> Result<CurveParams<F>, CurveError> {
    if b.is_zero() {
        return Err(CurveError::BetaDegenerate);
    }
    let disc = a.clone() * a.clone() - b.from_i64_like(4) * b.clone();
    if disc.is_zero() {
        return Err(CurveError::DoubleRoot);
    }
    Ok(CurveParams(Arc::new(Params { a, b })))
}

/// True iff the triple satisfies Y²Z = X³ + aX²Z + bXZ².
pub fn is_on_curve<F: FieldElement>(params: &CurveParams<F>, pt: &ProjPoint<F>) -> bool {
    params.weierstrass_form().eval_at(pt).is_zero()
}

impl<F: FieldElement> CurveParams<F> {
    pub fn new(a: F, b: F) -> Result<Self, CurveError> {
        validate_curve(a, b)
    }

    pub fn a(&self) -> &F {
        &self.0.a
    }

    pub fn b(&self) -> &F {
        &self.0.b
    }

    /// f(x) = x³ + a·x² + b·x.
    pub fn rhs(&self, x: &F) -> F {
        x.clone() * (x.clone() * x.clone() + self.a().clone() * x.clone() + self.b().clone())
    }

    pub fn identity(&self) -> CurvePoint<F> {
        CurvePoint { curve: self.clone(), coords: Coords::Infinity }
    }

    pub fn beta(&self) -> CurvePoint<F> {
        let z = self.a().zero_like();
        CurvePoint { curve: self.clone(), coords: Coords::Affine(z.clone(), z) }
    }

    pub fn point(&self, x: F, y: F) -> Result<CurvePoint<F>, CurveError> {
        if y.clone() * y.clone() != self.rhs(&x) {
            return Err(CurveError::NotOnCurve(format!("({x}, {y})")));
        }
        Ok(CurvePoint { curve: self.clone(), coords: Coords::Affine(x, y) })
    }

    pub fn from_projective(&self, pt: &ProjPoint<F>) -> Result<CurvePoint<F>, CurveError> {
        let [x, y, z] = pt.coords();
        if z.is_zero() {
            // The only point at infinity on the curve is [0:1:0].
            if x.is_zero() {
                return Ok(self.identity());
            }
            return Err(CurveError::NotOnCurve(pt.to_string()));
        }
        self.point(x.clone(), y.clone())
    }

    pub fn contains(&self, pt: &ProjPoint<F>) -> bool {
        is_on_curve(self, pt)
    }

    /// The cubic form Y²Z − X³ − aX²Z − bXZ² in coordinates (X, Y, Z).
    pub fn weierstrass_form(&self) -> TernaryForm<F> {
        let one = self.a().one_like();
        TernaryForm::new(
            3,
            [
                ((0, 2, 1), one.clone()),
                ((3, 0, 0), -one),
                ((2, 0, 1), -self.a().clone()),
                ((1, 0, 2), -self.b().clone()),
            ],
        )
        .expect("nonzero cubic")
    }

    /// O, β and the points (r, 0) for each root r of x² + ax + b in the field.
    pub fn two_torsion_points(&self) -> Vec<CurvePoint<F>> {
        let mut out = vec![self.identity(), self.beta()];
        let (a, b) = (self.a().clone(), self.b().clone());
        let disc = a.clone() * a.clone() - a.from_i64_like(4) * b;
        if let Some(s) = disc.sqrt() {
            let half = a.from_i64_like(2).inv().expect("characteristic is not 2");
            let mut roots = vec![(s.clone() - a.clone()) * half.clone(), (-s - a) * half];
            roots.sort();
            for r in roots {
                out.push(CurvePoint { curve: self.clone(), coords: Coords::Affine(r.clone(), r.zero_like()) });
            }
        }
        out
    }

    /// The two affine 2-torsion points other than β, if rational.
    pub fn gammas(&self) -> Vec<CurvePoint<F>> {
        self.two_torsion_points().into_iter().skip(2).collect()
    }
}

impl CurveParams<Rational> {
    /// Reduction mod p; fails if a denominator vanishes or the reduction is singular.
    pub fn reduce(&self, field: PrimeField) -> Result<CurveParams<Fp>, CurveError> {
        validate_curve(field.from_rational(self.a())?, field.from_rational(self.b())?)
    }

    /// Rational 3-torsion points found by a bounded search over x = n/d,
    /// 1 ≤ d ≤ 12, |n| ≤ 48·d, on the 3-division polynomial
    /// 3x⁴ + 4ax³ + 6bx² − b². Always contains O.
    pub fn three_torsion_flexes(&self) -> Vec<CurvePoint<Rational>> {
        let (a, b) = (self.a().clone(), self.b().clone());
        let psi3 = |x: &Rational| {
            let c = |n: i64| Rational::from(n);
            c(3) * x.pow(4) + c(4) * a.clone() * x.pow(3) + c(6) * b.clone() * x.pow(2) - b.clone() * b.clone()
        };
        let mut xs = Vec::new();
        for d in 1..=12i64 {
            for n in -48 * d..=48 * d {
                let x = Rational::new(n, d).expect("d > 0");
                if psi3(&x).is_zero() {
                    xs.push(x);
                }
            }
        }
        xs.sort();
        xs.dedup();
        let mut out = vec![self.identity()];
        for x in xs {
            if let Some(y) = self.rhs(&x).sqrt() {
                for y in [-y.clone(), y] {
                    let p = self.point(x.clone(), y).expect("y² = f(x)");
                    if p.scalar_mul(3).is_identity() && !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl CurveParams<Fp> {
    pub fn field(&self) -> PrimeField {
        self.a().field()
    }

    /// Every F_p-rational point: O first, then affine points by (x, y).
    pub fn enumerate_points(&self) -> Vec<CurvePoint<Fp>> {
        let field = self.field();
        let table = squares_table(field.modulus() as u64).expect("field modulus is prime");
        let mut out = vec![self.identity()];
        for x in field.elements() {
            if let Some(ys) = table.get(&self.rhs(&x).value()) {
                for &y in ys {
                    out.push(CurvePoint { curve: self.clone(), coords: Coords::Affine(x, field.elem(y as i64)) });
                }
            }
        }
        out
    }

    /// All F_p points q with 3q = O; these are the flexes of the Weierstrass model.
    pub fn three_torsion_flexes(&self) -> Vec<CurvePoint<Fp>> {
        self.enumerate_points().into_iter().filter(|p| p.scalar_mul(3).is_identity()).collect()
    }

    /// A point of exact order n, searched in enumeration order.
    pub fn point_of_order(&self, n: u64) -> Option<CurvePoint<Fp>> {
        self.enumerate_points().into_iter().find(|p| p.order() == n)
    }
}

impl<F: FieldElement> Serialize for CurveParams<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("a", &self.a().to_string())?;
        m.serialize_entry("b", &self.b().to_string())?;
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Coords<F> {
    Infinity,
    Affine(F, F),
}

/// A point on a specific curve.
#[derive(Clone, Debug)]
pub struct CurvePoint<F> {
    curve: CurveParams<F>,
    coords: Coords<F>,
}

impl<F: FieldElement> PartialEq for CurvePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.curve == other.curve
    }
}

impl<F: FieldElement> Eq for CurvePoint<F> {}

impl<F: FieldElement> Hash for CurvePoint<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl<F: FieldElement> PartialOrd for CurvePoint<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: FieldElement> Ord for CurvePoint<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl<F: FieldElement> CurvePoint<F> {
    pub fn curve(&self) -> &CurveParams<F> {
        &self.curve
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.coords, Coords::Infinity)
    }

    pub fn is_beta(&self) -> bool {
        matches!(&self.coords, Coords::Affine(x, y) if x.is_zero() && y.is_zero())
    }

    pub fn xy(&self) -> Option<(&F, &F)> {
        match &self.coords {
            Coords::Infinity => None,
            Coords::Affine(x, y) => Some((x, y)),
        }
    }

    pub fn to_projective(&self) -> ProjPoint<F> {
        match &self.coords {
            Coords::Infinity => {
                let z = self.curve.a().zero_like();
                ProjPoint::new(z.clone(), z.one_like(), z).expect("nonzero")
            }
            Coords::Affine(x, y) => ProjPoint::affine(x.clone(), y.clone()),
        }
    }

    fn with(&self, coords: Coords<F>) -> Self {
        CurvePoint { curve: self.curve.clone(), coords }
    }

    pub fn neg(&self) -> Self {
        match &self.coords {
            Coords::Infinity => self.clone(),
            Coords::Affine(x, y) => self.with(Coords::Affine(x.clone(), -y.clone())),
        }
    }

    /// Chord–tangent addition with identity O.
    pub fn group_add(&self, other: &Self) -> Result<Self, CurveError> {
        if self.curve != other.curve {
            return Err(CurveError::CurveMismatch);
        }
        Ok(self.add_same_curve(other))
    }

    fn add_same_curve(&self, other: &Self) -> Self {
        let (x1, y1, x2, y2) = match (&self.coords, &other.coords) {
            (Coords::Infinity, _) => return other.clone(),
            (_, Coords::Infinity) => return self.clone(),
            (Coords::Affine(x1, y1), Coords::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let (a, b) = (self.curve.a(), self.curve.b());
        let slope = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                // vertical chord, or the tangent at a 2-torsion point
                return self.with(Coords::Infinity);
            }
            let num = a.from_i64_like(3) * x1.clone() * x1.clone()
                + a.from_i64_like(2) * a.clone() * x1.clone()
                + b.clone();
            num.div(&(a.from_i64_like(2) * y1.clone())).expect("y ≠ 0")
        } else {
            (y2.clone() - y1.clone()).div(&(x2.clone() - x1.clone())).expect("x1 ≠ x2")
        };
        let x3 = slope.clone() * slope.clone() - a.clone() - x1.clone() - x2.clone();
        let y3 = -(y1.clone() + slope * (x3.clone() - x1.clone()));
        self.with(Coords::Affine(x3, y3))
    }

    /// n·p by double-and-add; negative n negates.
    pub fn scalar_mul(&self, n: i64) -> Self {
        let mut acc = self.with(Coords::Infinity);
        let mut base = if n < 0 { self.neg() } else { self.clone() };
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add_same_curve(&base);
            }
            base = base.add_same_curve(&base);
            k >>= 1;
        }
        acc
    }

    /// p + β via the closed form (b/x, −b·y/x²); swaps O and β.
    pub fn translate_by_beta(&self) -> Self {
        match &self.coords {
            Coords::Infinity => self.curve.beta(),
            Coords::Affine(x, _) if x.is_zero() => self.with(Coords::Infinity),
            Coords::Affine(x, y) => {
                let b = self.curve.b();
                let xi = x.inv().expect("x ≠ 0");
                let nx = b.clone() * xi.clone();
                let ny = -(b.clone() * y.clone() * xi.clone() * xi);
                self.with(Coords::Affine(nx, ny))
            }
        }
    }

    /// Additive order, found by repeated addition (finite fields only).
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut q = self.clone();
        while !q.is_identity() {
            q = q.add_same_curve(self);
            k += 1;
        }
        k
    }
}

impl<F: FieldElement> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_projective().fmt(f)
    }
}

impl<F: FieldElement> Serialize for CurvePoint<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
