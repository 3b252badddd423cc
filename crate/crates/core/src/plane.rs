//! Plane-curve utilities over any supported field: Hessians and flexes,
//! line–cubic intersections with multiplicity, F_p scans, and implicitization.

use serde::Serialize;
use thiserror::Error;

use crate::projective::{cross, DualPoint, FormError, ProjPoint, TernaryForm};
use crate::scalar::{FieldElement, Fp, PrimeField, Ring, ScalarError};

/// Largest degree accepted by [`min_interpolating_degree`].
pub const MAX_INTERPOLATION_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("line {0} lies on the curve")]
    DegenerateLine(String),
    #[error("dmax {0} exceeds {MAX_INTERPOLATION_DEGREE}")]
    DmaxTooLarge(u32),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionRecord<F: FieldElement> {
    pub point: ProjPoint<F>,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
}

pub fn evaluate_form<F: FieldElement>(form: &TernaryForm<F>, pt: &ProjPoint<F>) -> F {
    form.eval_at(pt)
}

/// True iff U·X + V·Y + W·Z = 0.
pub fn dual_incidence<F: FieldElement>(pt: &ProjPoint<F>, line: &DualPoint<F>) -> bool {
    line.contains(pt)
}

/// Determinant of the matrix of second partials of a cubic.
pub fn hessian_cubic<R: Ring>(form: &TernaryForm<R>) -> Result<TernaryForm<R>, FormError> {
    form.expect_degree(3)?;
    let first: Vec<_> = (0..3).map(|i| form.partial(i)).collect();
    let h: Vec<Vec<_>> = first.iter().map(|d| (0..3).map(|j| d.partial(j)).collect()).collect();
    let minor = |r1: usize, c1: usize, r2: usize, c2: usize| h[r1][c1].mul(&h[r2][c2]).sub(&h[r1][c2].mul(&h[r2][c1]));
    Ok(h[0][0]
        .mul(&minor(1, 1, 2, 2))
        .sub(&h[0][1].mul(&minor(1, 0, 2, 2)))
        .add(&h[0][2].mul(&minor(1, 0, 2, 1))))
}

fn gradient<F: FieldElement>(form: &TernaryForm<F>) -> [TernaryForm<F>; 3] {
    [form.partial(0), form.partial(1), form.partial(2)]
}

fn is_singular_at<F: FieldElement>(grad: &[TernaryForm<F>; 3], pt: &ProjPoint<F>) -> bool {
    grad.iter().all(|g| g.eval_at(pt).is_zero())
}

/// True iff `pt` is a smooth point of the cubic where the Hessian vanishes.
pub fn is_flex<F: FieldElement>(form: &TernaryForm<F>, pt: &ProjPoint<F>) -> Result<bool, PlaneError> {
    let hess = hessian_cubic(form)?;
    flex_test(form, &gradient(form), &hess, pt)
}

fn flex_test<F: FieldElement>(
    form: &TernaryForm<F>,
    grad: &[TernaryForm<F>; 3],
    hess: &TernaryForm<F>,
    pt: &ProjPoint<F>,
) -> Result<bool, PlaneError> {
    if !form.eval_at(pt).is_zero() {
        return Err(PlaneError::NotOnCurve(pt.to_string()));
    }
    Ok(!is_singular_at(grad, pt) && hess.eval_at(pt).is_zero())
}

/// Two points spanning the line: the first two independent cross products
/// of the line with the standard basis vectors.
pub fn line_basis<F: FieldElement>(line: &DualPoint<F>) -> (ProjPoint<F>, ProjPoint<F>) {
    let l = line.coords();
    let zero = l[0].zero_like();
    let one = zero.one_like();
    let mut found: Vec<ProjPoint<F>> = Vec::new();
    for i in 0..3 {
        let mut e = [zero.clone(), zero.clone(), zero.clone()];
        e[i] = one.clone();
        if let Ok(p) = ProjPoint::from_coords(cross(l, &e)) {
            if !found.contains(&p) {
                found.push(p);
            }
        }
        if found.len() == 2 {
            break;
        }
    }
    let q = found.pop().expect("a line has two basis points");
    (found.pop().expect("a line has two basis points"), q)
}

/// Coefficients of form(P + t·Q) in powers of t (index k ↔ t^k), i.e. the
/// restriction to the line dehomogenized at s = 1.
fn restrict<F: FieldElement>(form: &TernaryForm<F>, p: &ProjPoint<F>, q: &ProjPoint<F>) -> Vec<F> {
    let zero = p.coords()[0].zero_like();
    let d = form.degree() as usize;
    let mut out = vec![zero.clone(); d + 1];
    let lin: Vec<[F; 2]> = (0..3).map(|m| [p.coords()[m].clone(), q.coords()[m].clone()]).collect();
    for (&(i, j, k), c) in form.terms() {
        let mut acc = vec![c.clone()];
        for (m, e) in [(0, i), (1, j), (2, k)] {
            for _ in 0..e {
                let mut next = vec![zero.clone(); acc.len() + 1];
                for (n, v) in acc.iter().enumerate() {
                    next[n] = next[n].clone() + v.clone() * lin[m][0].clone();
                    next[n + 1] = next[n + 1].clone() + v.clone() * lin[m][1].clone();
                }
                acc = next;
            }
        }
        for (n, v) in acc.into_iter().enumerate() {
            out[n] = out[n].clone() + v;
        }
    }
    out
}

/// Divides by (t − r) while r stays a root; returns the multiplicity.
fn root_multiplicity<F: FieldElement>(coeffs: &[F], r: &F) -> u32 {
    let mut poly: Vec<F> = coeffs.to_vec();
    let mut mult = 0;
    loop {
        while poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        if poly.len() < 2 {
            return mult;
        }
        // synthetic division, highest coefficient first
        let n = poly.len() - 1;
        let mut quotient = vec![r.zero_like(); n];
        let mut carry = r.zero_like();
        for k in (0..=n).rev() {
            let v = poly[k].clone() + carry.clone() * r.clone();
            if k == 0 {
                if !v.is_zero() {
                    return mult;
                }
            } else {
                quotient[k - 1] = v.clone();
                carry = v;
            }
        }
        mult += 1;
        poly = quotient;
    }
}

/// Points where the line meets the curve, with multiplicities, counting only
/// roots in the working field.
pub fn line_cubic_intersection<F: FieldElement>(
    form: &TernaryForm<F>,
    line: &DualPoint<F>,
) -> Result<Vec<IntersectionRecord<F>>, PlaneError> {
    let (p, q) = line_basis(line);
    let coeffs = restrict(form, &p, &q);
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(PlaneError::DegenerateLine(line.to_string()));
    }
    let d = form.degree();
    let top = coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero") as u32;
    let mut out = Vec::new();
    if top < d {
        out.push(IntersectionRecord { point: q.clone(), multiplicity: d - top });
    }
    for r in F::univariate_roots(&coeffs)? {
        let pt: [F; 3] = std::array::from_fn(|m| p.coords()[m].clone() + r.clone() * q.coords()[m].clone());
        let multiplicity = root_multiplicity(&coeffs, &r);
        out.push(IntersectionRecord { point: ProjPoint::from_coords(pt)?, multiplicity });
    }
    out.sort_by(|x, y| x.point.cmp(&y.point));
    Ok(out)
}

/// Tangent line at a smooth point.
pub fn tangent_line<F: FieldElement>(form: &TernaryForm<F>, pt: &ProjPoint<F>) -> Option<DualPoint<F>> {
    let g = gradient(form);
    DualPoint::from_coords(std::array::from_fn(|i| g[i].eval_at(pt))).ok()
}

/// Every point of P²(F_p), normalized with last nonzero coordinate one.
pub fn projective_plane(field: PrimeField) -> impl Iterator<Item = ProjPoint<Fp>> {
    let (zero, one) = (field.zero(), field.one());
    let affine = field
        .elements()
        .flat_map(move |x| field.elements().map(move |y| ProjPoint::affine(x, y)));
    let at_infinity = field.elements().map(move |x| ProjPoint::new(x, one, zero).expect("nonzero"));
    affine
        .chain(at_infinity)
        .chain(std::iter::once(ProjPoint::new(one, zero, zero).expect("nonzero")))
}

/// F_p-rational points of the curve.
pub fn curve_points_fp(form: &TernaryForm<Fp>, field: PrimeField) -> Vec<ProjPoint<Fp>> {
    projective_plane(field).filter(|pt| form.eval_at(pt).is_zero()).collect()
}

/// All F_p-rational flexes, by exhaustive scan.
pub fn find_flexes_over_fp(form: &TernaryForm<Fp>, field: PrimeField) -> Result<Vec<ProjPoint<Fp>>, PlaneError> {
    let hess = hessian_cubic(form)?;
    let grad = gradient(form);
    let mut out = Vec::new();
    for pt in curve_points_fp(form, field) {
        if flex_test(form, &grad, &hess, &pt)? {
            out.push(pt);
        }
    }
    Ok(out)
}

/// True iff no F_p point kills the form and all three partials.
pub fn smooth_over_fp(form: &TernaryForm<Fp>, field: PrimeField) -> bool {
    let grad = gradient(form);
    !projective_plane(field).any(|pt| form.eval_at(&pt).is_zero() && is_singular_at(&grad, &pt))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Interpolation {
    Found { degree: u32, nullity: usize },
    ExceedsMax { dmax: u32 },
}

impl Interpolation {
    pub fn degree(&self) -> Option<u32> {
        match self {
            Interpolation::Found { degree, .. } => Some(*degree),
            Interpolation::ExceedsMax { .. } => None,
        }
    }
}

fn monomials(d: u32) -> Vec<(u32, u32, u32)> {
    (0..=d).rev().flat_map(|i| (0..=d - i).rev().map(move |j| (i, j, d - i - j))).collect()
}

fn rank<F: FieldElement>(mut rows: Vec<Vec<F>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        let pivot_row: Vec<F> = rows[r].iter().map(|v| v.clone() * inv.clone()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = v.clone() - k.clone() * pv.clone();
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Smallest d ≤ dmax for which some nonzero degree-d form vanishes on every
/// point, with the dimension of the space of such forms.
pub fn min_interpolating_degree<F: FieldElement>(points: &[ProjPoint<F>], dmax: u32) -> Result<Interpolation, PlaneError> {
    if dmax > MAX_INTERPOLATION_DEGREE {
        return Err(PlaneError::DmaxTooLarge(dmax));
    }
    for d in 1..=dmax {
        let mons = monomials(d);
        let rows: Vec<Vec<F>> = points
            .iter()
            .map(|pt| {
                let c = pt.coords();
                let pows: Vec<Vec<F>> = c.iter().map(|v| (0..=d).map(|e| v.pow(e)).collect()).collect();
                mons.iter()
                    .map(|&(i, j, k)| pows[0][i as usize].clone() * pows[1][j as usize].clone() * pows[2][k as usize].clone())
                    .collect()
            })
            .collect();
        let nullity = mons.len() - rank(rows);
        if nullity > 0 {
            return Ok(Interpolation::Found { degree: d, nullity });
        }
    }
    Ok(Interpolation::ExceedsMax { dmax })
}
