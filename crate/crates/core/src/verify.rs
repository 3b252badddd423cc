//! Claim-level verification. Each check returns a [`Report`]; the `check_*`
//! variants take the formula under test as an argument so that regression
//! tests can feed in deliberately broken versions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::chord::{chord_cubic, chord_cubic_symbolic, chord_lines_symbolic, chord_map, line_through};
use crate::curve::{CurveError, CurveParams, CurvePoint};
use crate::plane::{
    curve_points_fp, find_flexes_over_fp, is_flex, min_interpolating_degree, smooth_over_fp, Interpolation, PlaneError,
};
use crate::poly::{Bindings, MultiPoly};
use crate::projective::{DualPoint, TernaryForm};
use crate::scalar::{is_small_odd_prime, Fp, PrimeField, Rational, Ring, ScalarError};

/// Smallest prime at which the degree remark is checked.
pub const DEGREE_REMARK_MIN_PRIME: u64 = 101;

/// Witnesses kept per failing report.
const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("{0}")]
    Rejected(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Stats {
    pub points_checked: u64,
    /// Wall-clock time; kept out of JSON so that output is reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub status: Status,
    /// Counterexamples when failing, `null` otherwise.
    pub witness: Value,
    pub stats: Stats,
}

impl Report {
    pub fn skipped(claim: &str, reason: impl Into<String>) -> Self {
        let mut stats = Stats::default();
        stats.extra.insert("reason".into(), Value::String(reason.into()));
        Report { claim: claim.into(), status: Status::Skipped, witness: Value::Null, stats }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Accumulates failures while a check runs.
struct Check {
    claim: &'static str,
    started: Instant,
    failures: Vec<Value>,
    failure_count: u64,
    stats: Stats,
}

impl Check {
    fn new(claim: &'static str) -> Self {
        Check { claim, started: Instant::now(), failures: Vec::new(), failure_count: 0, stats: Stats::default() }
    }

    fn fail(&mut self, witness: Value) {
        self.failure_count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness);
        }
    }

    fn require(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if !ok {
            self.fail(witness());
        }
    }

    fn stat(&mut self, key: &str, v: impl Into<Value>) {
        self.stats.extra.insert(key.into(), v.into());
    }

    fn finish(mut self) -> Report {
        self.stats.elapsed_ms = self.started.elapsed().as_millis();
        let (status, witness) = if self.failures.is_empty() {
            (Status::Pass, Value::Null)
        } else {
            self.stats.extra.insert("failures".into(), self.failure_count.into());
            (Status::Fail, Value::Array(self.failures))
        };
        Report { claim: self.claim.into(), status, witness, stats: self.stats }
    }
}

fn ints(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

// ---------------------------------------------------------------------------
// Symbolic checks
// ---------------------------------------------------------------------------

/// Chord coordinates [U:V:W] pass through both p and p + β, as polynomial
/// identities in x, y, b with no curve relation.
pub fn verify_chord_incidence_symbolic() -> Report {
    check_chord_incidence(&chord_lines_symbolic())
}

pub fn check_chord_incidence(lines: &[MultiPoly; 3]) -> Report {
    let mut check = Check::new("ChordLines");
    let [u, v, w] = lines.clone();
    let (x, y, b) = (MultiPoly::x(), MultiPoly::y(), MultiPoly::b());
    let through_p = u.clone() * x.clone() + v.clone() * y.clone() + w.clone();
    // x²·(U·(b/x) + V·(−b·y/x²) + W)
    let through_translate = u * b.clone() * x.clone() - v * b * y + w * x.pow(2);
    for (name, residual) in [("p", through_p), ("p+beta", through_translate)] {
        check.require(residual.is_zero(), || json!({ "line_misses": name, "residual": residual }));
    }
    check.finish()
}

/// Inputs to the image-cubic identity: the chord formula, the cleared cubic G,
/// and e = e_num / e_den.
#[derive(Clone, Debug)]
pub struct IdentityInputs {
    pub lines: [MultiPoly; 3],
    pub cubic: TernaryForm<MultiPoly>,
    pub e_num: MultiPoly,
    pub e_den: MultiPoly,
}

impl IdentityInputs {
    /// e = −8b³ / (a² − 4b).
    pub fn standard() -> Self {
        let (a, b) = (MultiPoly::a(), MultiPoly::b());
        IdentityInputs {
            lines: chord_lines_symbolic(),
            cubic: chord_cubic_symbolic(),
            e_num: ints(-8) * b.pow(3),
            e_den: a.pow(2) - ints(4) * b,
        }
    }
}

pub fn verify_identity_symbolic() -> Report {
    check_identity(&IdentityInputs::standard())
}

pub fn check_identity(inputs: &IdentityInputs) -> Report {
    let mut check = Check::new("Tccformula");
    let (a, b) = (MultiPoly::a(), MultiPoly::b());
    let [u, v, w] = inputs.lines.clone();

    let on_cubic = inputs.cubic.evaluate(&inputs.lines).reduce_mod_curve();
    check.stat("cubic_residual_terms", on_cubic.num_terms());
    check.require(on_cubic.is_zero(), || json!({ "form": "cleared cubic", "residual": on_cubic }));

    // Displayed ratio N / D = e·y²/f with N = W³ − c1·T'·W² − c2·T'²·W,
    // D = T'·V², T' = U − (a/2b)·W. Scaling by S = 4b²(4b − a²) and 2b
    // clears every denominator: S·N and 2b·D below are polynomials.
    let k = ints(4) * b.clone() - a.pow(2);
    let t = ints(2) * b.clone() * u - a.clone() * w.clone();
    let s_num = ints(4) * b.pow(2) * k.clone() * w.pow(3)
        - ints(8) * a * b.pow(2) * t.clone() * w.pow(2)
        - ints(4) * b.pow(2) * t.pow(2) * w;
    let two_b_den = t * v.pow(2);
    let s = ints(4) * b.pow(2) * k;
    let f = MultiPoly::curve_rhs();
    let y2 = MultiPoly::y().pow(2);
    // N·f = e·y²·D holds in Q[x, y, a, b] outright; N = e·D needs y² = f.
    let scaled_num = s_num * inputs.e_den.clone() * ints(2) * b;
    let scaled_den = inputs.e_num.clone() * s * two_b_den;
    let ratio = scaled_num.clone() * f - scaled_den.clone() * y2;
    let ratio = ratio.reduce_mod_curve();
    check.require(ratio.is_zero(), || json!({ "form": "ratio times f", "residual": ratio }));
    let bare = scaled_num - scaled_den;
    check.stat("ratio_terms_before_reduction", bare.num_terms());
    let bare = bare.reduce_mod_curve();
    check.require(bare.is_zero(), || json!({ "form": "ratio", "residual": bare }));
    check.finish()
}

// ---------------------------------------------------------------------------
// Finite-field checks
// ---------------------------------------------------------------------------

/// p + β by the closed form agrees with the group law; the chord equals the
/// line through p and p + β.
pub fn verify_chord_lines_fp(params: &CurveParams<Fp>) -> Report {
    let mut check = Check::new("ChordLinesFp");
    let beta = params.beta();
    for pt in params.enumerate_points() {
        check.stats.points_checked += 1;
        let t = pt.translate_by_beta();
        let via_law = pt.group_add(&beta).expect("same curve");
        check.require(t == via_law, || json!({ "point": pt, "closed_form": t, "group_law": via_law }));
        check.require(t.translate_by_beta() == pt, || json!({ "involution_fails_at": pt }));
        let line = chord_map(&pt);
        let oracle = line_through(&pt.to_projective(), &t.to_projective()).expect("p ≠ p + β");
        check.require(line == oracle, || json!({ "point": pt, "chord": line, "line_through": oracle }));
        check.require(line == chord_map(&t), || json!({ "not_constant_on_fiber": pt }));
    }
    check.finish()
}

/// Every chord lies on the image cubic.
pub fn verify_image_on_cubic(params: &CurveParams<Fp>) -> Report {
    check_image_on_cubic_with(params, chord_map)
}

pub fn check_image_on_cubic_with(params: &CurveParams<Fp>, map: impl Fn(&CurvePoint<Fp>) -> DualPoint<Fp>) -> Report {
    let mut check = Check::new("ImageOnCubic");
    let g = chord_cubic(params);
    for pt in params.enumerate_points() {
        check.stats.points_checked += 1;
        let line = map(&pt);
        check.require(g.eval_at(&line.to_point()).is_zero(), || json!({ "point": pt, "chord": line }));
    }
    check.finish()
}

/// Every fiber of the chord map is exactly {q, q + β}.
pub fn verify_fibers(params: &CurveParams<Fp>) -> Report {
    check_fibers_with(params, chord_map)
}

pub fn check_fibers_with(params: &CurveParams<Fp>, map: impl Fn(&CurvePoint<Fp>) -> DualPoint<Fp>) -> Report {
    let mut check = Check::new("Fibers");
    let pts = params.enumerate_points();
    let mut fibers: BTreeMap<DualPoint<Fp>, BTreeSet<CurvePoint<Fp>>> = BTreeMap::new();
    for pt in &pts {
        fibers.entry(map(pt)).or_default().insert(pt.clone());
    }
    check.stats.points_checked = pts.len() as u64;
    for (line, fiber) in &fibers {
        let q = fiber.first().expect("nonempty");
        let expected = BTreeSet::from([q.clone(), q.translate_by_beta()]);
        check.require(*fiber == expected, || json!({ "line": line, "fiber": fiber, "expected": expected }));
    }
    check.require(fibers.len() * 2 == pts.len(), || json!({ "image_size": fibers.len(), "points": pts.len() }));
    check.stat("image_size", fibers.len());
    check.finish()
}

pub fn verify_image_smooth(params: &CurveParams<Fp>) -> Report {
    let mut check = Check::new("ImageSmooth");
    let field = params.field();
    check.stats.points_checked = {
        let p = field.modulus() as u64;
        p * p + p + 1
    };
    check.require(smooth_over_fp(&chord_cubic(params), field), || json!({ "singular_point_found": true }));
    check.finish()
}

/// Plane cubics form a 9-dimensional projective family.
const MIN_IMAGE_FOR_DEGREE: usize = 10;

/// The chord images interpolate a unique cubic and nothing of lower degree.
pub fn verify_image_degree(params: &CurveParams<Fp>, dmax: u32) -> Result<Report, VerifyError> {
    let image: BTreeSet<_> = params.enumerate_points().iter().map(|p| chord_map(p).to_point()).collect();
    let image: Vec<_> = image.into_iter().collect();
    if image.len() < MIN_IMAGE_FOR_DEGREE {
        return Ok(Report::skipped(
            "ImageDegree",
            format!("{} image points cannot single out a cubic", image.len()),
        ));
    }
    let mut check = Check::new("ImageDegree");
    check.stats.points_checked = image.len() as u64;
    let found = min_interpolating_degree(&image, dmax)?;
    check.stat("interpolation", serde_json::to_value(found).expect("serializable"));
    let expected = Interpolation::Found { degree: 3, nullity: 1 };
    check.require(found == expected, || json!({ "found": found, "expected": expected }));
    Ok(check.finish())
}

/// Flexes of the image cubic are the chords of 3-torsion points shifted by a
/// non-β 2-torsion point γ.
pub fn verify_flex_correspondence(params: &CurveParams<Fp>) -> Result<Report, VerifyError> {
    check_flex_correspondence_with(params, |q, gamma| chord_map(&q.group_add(gamma).expect("same curve")))
}

pub fn check_flex_correspondence_with(
    params: &CurveParams<Fp>,
    image_of: impl Fn(&CurvePoint<Fp>, &CurvePoint<Fp>) -> DualPoint<Fp>,
) -> Result<Report, VerifyError> {
    let gammas = params.gammas();
    if gammas.is_empty() {
        return Ok(Report::skipped("FlexCorrespondence", "x² + ax + b does not split: no rational γ"));
    }
    let mut check = Check::new("FlexCorrespondence");
    let field = params.field();
    let g = chord_cubic(params);
    let flexes = params.three_torsion_flexes();
    check.stat("three_torsion", flexes.len());
    for q in &flexes {
        for gamma in &gammas {
            check.stats.points_checked += 1;
            let d = image_of(q, gamma);
            let ok = matches!(is_flex(&g, &d.to_point()), Ok(true));
            check.require(ok, || json!({ "flex": q, "gamma": gamma, "image": d }));
        }
    }
    let origin_chord = chord_map(&params.identity()).to_point();
    check.require(!is_flex(&g, &origin_chord)?, || json!({ "unexpected_flex": origin_chord }));

    // Converse: each rational flex of the image comes from some r with 3r = γ.
    let image_flexes = find_flexes_over_fp(&g, field)?;
    check.stat("image_flexes", image_flexes.len());
    let mut fibers: HashMap<DualPoint<Fp>, Vec<CurvePoint<Fp>>> = HashMap::new();
    for pt in params.enumerate_points() {
        fibers.entry(chord_map(&pt)).or_default().push(pt);
    }
    for d in image_flexes {
        let explained = fibers
            .get(&d.to_line())
            .is_some_and(|fiber| fiber.iter().any(|r| gammas.contains(&r.scalar_mul(3))));
        check.require(explained, || json!({ "unexplained_image_flex": d }));
    }
    Ok(check.finish())
}

/// Flexes of the Weierstrass model (Hessian scan) are exactly its 3-torsion.
pub fn verify_weierstrass_flexes(params: &CurveParams<Fp>) -> Result<Report, VerifyError> {
    let mut check = Check::new("WeierstrassFlexes");
    let mut scan = find_flexes_over_fp(&params.weierstrass_form(), params.field())?;
    scan.sort();
    let mut torsion: Vec<_> = params.three_torsion_flexes().iter().map(CurvePoint::to_projective).collect();
    torsion.sort();
    check.stats.points_checked = torsion.len() as u64;
    check.require(scan == torsion, || json!({ "hessian_scan": scan, "three_torsion": torsion }));
    Ok(check.finish())
}

// ---------------------------------------------------------------------------
// Quotient curve
// ---------------------------------------------------------------------------

/// Coefficients (A, B) of the 2-isogenous curve Y² = X³ + A·X² + B·X.
#[derive(Clone, Debug)]
pub struct IsogenyTarget {
    pub a: MultiPoly,
    pub b: MultiPoly,
}

impl IsogenyTarget {
    /// (−2a, a² − 4b).
    pub fn standard() -> Self {
        let (a, b) = (MultiPoly::a(), MultiPoly::b());
        IsogenyTarget { a: ints(-2) * a.clone(), b: a.pow(2) - ints(4) * b }
    }
}

pub fn verify_quotient(params: &CurveParams<Rational>, primes: &[u64]) -> Result<Report, VerifyError> {
    check_quotient_with(params, primes, &IsogenyTarget::standard())
}

/// (x, y) ↦ (y²/x², y(x² − b)/x²) lands on the target curve, and the image
/// cubic has as many F_p points as the target curve.
pub fn check_quotient_with(
    params: &CurveParams<Rational>,
    primes: &[u64],
    target: &IsogenyTarget,
) -> Result<Report, VerifyError> {
    let mut check = Check::new("Quotient");
    let (x, y, b) = (MultiPoly::x(), MultiPoly::y(), MultiPoly::b());
    // multiply Y² − X³ − A·X² − B·X through by x⁶
    let big_x = y.pow(2);
    let big_y = y.clone() * (x.pow(2) - b);
    let cleared = big_y.pow(2) * x.pow(2)
        - big_x.pow(3)
        - target.a.clone() * big_x.pow(2) * x.pow(2)
        - target.b.clone() * big_x * x.pow(4);
    let residual = cleared.reduce_mod_curve();
    check.require(residual.is_zero(), || json!({ "isogeny_residual": residual }));

    let ab = Bindings { a: Some(MultiPoly::constant(params.a().clone())), b: Some(MultiPoly::constant(params.b().clone())), ..Default::default() };
    let target_a = target.a.substitute(&ab).coefficient(&Default::default());
    let target_b = target.b.substitute(&ab).coefficient(&Default::default());
    let mut counts = Vec::new();
    for &p in primes {
        let field = PrimeField::new(p)?;
        let (Ok(fp), Ok(ta), Ok(tb)) = (params.reduce(field), field.from_rational(&target_a), field.from_rational(&target_b)) else {
            counts.push(json!({ "prime": p, "skipped": "bad reduction" }));
            continue;
        };
        let Ok(quotient) = CurveParams::new(ta, tb) else {
            counts.push(json!({ "prime": p, "skipped": "target curve singular" }));
            continue;
        };
        let image_count = curve_points_fp(&chord_cubic(&fp), field).len();
        let target_count = quotient.enumerate_points().len();
        check.stats.points_checked += (p * p + p + 1) + target_count as u64;
        counts.push(json!({ "prime": p, "image_cubic": image_count, "quotient": target_count }));
        check.require(image_count == target_count, || json!({ "prime": p, "image_cubic": image_count, "quotient": target_count }));
    }
    check.stat("counts", Value::Array(counts));
    Ok(check.finish())
}

// ---------------------------------------------------------------------------
// Translation chords
// ---------------------------------------------------------------------------

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut i = i;
    while parent[i] != r {
        let next = parent[i];
        parent[i] = r;
        i = next;
    }
    r
}

fn union(parent: &mut [usize], i: usize, j: usize) {
    let (ri, rj) = (find(parent, i), find(parent, j));
    if ri != rj {
        parent[ri.max(rj)] = ri.min(rj);
    }
}

fn partition(parent: &mut [usize]) -> BTreeSet<Vec<usize>> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..parent.len() {
        groups.entry(find(parent, i)).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Checks q ↦ line(q, q + T) over E(F_p): the fibers are exactly the
/// predicted ones and the image spans a curve of `expected_degree`.
///
/// When 2T = O the fibers are {q, q + T}. Otherwise a line through q, q + T
/// contains another translate pair only when q, q + T, q + 2T are collinear,
/// i.e. 3(q + T) = O; so the fibers are singletons except {s − T, s} for each
/// s in E[3](F_p), and the map has degree one.
pub fn check_translation_chords(params: &CurveParams<Fp>, t: &CurvePoint<Fp>, expected_degree: u32, dmax: u32) -> Result<Report, VerifyError> {
    let mut check = Check::new("DegreeRemark");
    let pts = params.enumerate_points();
    let index: HashMap<&CurvePoint<Fp>, usize> = pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let order = t.order();
    check.stat("order", order);
    check.stat("translation", serde_json::to_value(t).expect("serializable"));

    let mut by_line: BTreeMap<DualPoint<Fp>, Vec<usize>> = BTreeMap::new();
    for (i, q) in pts.iter().enumerate() {
        let qt = q.group_add(t).expect("same curve");
        let line = line_through(&q.to_projective(), &qt.to_projective()).expect("T ≠ O");
        by_line.entry(line).or_default().push(i);
    }
    check.stats.points_checked = pts.len() as u64;
    let mut actual_parent: Vec<usize> = (0..pts.len()).collect();
    for fiber in by_line.values() {
        for w in fiber.windows(2) {
            union(&mut actual_parent, w[0], w[1]);
        }
    }
    let actual = partition(&mut actual_parent);

    let mut predicted_parent: Vec<usize> = (0..pts.len()).collect();
    if t.scalar_mul(2).is_identity() {
        for (i, q) in pts.iter().enumerate() {
            union(&mut predicted_parent, i, index[&q.group_add(t).expect("same curve")]);
        }
    } else {
        for s in params.three_torsion_flexes() {
            let prev = s.group_add(&t.neg()).expect("same curve");
            union(&mut predicted_parent, index[&prev], index[&s]);
        }
    }
    let predicted = partition(&mut predicted_parent);
    check.stat("image_size", by_line.len());
    check.stat("non_singleton_fibers", actual.iter().filter(|f| f.len() > 1).count());
    if actual != predicted {
        let show = |set: &BTreeSet<Vec<usize>>| -> Vec<Vec<String>> {
            set.iter()
                .filter(|f| f.len() > 1)
                .take(MAX_WITNESSES)
                .map(|f| f.iter().map(|&i| pts[i].to_string()).collect())
                .collect()
        };
        check.fail(json!({ "fibers": show(&actual), "predicted": show(&predicted) }));
    }

    let image: Vec<_> = by_line.keys().map(DualPoint::to_point).collect();
    // Bezout: more than d(d−1) points on an irreducible degree-d curve rule out degree d − 1
    let needed = (expected_degree * (expected_degree - 1) + 1) as usize;
    check.require(image.len() >= needed, || json!({ "image_size": image.len(), "needed": needed }));
    let found = min_interpolating_degree(&image, dmax)?;
    check.stat("interpolation", serde_json::to_value(found).expect("serializable"));
    check.require(found.degree() == Some(expected_degree), || json!({ "found": found, "expected_degree": expected_degree }));
    Ok(check.finish())
}

/// Translation by a point of order `order` > 2 gives a degree-one map whose
/// image is a sextic.
pub fn verify_degree_remark(params: &CurveParams<Fp>, order: u64, dmax: u32) -> Result<Report, VerifyError> {
    let p = params.field().modulus() as u64;
    if p < DEGREE_REMARK_MIN_PRIME {
        return Err(VerifyError::Rejected(format!("degree check needs p ≥ {DEGREE_REMARK_MIN_PRIME}, got {p}")));
    }
    if order <= 2 {
        return Err(VerifyError::Rejected(format!("order must exceed 2, got {order}")));
    }
    match params.point_of_order(order) {
        Some(t) => check_translation_chords(params, &t, 6, dmax),
        None => Ok(Report::skipped("DegreeRemark", format!("no point of order {order} over F_{p}"))),
    }
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

/// Orders tried by the suite for the degree remark.
pub const SUITE_ORDERS: [u64; 3] = [4, 5, 6];

/// Every check applicable at (params, p), in fixed claim order.
pub fn run_full_suite(params: &CurveParams<Rational>, p: u64, dmax: u32) -> Result<Vec<Report>, VerifyError> {
    let field = PrimeField::new(p)?;
    let fp = params.reduce(field)?;
    let mut reports = vec![
        verify_chord_incidence_symbolic(),
        verify_identity_symbolic(),
        verify_chord_lines_fp(&fp),
        verify_image_on_cubic(&fp),
        verify_fibers(&fp),
        verify_image_smooth(&fp),
        verify_image_degree(&fp, dmax)?,
        verify_flex_correspondence(&fp)?,
        verify_weierstrass_flexes(&fp)?,
        verify_quotient(params, &[p])?,
    ];
    for order in SUITE_ORDERS {
        if p < DEGREE_REMARK_MIN_PRIME {
            reports.push(Report::skipped("DegreeRemark", format!("p < {DEGREE_REMARK_MIN_PRIME}")));
        } else {
            reports.push(verify_degree_remark(&fp, order, dmax)?);
        }
    }
    Ok(reports)
}

/// Validates a prime argument the way every entry point expects it.
pub fn check_prime(p: u64) -> Result<PrimeField, VerifyError> {
    if !is_small_odd_prime(p) && p != 2 {
        return Err(VerifyError::Rejected(format!("{p} is not an odd prime below 65536")));
    }
    Ok(PrimeField::new(p)?)
}

/// Reports pass or skip; used for exit codes.
pub fn all_ok(reports: &[Report]) -> bool {
    reports.iter().all(Report::is_ok)
}
