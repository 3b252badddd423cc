//! Exact computation and machine verification of the chord construction on
//! the plane cubic y² = x³ + a·x² + b·x.
//!
//! Every point p of the curve is sent to the line through p and p + β, where
//! β = (0, 0) is a rational 2-torsion point. The lines form a smooth cubic in
//! the dual plane, isomorphic to the quotient of the curve by β. This crate
//! computes that cubic in closed form and checks the surrounding claims both
//! symbolically (over Q[x, y, a, b]) and exhaustively over small prime fields.

pub mod chord;
pub mod curve;
pub mod plane;
pub mod poly;
pub mod projective;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use chord::{chord_cubic, chord_map, cubic_invariants, line_through, CubicInvariants};
pub use curve::{is_on_curve, validate_curve, CurveError, CurveParams, CurvePoint};
pub use plane::{IntersectionRecord, Interpolation, PlaneError};
pub use poly::MultiPoly;
pub use projective::{DualPoint, FormError, ProjPoint, TernaryForm};
pub use scalar::{make_rational, squares_table, FieldElement, Fp, PrimeField, Rational, Ring, ScalarError};
