//! Two-sided bell-shaped sequences.
//!
//! A nonnegative two-sided sequence vanishing at ±∞ is *bell-shaped* when its
//! n-th iterated forward difference changes sign exactly n times, for every n.
//! This crate constructs such sequences (Pólya frequency factors, AM–CM
//! measure pairs, named pmf families, discrete stable laws), verifies
//! bell-shapedness by exact sign-change counting, evaluates and inverts
//! generating functions through an exponential boundary representation, and
//! analyses the admissibility of the boundary function φ.
//!
//! All numerics are generic over the scalar type via [`Real`]; concrete `f64`
//! aliases are exported at the crate root.

pub mod construct;
pub mod error;
pub mod genfun;
pub mod invert;
pub mod io;
pub mod phi;
pub mod quad;
pub mod seq;
pub mod walks;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display};

/// Scalar type for all numerics: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Convert an `f64` constant into the working scalar.
pub(crate) fn r<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("constant representable in scalar type")
}

pub(crate) fn ri<R: Real>(x: i64) -> R {
    R::from_i64(x).expect("integer representable in scalar type")
}

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;

pub use construct::{DiscreteMeasure, IndexWindow, PolyaFrequencyParams};
pub use genfun::{BoundaryPhiProbe, C5Report, CircleEvaluator, ClosedForm};
pub use invert::{InversionProbe, PostInvertOutcome};
pub use phi::{
    AdmissibilityReport, ExponentialRep, ExprKind, NegStep, PhiFunction, PieceKind, PositivePiece,
    SignedBoundaryMeasure,
};
pub use seq::{BellShapeReport, TailMode, TwoSidedSequence};
pub use walks::{Lattice, WalkSpec};

pub type Seq64 = TwoSidedSequence<f64>;
pub type Seq32 = TwoSidedSequence<f32>;
pub type Phi64 = PhiFunction<f64>;
pub type Rep64 = ExponentialRep<f64>;
pub type Evaluator64 = CircleEvaluator<f64>;
pub type Complex64 = num_complex::Complex<f64>;
