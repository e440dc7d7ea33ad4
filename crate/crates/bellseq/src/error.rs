//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("sequence is empty or identically zero within tolerance")]
    EmptySequence,

    #[error("window too narrow: tail deficit {deficit} exceeds tolerance {tol}")]
    WindowTooNarrow { deficit: f64, tol: f64 },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("measure masses differ: mu_plus = {plus}, mu_minus = {minus}")]
    MassMismatch { plus: f64, minus: f64 },

    #[error("horizon too short: un-absorbed mass {remaining} exceeds tolerance {tol}")]
    HorizonTooShort { remaining: f64, tol: f64 },

    #[error("quadrature failed to meet tolerance {tol}: error estimate {estimate}")]
    QuadratureFailure { estimate: f64, tol: f64 },

    #[error("non-decaying tail: Im x = {im_x} is not positive")]
    NonDecayingTail { im_x: f64 },

    #[error("representation not admissible: {0}")]
    NotAdmissible(String),

    #[error("grid too coarse: need at least {need} samples per piece, got {got}")]
    GridTooCoarse { need: usize, got: usize },

    #[error("argument tracking failed near z = {at}: function vanishes or winds too fast")]
    ZeroCrossing { at: String },

    #[error("singular point sampled on the evaluation grid at t = {t}")]
    SingularitySampled { t: f64 },

    #[error("branch violation: z = {z} lies on the excluded boundary set")]
    BranchViolation { z: String },

    #[error("phi evaluated at a piece breakpoint s = {s}")]
    BreakpointEvaluation { s: f64 },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid phi descriptor: {0}")]
    InvalidPhi(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("file format error: {0}")]
    Format(String),
}
