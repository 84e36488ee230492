//! Error taxonomy shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate lattice basis: |det| = {det:.3e} below tolerance {tol:.3e}")]
    DegenerateLattice { det: f64, tol: f64 },

    #[error("dehn coefficients require coprime (p, q), got ({p}, {q})")]
    NotCoprime { p: i64, q: i64 },

    #[error("mode enumeration would exceed the cap of {cap} modes (estimated {estimate})")]
    BoundTooLarge { estimate: u64, cap: u64 },

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("operation is undefined for the zero mode")]
    ZeroMode,

    #[error("invalid solver configuration: {0}")]
    BadConfig(String),

    #[error("eigenvalue computation did not converge: {0}")]
    NoConvergence(String),

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("function not normalized: |f|^2 = {0}")]
    NotNormalized(f64),

    #[error("tube too short: need radius >= {need}, have {have}")]
    TubeTooShort { need: f64, have: f64 },

    #[error("window [{a}, {b}] not covered by assembled window [{lo}, {hi}]")]
    WindowNotCovered { a: f64, b: f64, lo: f64, hi: f64 },

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("sparse eigensolver failed: {0}")]
    IterationFailure(String),

    #[error("metrics are not (1+beta)-quasi-isometric: worst cell ratio {worst:.6} exceeds {allowed:.6}")]
    NotQuasiIsometric { worst: f64, allowed: f64 },

    #[error("invalid family specification: {0}")]
    BadFamily(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
