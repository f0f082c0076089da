use thiserror::Error;

/// Errors raised by the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument {0} lies within the pole guard of sn")]
    Pole(String),

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error(
        "vertices are ordered counterclockwise; reverse them so the exterior lies on the left"
    )]
    Orientation,

    #[error("no cubic root satisfies x^2 < rho(x) (t = {t})")]
    NoAdmissibleRoot { t: f64 },

    #[error("{count} cubic roots satisfy x^2 < rho(x) (t = {t})")]
    AmbiguousRoot { t: f64, count: usize },

    #[error("could not bracket the prevertex t: {0}")]
    Bracketing(String),

    #[error("root finder did not converge after {0} iterations")]
    Convergence(usize),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("point {0} is too close to the pole of the map")]
    PoleProximity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
