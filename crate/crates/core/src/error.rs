use std::path::PathBuf;

/// Errors raised by constructors, verifiers and exporters.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite sample at (k={k}, j={j})")]
    NonFinite { k: i64, j: usize },
    #[error("row k+1 = {} is outside the surface's k-range", k + 1)]
    EdgeMissing { k: i64 },
    #[error("finite-difference stencil needs at least {needed} samples, grid has {len}")]
    Stencil { needed: usize, len: usize },
    #[error("index (k={k}, j={j}) is outside the grid")]
    OutsideGrid { k: i64, j: usize },
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("zero tangent vector at (k={k}, j={j})")]
    ZeroTangent { k: i64, j: usize },
    #[error("singular holomorphic data at (k={k}, t={t}): {what} vanishes")]
    SingularData { k: i64, t: f64, what: &'static str },
    #[error("point {0:?} is the projection pole")]
    Pole([f64; 3]),
    #[error("Moebius map has a pole at (k={k}, t={t})")]
    MobiusPole { k: i64, t: f64 },
    #[error("SU(2) element has |p|^2 + |q|^2 = {0}, expected 1")]
    NormViolation(f64),
    #[error("coincident points make the cross-ratio undefined")]
    CoincidentPoints,
    #[error("degenerate sphere fit: {0}")]
    DegenerateFit(String),
    #[error("no positive root of cosh(c3 r) = c3 sqrt((1+c)/2) for K={symmetry}, r={r} (scanned c3 in ({lo:.3e}, {hi:.3e}])")]
    NoSolution { symmetry: u64, r: f64, lo: f64, hi: f64 },
    #[error("profile is not a cosh graph: {0}")]
    NotCosh(String),
    #[error("parameter ranges of the two profiles do not overlap")]
    DisjointRanges,
    #[error("perturbation does not vanish at the boundary: {0}")]
    BoundaryNotPinned(String),
    #[error("profile does not span [-r, r]: {0}")]
    ProfileSpan(String),
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
