use thiserror::Error;

/// Errors raised by construction, loading, and search routines.
///
/// Failed axiom or law checks are *not* errors: they are reported as
/// [`crate::report::Report`] values carrying witnesses.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe size {0} out of range (1..=64)")]
    UniverseSize(usize),

    #[error("point {point} outside universe of size {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("relation is not transitive: ({0}, {2}) missing although ({0}, {1}) and ({1}, {2}) are present")]
    NotTransitive(usize, usize, usize),

    #[error("relation is not antisymmetric: {0} and {1} are related both ways")]
    NotAntisymmetric(usize, usize),

    #[error("relation is not symmetric: ({0}, {1}) present but ({1}, {0}) missing")]
    NotSymmetric(usize, usize),

    #[error("enumeration size {requested} exceeds bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("relation parse error on line {line}: {message}")]
    RelationSyntax { line: usize, message: String },

    #[error("set {0} is not an element of the lattice")]
    NotInLattice(String),

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("element {0} is not below every dense element")]
    NotBelowDense(String),

    #[error("equivalence is not a congruence: {0}")]
    NotACongruence(String),

    #[error("congruence is not Boolean: class {0} has no complement in the quotient")]
    NotBoolean(usize),

    #[error("T is defined only on effective lattices (pass force to compute anyway)")]
    NotEffective,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("T leaves the carrier: {0}")]
    TOutsideCarrier(String),

    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error("formula syntax error at byte {position}: {message}")]
    FormulaSyntax { position: usize, message: String },

    #[error("atom `{0}` has no value in the valuation")]
    UnmappedAtom(String),

    #[error("search needs {needed} valuations, above the cap of {cap}")]
    SearchCap { needed: u128, cap: u64 },

    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
