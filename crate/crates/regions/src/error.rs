use thiserror::Error;

/// Errors surfaced by the arrangement engine.
///
/// Variants are grouped by how a front end should treat them: input/parse
/// problems, precondition violations on otherwise valid data, and internal
/// diagnostic failures that indicate a bug rather than bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("hyperplane {index}: zero normal vector")]
    ZeroNormal { index: usize },

    #[error("hyperplanes {first} and {second} have proportional normals (duplicate hyperplane)")]
    DuplicateHyperplane { first: usize, second: usize },

    #[error("malformed rational `{token}`")]
    MalformedRational { token: String },

    #[error("arrangement has no hyperplanes")]
    EmptyArrangement,

    #[error("{n} hyperplanes exceeds the supported maximum of {max}")]
    TooManyHyperplanes { n: usize, max: usize },

    #[error("tope {index} has length {found}, expected {expected}")]
    TopeLength {
        index: usize,
        found: usize,
        expected: usize,
    },

    #[error("tope {index}: {reason}")]
    MalformedTope { index: usize, reason: String },

    #[error("topes {first} and {second} are identical (duplicate tope)")]
    DuplicateTope { first: usize, second: usize },

    #[error("tope set is not closed under negation: missing opposite of `{tope}`")]
    SymmetryViolation { tope: String },

    #[error("degenerate tope set: {reason}")]
    DegenerateTopes { reason: String },

    #[error("operation `{operation}` requires geometric mode (arrangement is tope-only)")]
    TopeMode { operation: &'static str },

    #[error(
        "arrangement is not essential (rank {rank} < dimension {dimension}); essentialize first"
    )]
    NotEssential { rank: usize, dimension: usize },

    #[error("`{tope}` is not a chamber of this arrangement")]
    UnknownChamber { tope: String },

    #[error("chamber does not belong to this arrangement")]
    ForeignChamber,

    #[error("chambers `{lo}` and `{hi}` are not comparable in this poset")]
    NotComparable { lo: String, hi: String },

    #[error("poset of regions is a lattice; no non-lattice witness exists")]
    NoWitness,

    #[error("path is not a positive path: chambers {at} and {next} are not adjacent")]
    NotAPath { at: String, next: String },

    #[error("equivalence-class closure exceeded the cap of {cap} paths")]
    ClosureCap { cap: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
