use thiserror::Error;

/// All failure modes surfaced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("node index {index} out of range 1..={rank}")]
    NodeIndex { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands belong to different root data")]
    DatumMismatch,

    #[error("Weyl group order {order} exceeds enumeration cap {cap}")]
    EnumerationCap { order: u128, cap: u128 },

    #[error("stabilizer too large to enumerate (cap {cap})")]
    StabilizerCap { cap: usize },

    #[error("lengths do not add: l(w)={len_w}, l(w')={len_w2}, l(ww')={len_prod}")]
    LengthsDoNotAdd {
        len_w: usize,
        len_w2: usize,
        len_prod: usize,
    },

    #[error("degenerate factor along the line at root {root}: the line lies inside a singular hyperplane (value {value})")]
    DegenerateFactor { root: String, value: String },

    #[error("base point is not on {which}: {form} evaluates to {value}")]
    NotOnHyperplane {
        which: &'static str,
        form: &'static str,
        value: String,
    },

    #[error("w0 must not be the identity")]
    IdentityW0,

    #[error("w0 does not stabilize w_alpha . lambda0")]
    W0NotInStabilizer,

    #[error("direction pairs to zero with the coroot of alpha (line parallel to the first critical hyperplane)")]
    DirectionOnH1,

    #[error("direction lies inside the second critical hyperplane's direction space")]
    DirectionOnHm1,

    #[error("kappa = -1: the two critical hyperplanes meet the line at supplementary angles")]
    SupplementaryAngle,

    #[error("the two critical hyperplanes coincide (w0 commutes with w_alpha); no valid line exists")]
    HyperplanesCoincide,

    #[error("line search battery exhausted without a valid direction")]
    LineSearchExhausted,

    #[error("kappa oracle inconsistency: ratio not constant along the line ({details})")]
    OracleInconsistency { details: String },

    #[error("S must contain a neighbour of alpha in the Dynkin diagram")]
    NoAlphaNeighbour,

    #[error("free parameter t must be positive, got {value} for node {node}")]
    NonPositiveT { node: usize, value: String },

    #[error("rank {rank} too small: {needed}")]
    RankTooSmall { rank: usize, needed: &'static str },

    #[error("duplicate root index {index} in configuration")]
    DuplicateRoot { index: usize },

    #[error("multi-root enumeration supports exactly 2 roots, got {got}")]
    PairsOnly { got: usize },

    #[error("need at least 2 entries for a commutation check")]
    TooFewEntries,

    #[error("invalid marking: node {index} does not exist")]
    InvalidMark { index: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
