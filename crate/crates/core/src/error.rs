use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported extension degree m = {0} (supported: 2..=16)")]
    UnsupportedDegree(u32),
    #[error("polynomial {poly} is not primitive of degree {m}")]
    NotPrimitive { m: u32, poly: String },
    #[error("cyclotomic cosets need an odd modulus, got {0}")]
    EvenModulus(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid hex coefficient mask {0:?}")]
    InvalidHex(String),

    #[error("zero {0} outside 0..{1}")]
    ZeroOutOfRange(usize, usize),
    #[error("defining set is not closed under doubling: {0} present but {1} missing")]
    NotTwoClosed(usize, usize),
    #[error("defining set must be non-empty and proper (size {size} of {n})")]
    TrivialDefiningSet { size: usize, n: usize },

    #[error("r must be even")]
    OddLocality,
    #[error("r must be positive")]
    ZeroLocality,
    #[error("r + 1 must divide n = {n} (r = {r})")]
    LocalityDoesNotDivide { n: usize, r: usize },
    #[error("m must be even and > 2")]
    RequiresEvenM,
    #[error("m must be divisible by 3")]
    RequiresMDivisibleBy3,

    #[error("checks do not cover coordinate {0}")]
    NotCovering(usize),
    #[error("coordinate {0} has fewer than {1} repair sets meeting only in itself")]
    AvailabilityFailed(usize, usize),
    #[error("groups are not the stride pattern {{i, i+n/3, i+2n/3}}")]
    NotStrideGroups,
    #[error("group {group} projection {pattern} is not an even-weight pattern")]
    BadProjection { group: usize, pattern: String },

    #[error("check does not contain coordinate {0}")]
    CheckMissesCoordinate(usize),
    #[error("coordinate {0} of the repair set is also erased")]
    RepairSetErased(usize),
    #[error("erased positions are dependent; codeword supported on {witness:?}")]
    AmbiguousErasures { witness: Vec<usize> },
    #[error("surviving symbols are inconsistent with every codeword")]
    InconsistentWord,
    #[error("coordinate {0} out of range for length {1}")]
    CoordinateOutOfRange(usize, usize),

    #[error("sphere-packing bound supports d' in {{3, 5}}, got {0}")]
    UnsupportedDistance(usize),

    #[error("too many cyclotomic cosets to enumerate defining sets for m = {0}")]
    SearchSpaceTooLarge(u32),

    #[error("invalid code file: {0}")]
    CodeFile(String),
    #[error("stored {field} {stored} does not match recomputed {computed}")]
    HexMismatch {
        field: &'static str,
        stored: String,
        computed: String,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
