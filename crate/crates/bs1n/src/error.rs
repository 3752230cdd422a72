use thiserror::Error;

/// Unified error type for the whole crate.
///
/// Operations that can only fail on caller contract violations return
/// `Result` with one of these variants rather than panicking, so the CLI can
/// map every failure to a diagnostic and a stable exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands live over different bases n.
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),

    /// Two truncated n-adic operands disagree in base or depth.
    #[error("shape mismatch: base {0} depth {1} vs base {2} depth {3}")]
    ShapeMismatch(u32, u32, u32, u32),

    /// The denominator has a prime factor that does not divide the base.
    #[error("denominator {0} is not supported in base {1}: it has a prime factor outside the base")]
    DenominatorNotSupported(u128, u32),

    /// A requested truncation depth exceeds what the value carries or what
    /// the fixed-width arithmetic supports.
    #[error("depth {requested} exceeds limit {limit}")]
    DepthExceeded { requested: u32, limit: u32 },

    /// Digit expansion is only defined over prime-power bases.
    #[error("base {0} is not a prime power")]
    BaseNotPrimePower(u32),

    /// An enumeration bound was too small to decide a confining axiom up to
    /// the requested exponent cap.
    #[error("sample exhausted: {0}")]
    SampleExhausted(String),

    /// The residue lattice of a confining set did not stabilize between the
    /// last two truncation depths, so the associated ideal is undecided.
    #[error("inconclusive at depth {depth}: {detail}")]
    InconclusiveDepth { depth: u32, detail: String },

    /// The breadth-first search window provably truncates a generator that a
    /// geodesic within the radius could need.
    #[error("search window too small: {0}")]
    BoundTooSmall(String),

    /// A base parameter outside the supported range (n >= 2).
    #[error("invalid base n = {0}: need n >= 2")]
    InvalidN(u32),

    /// A poset element that does not belong to the poset it was compared in.
    #[error("unknown element: {0}")]
    UnknownElement(String),

    /// A wreath shift pair (i, j) violates 1 <= i < j.
    #[error("invalid shift pair (i, j) = ({0}, {1}): need 1 <= i < j")]
    InvalidPair(u32, u32),

    /// Fixed-width integer conversion overflowed.
    #[error("value does not fit in the fixed-width fraction form: {0}")]
    Overflow(String),

    /// A textual or JSON form failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A catch-all for argument contract violations (zero denominator, empty
    /// component list, and similar).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
