//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic operations.
///
/// Every variant corresponds to a violated precondition or an input outside
/// the supported domain; no variant is used to paper over a numerical issue
/// (there are none — all arithmetic is exact).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The zero polynomial has no well-defined root set.
    ZeroPolynomial,
    /// `taylor_of_algebraic` was called with `Q(0, y0) != 0`.
    NotARoot,
    /// The requested initial term is not a simple root of the initial
    /// equation (the relevant derivative vanishes).
    NotSimpleRoot,
    /// Exact dual computation is capped at ambient dimension 4.
    DimensionUnsupported(usize),
    /// Two vectors (or a vector and a cone) have different ambient dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// The operation requires a strongly convex cone.
    NotStronglyConvex,
    /// `shift_containment` requires the cone intersection to be full
    /// dimensional.
    IntersectionNotFullDimensional,
    /// `separating_omega` requires `v` to be a vertex of the cone with at
    /// least one negative and one positive coordinate.
    NotAVertex(String),
    /// No separating weight vector exists; unreachable when the
    /// preconditions hold, so this signals a defect in the input data.
    NoSeparator,
    /// `refine_over_cone` requires the cone to lie in the closed half-space
    /// of the weight vector.
    ConeNotInHalfSpace,
    /// A vector order must consist of 1..=n nonzero vectors.
    InvalidOrder(String),
    /// The supplied basis does not span the orthogonal complement of omega.
    BadBasis(String),
    /// `tau_classify` requires a strictly positive weight vector.
    NonPositiveOmega,
    /// An index set violates its invariant (monotonicity, integrality, ...).
    InvalidIndexSet(String),
    /// A support component violates its invariant.
    InvalidSupport(String),
    /// The support is empty, so it has no minimal element.
    EmptySupport,
    /// The support is not well ordered for the given order, so taking a
    /// minimum is not meaningful.
    NotWellOrdered,
    /// The weighted order `nu` has no minimum on this support.
    NoMinimum,
    /// The minimal level of the series is not fully inside the known-exact
    /// region, so the initial part cannot be formed.
    LevelNotFullyKnown,
    /// A series combination was requested beyond the region where both
    /// operands are exactly known.
    HorizonExceedsKnowledge,
    /// A coefficient series is a malformed value (zero leading coefficient,
    /// exponent outside its support, ...).
    InvalidSeries(String),
    /// Some weighted initial form has several terms, so the Newton-polygon
    /// step would need a finer weight vector or a pre-shift.
    DegenerateInitialForm,
    /// The requested lifting horizon exceeds what the polynomial
    /// coefficients are known to.
    HorizonExceedsCoefficientKnowledge,
    /// The minimal polynomial must be squarefree in the series variable.
    NotSquarefree,
    /// `gap_constant` requires the weight step along the ray to be positive.
    NonpositiveStep,
    /// The gap certificate requires the series to lie outside the localized
    /// power-series ring.
    PreconditionLocalized,
    /// The certificate question cannot be decided from the symbolic data
    /// (unknown tail occupancy, undecidable coefficient predicate, ...).
    Inconclusive(String),
    /// Every shifted index stays inside the first orthant, so the
    /// Diophantine supremum is infinite.
    NoBlockedIndex,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::NotARoot => write!(f, "initial value is not a root of the polynomial"),
            Error::NotSimpleRoot => write!(f, "initial term is not a simple root"),
            Error::DimensionUnsupported(n) => {
                write!(f, "exact dual computation unsupported in dimension {n} (max 4)")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotStronglyConvex => write!(f, "cone is not strongly convex"),
            Error::IntersectionNotFullDimensional => {
                write!(f, "cone intersection is not full dimensional")
            }
            Error::NotAVertex(msg) => write!(f, "not a usable vertex: {msg}"),
            Error::NoSeparator => write!(f, "no separating weight vector found"),
            Error::ConeNotInHalfSpace => {
                write!(f, "cone is not contained in the half-space of omega")
            }
            Error::InvalidOrder(msg) => write!(f, "invalid vector order: {msg}"),
            Error::BadBasis(msg) => write!(f, "bad basis: {msg}"),
            Error::NonPositiveOmega => write!(f, "omega must have strictly positive coordinates"),
            Error::InvalidIndexSet(msg) => write!(f, "invalid index set: {msg}"),
            Error::InvalidSupport(msg) => write!(f, "invalid support spec: {msg}"),
            Error::EmptySupport => write!(f, "empty support"),
            Error::NotWellOrdered => write!(f, "support is not well ordered for this order"),
            Error::NoMinimum => write!(f, "weighted order has no minimum on this support"),
            Error::LevelNotFullyKnown => write!(f, "minimal level is not fully known"),
            Error::HorizonExceedsKnowledge => {
                write!(f, "requested horizon exceeds the known-exact region")
            }
            Error::InvalidSeries(msg) => write!(f, "invalid series value: {msg}"),
            Error::DegenerateInitialForm => {
                write!(f, "a coefficient has a non-monomial initial form")
            }
            Error::HorizonExceedsCoefficientKnowledge => {
                write!(f, "lifting horizon exceeds coefficient knowledge")
            }
            Error::NotSquarefree => write!(f, "polynomial is not squarefree"),
            Error::NonpositiveStep => write!(f, "omega.v must be positive along the ray"),
            Error::PreconditionLocalized => {
                write!(f, "series lies in the localized power-series ring")
            }
            Error::Inconclusive(msg) => write!(f, "inconclusive: {msg}"),
            Error::NoBlockedIndex => write!(f, "no shifted index leaves the first orthant"),
        }
    }
}
