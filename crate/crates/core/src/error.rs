use thiserror::Error;

/// Errors produced by the capacity, reduction and toric pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two classes (or a class and a cohomology vector) live on different
    /// blowups of the plane.
    #[error("degree mismatch: operands have {left} and {right} exceptional classes")]
    DegreeMismatch { left: usize, right: usize },

    /// Reduction walked the input out of the symplectic cone, or the input
    /// was never in it.
    #[error("not in the symplectic K₀-cone (or on its boundary)")]
    NotInSymplecticCone,

    /// The reduction loop exceeded its iteration cap; the input is treated
    /// as invalid rather than silently truncated.
    #[error("reduction exceeded the iteration cap ({0} steps); input rejected as invalid")]
    ReductionCapExceeded(usize),

    /// A Cremona reflection was requested with indices that are out of
    /// range or not pairwise distinct.
    #[error("invalid reflection indices ({i},{j},{k}) for n = {n}")]
    InvalidReflectionIndices { i: usize, j: usize, k: usize, n: usize },

    /// `k` must be a positive integer.
    #[error("capacity index k must be ≥ 1")]
    InvalidK,

    /// The input class cannot be brought into the closed reduced cone with
    /// positive self-intersection, which the solver needs to terminate.
    #[error("class outside the admissible region: {0}")]
    OutsideAdmissibleRegion(String),

    /// Exceptional-class enumeration is only finite for n ≤ 8.
    #[error("exceptional set infinite for n = {0}; unsupported (requires n ≤ 8)")]
    ExceptionalSetInfinite(usize),

    /// A tropical evaluation was requested outside the c₁-nef part of the
    /// reduced cone, where the minimizer set no longer computes `f_k`.
    #[error("evaluation point outside the c₁-nef reduced cone")]
    OutOfDomain,

    /// The certified enumeration bound is impractically large and no
    /// fallback budget was supplied.
    #[error("certified bound {certified} is impractical and no enumeration budget was given")]
    NoCertificateOrBudget { certified: u64 },

    /// Enumeration exceeded the hard node cap even with the supplied budget.
    #[error("enumeration exceeded {0} search nodes; reduce n, k or the budget")]
    EnumerationBudgetExceeded(u64),

    /// Scaled integer arithmetic would overflow the supported range.
    #[error("input magnitude beyond the supported exact-arithmetic range: {0}")]
    MagnitudeOverflow(String),

    /// Polygon is not strictly convex, has fewer than three vertices, or is
    /// otherwise malformed.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// No corner of the polygon admits a unimodular map onto the positive
    /// quadrant axes.
    #[error("no corner admits an integral-affine normalization (non-unimodular everywhere)")]
    NonDelzantCorner,

    /// Weight sequence violates its invariants.
    #[error("invalid weight sequence: {0}")]
    InvalidWeights(String),

    /// The weight expansion did not terminate within the step cap; this
    /// signals a bug, not a truncation.
    #[error("weight expansion exceeded {0} steps; this is a bug")]
    ExpansionStepCap(usize),

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
