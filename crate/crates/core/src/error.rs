//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by model construction and the spectral machinery.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Matrix or vector dimensions do not conform.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// A model invariant failed during construction or loading.
    /// Carries a description of the first violated invariant.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Resolvent requested at a boundary point too close to the spectrum.
    #[error("singular resolvent: z = {lambda} + i0 is within {dist:e} of the spectrum")]
    SingularResolvent { lambda: f64, dist: f64 },

    /// A meromorphic function was evaluated at (or too close to) a pole.
    #[error("evaluation at a pole: nearest pole at {re} + {im}i")]
    PoleEvaluation { re: f64, im: f64 },

    /// Every operator on the path is resonant at the requested point.
    #[error("degenerate path: the whole coupling line is resonant at lambda = {lambda}")]
    DegeneratePath { lambda: f64 },

    /// The requested coupling is not a resonance point of the path.
    #[error("r0 = {r0} is not a resonance point (nearest found: {nearest:?})")]
    NotAResonancePoint { r0: f64, nearest: Option<f64> },

    /// Pole groups of two resonance points intersect at the working height.
    #[error("pole groups overlap at y = {y:e}; shrink y")]
    GroupOverlap { y: f64 },

    /// The up/down partition failed to stabilise over the y-schedule.
    #[error("partition did not stabilise after {halvings} halvings from y0 = {y0:e}")]
    Instability { y0: f64, halvings: usize },

    /// An eigenvalue or pole sits on (or too close to) an integration contour.
    #[error("contour collision: spectrum within {dist:e} of the contour")]
    ContourCollision { dist: f64 },

    /// No admissible detour radius exists for a contour around a pole.
    #[error("contour geometry infeasible near r0 = {r0}: {reason}")]
    ContourGeometry { r0: f64, reason: String },

    /// Quadrature or extrapolation failed to converge to tolerance.
    #[error("convergence failure in {context}: best error {best:e} > tol {tol:e}")]
    Convergence {
        context: &'static str,
        best: f64,
        tol: f64,
    },

    /// A real-valued result carried a non-negligible imaginary part.
    #[error("imaginary residual {imag:e} exceeds tolerance {tol:e}")]
    ImaginaryResidual { imag: f64, tol: f64 },

    /// Eigenvalue counting was requested at a point of the spectrum.
    #[error("ambiguous count: lambda = {lambda} is within {dist:e} of the spectrum")]
    AmbiguousCount { lambda: f64, dist: f64 },

    /// The QR or Jacobi iteration exceeded its iteration budget.
    #[error("eigenvalue iteration did not converge (n = {n})")]
    EigenNoConvergence { n: usize },

    /// Linear solve hit an (effectively) singular matrix.
    #[error("singular linear system (min pivot {pivot:e})")]
    SingularSystem { pivot: f64 },

    /// Principal-value evaluation too close to a removed-interval endpoint.
    #[error("lambda = {lambda} is within the endpoint guard {guard:e} (dist {dist:e})")]
    EndpointProximity { lambda: f64, guard: f64, dist: f64 },

    /// The principal-value integral vanishes: no finite resonance coupling.
    #[error("infinite resonance: p.v. integral vanishes at lambda = {lambda}")]
    InfiniteResonance { lambda: f64 },

    /// Direct trace formula needs a real coupling constant.
    #[error("coupling must be real for the direct trace formula (im = {im:e})")]
    NonRealCoupling { im: f64 },

    /// Invalid argument outside the domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
