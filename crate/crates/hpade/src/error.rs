use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("series arithmetic requires matching expansion centers")]
    CenterMismatch,
    #[error("series has (numerically) vanishing constant term")]
    SingularSeries,
    #[error("determinant is numerically identically zero")]
    DegenerateDeterminant,
    #[error("root finder failed to converge ({converged} of {total} roots accepted)")]
    RootFinderFailure {
        converged: usize,
        total: usize,
        partial: Vec<num_complex::Complex64>,
    },
    #[error("evaluation too close to a pole of {which}: |den| = {denominator_abs:e}")]
    NearPole { which: String, denominator_abs: f64 },
    #[error("both quadratic roots are equidistant from the branch hint")]
    AmbiguousBranch,
    #[error("point lies on the support/boundary where the quantity is not defined")]
    BoundaryPoint,
    #[error("empirical points lie materially off the comparison interval (max |Im| = {max_imag:e})")]
    SupportViolation { max_imag: f64 },
    #[error("collocation system is too ill-conditioned; refine the grid ({0})")]
    IllConditioned(String),
    #[error("fewer than {required} points survive outlier filtering ({survivors} left)")]
    InsufficientCluster { survivors: usize, required: usize },
    #[error("path violates the branch-point clearance radius")]
    InvalidPath,
    #[error("branch tracking did not stabilise under step refinement")]
    StepRefinementFailure,
    #[error("terminal sheet {sheet} is not reachable by the {scheme} scheme (blocking crossing of {family} at {at})")]
    SheetUnreachable {
        scheme: String,
        sheet: usize,
        family: String,
        at: num_complex::Complex64,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
