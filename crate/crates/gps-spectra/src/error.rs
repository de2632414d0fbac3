use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Error)]
pub enum GpsError {
    /// A configuration value violates its documented constraint.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Newton iteration for collocation nodes failed to converge.
    #[error("node search did not converge for order {order} (node {index})")]
    NodeSearch { order: usize, index: usize },

    /// The potential evaluated to a non-finite value at an interior grid
    /// point, which usually means the grid reaches radii the potential
    /// cannot support (adjust r_max or alpha).
    #[error(
        "potential is not finite at interior node {index} (r = {radius:.6e}); \
         adjust r_max/alpha for this potential"
    )]
    NonFinitePotential { index: usize, radius: f64 },

    /// Eigensolver rejected its input or failed to converge.
    #[error("eigensolver: {0}")]
    Eigensolver(String),

    /// A bisection bracket does not enclose the sought transition.
    #[error("invalid bracket [{lo}, {hi}]: {reason}; widen the bracket")]
    Bracket { lo: f64, hi: f64, reason: String },

    /// Requested (family, regime) or (family, operation) pair is not defined.
    #[error("unsupported request: {0}")]
    Unsupported(String),

    /// Output path could not be written.
    #[error("i/o error for {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
