//! Bayesian multi-task regression with network lasso.
//!
//! Each sample gets its own coefficient vector; coefficients are fused
//! across a relational graph by a global-local shrinkage prior (Dirichlet
//! weights on edgewise scales plus a gamma global scale) and shrunk
//! per-coordinate by a Laplace prior. Estimation is by Gibbs sampling.
//!
//! The crate is organized as:
//! - [`dist`]: random-variate generation and log-densities for the
//!   distributions the hierarchy needs (inverse Gaussian, generalized
//!   inverse Gaussian, Dirichlet, gamma/inverse-gamma, precision-form
//!   multivariate normal).
//! - [`model`]: data containers, the relational edge set, hyperparameters,
//!   sampler state, the network-lasso objective and the log-joint density.
//! - [`gibbs`]: the full-conditional updates, the chain runner, and
//!   posterior summaries.
//! - [`simgen`]: synthetic three-group experiment generator and the
//!   coefficient-error metric.
//! - [`realdata`]: CSV ingestion, kNN graph over coordinates, k-fold
//!   cross-validation with prediction squared error.
//! - [`io`]: documented JSON/CSV schemas for datasets, edges, summaries
//!   and chain dumps.
//!
//! Numeric code is generic over the scalar type via [`Real`]; `f64` is the
//! concrete type used by the CLI and the type aliases at the crate root.

pub mod dist;
pub mod gibbs;
pub mod io;
pub mod model;
pub mod realdata;
pub mod rng;
pub mod simgen;

mod scalar;

pub use rng::RandomSource;
pub use scalar::Real;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A distribution parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A matrix factorization failed (non-positive-definite input).
    #[error("cholesky factorization failed at pivot {pivot}: leading minor not positive definite")]
    Factorization { pivot: usize },
    /// Dimension mismatch between inputs.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Invalid model or experiment configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// All normalization weights underflowed to zero.
    #[error("renormalization failed: {0}")]
    Renormalization(String),
    /// A Gibbs update failed; the sweep index is attached.
    #[error("sweep {sweep}: {source}")]
    Sweep {
        sweep: usize,
        #[source]
        source: Box<Error>,
    },
    /// File or parse error in data ingestion.
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn at_sweep(self, sweep: usize) -> Error {
        Error::Sweep {
            sweep,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

// Concrete aliases for the common case; the CLI and io layer work in f64.
pub type Dataset = model::Dataset<f64>;
pub type GibbsState = model::GibbsState<f64>;
pub type Hyperparameters = model::Hyperparameters<f64>;
pub type ChainSummary = model::ChainSummary<f64>;
pub type ChainConfig = gibbs::ChainConfig<f64>;
