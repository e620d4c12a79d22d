//! Upper-bound ("dual") pricing of American and Bermudan options by direct
//! minimization of a variance-penalized empirical dual objective over a
//! sieve-parameterized family of martingales.
//!
//! The pipeline:
//!
//! 1. simulate a batch of SDE paths together with their Brownian increments
//!    ([`simulate`]),
//! 2. expand a stochastic-integral martingale family that is linear in its
//!    coefficient vector ([`basis`], [`martingale`]),
//! 3. minimize `mean_j Z^(j)(beta) + lambda * sqrt(V_n)` over the
//!    coefficients, where `Z^(j)` is the pathwise maximum of
//!    (discounted payoff - martingale) and `V_n` the unbiased sample
//!    variance ([`objective`], [`optimizer`]),
//! 4. re-estimate the bound on independent paths ([`estimator`]).
//!
//! Any coefficient vector yields a genuine upper bound on the option value;
//! the variance penalty drives the optimizer toward martingales whose
//! pathwise dual payoff is nearly flat, which shrinks the Monte Carlo error
//! of the final estimate.

pub mod basis;
pub mod error;
pub mod estimator;
pub mod grid;
pub mod martingale;
pub mod model;
pub mod objective;
pub mod optimizer;
pub mod oracles;
pub mod payoff;
pub mod presets;
pub mod rng;
pub mod simulate;
pub(crate) mod util;

pub use crate::error::{Error, Result};
pub use crate::grid::TimeGrid;
pub use crate::model::SdeModel;
pub use crate::payoff::{ExerciseSchedule, PayoffKind, PayoffSpec};
pub use crate::simulate::PathBatch;
