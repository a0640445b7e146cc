//! Sensitivity analysis for propensity-score models.
//!
//! The toolkit quantifies how much each covariate moves a fitted propensity
//! score by running leave-one-variable-out pseudo-experiments: every covariate
//! in turn is treated as if it were unobserved, its influence score is compared
//! against the influence scores of the remaining covariates, and the rank-based
//! comparison is summarised as a sensitivity index probability (SIP) per
//! covariate plus an overall index. Exponentially weighted refits provide
//! standard errors and percentile confidence bands, and a Monte Carlo harness
//! reproduces the reference simulation studies end to end.
//!
//! Modules:
//! - [`glm`] — weighted logistic-regression MLE over arbitrary covariate
//!   subsets (the only numerical-optimization kernel).
//! - [`sip`] — index-set family enumeration, influence scores, SIP values.
//! - [`resample`] — Exp(1)-weighted refits, standard deviations, percentile
//!   confidence intervals.
//! - [`datagen`] — correlated binary / (truncated) Gaussian covariate
//!   generators and logistic treatment assignment.
//! - [`study`] — simulation-study orchestration: true values, replication
//!   loops, coverage, mean ranks, Q-Q diagnostics, semi-synthetic workflow.
//! - [`io`] — CSV ingestion, table/report/SVG emission, run manifests.

pub mod data;
pub mod datagen;
pub mod error;
pub mod glm;
pub mod io;
pub mod resample;
pub mod sip;
pub mod streams;
pub mod study;

pub use data::{Dataset, IndexSet};
pub use error::{Error, Result};
pub use glm::{fit_logistic, log_likelihood, FitOptions, FitResult};
pub use resample::{
    draw_weights, resample_sips, summarize_draws, ResampleDraw, ResampleMode, ResampleSummary,
};
pub use sip::{enumerate_fit_family, sip_at_point, FitFamily, InfluenceTable, SipMode, SipResult};
pub use study::{qq_series, QqSeries, StudySummaryRow};
