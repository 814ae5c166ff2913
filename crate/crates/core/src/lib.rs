//! Statistical depth functions for fuzzy data.
//!
//! The crate is organised bottom-up:
//!
//! - [`fuzzy`]: fuzzy sets with compact convex levels on the line (exact,
//!   piecewise-linear levels) and in the plane (support functions sampled on
//!   a direction × α grid), with Minkowski arithmetic and linear maps.
//! - [`metrics`]: the Hausdorff-based `d_r`, the support-function `ρ_r` and
//!   the mid/spread-weighted `d_{r,θ}` distances.
//! - [`empirical`]: finitely supported fuzzy random variables, weighted
//!   medians and MAD, and sign-flip symmetric samples.
//! - [`depth`]: projection depth and the four L^r-type depths.
//! - [`properties`]: checkers for the depth axioms and the expected verdict
//!   table, plus seeded sample generators in [`sampling`].

// `!(x > 0.0)` style guards reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod depth;
pub mod empirical;
pub mod error;
pub mod fuzzy;
pub mod metrics;
pub mod properties;
mod pwl;
pub mod sampling;

pub use depth::{
    depth_table, location_depth, location_raised_depth, natural_depth, natural_raised_depth,
    outlyingness, projection_depth, DepthConfig, DepthReport, MadZeroPolicy, Method,
};
pub use empirical::{
    sign_flip_symmetric_frv, weighted_mad, weighted_median, EmpiricalFrv, MedianInterval,
    Perturbation,
};
pub use error::{Error, Result};
pub use fuzzy::{
    make_trapezoid, DirectionGrid, FuzzySet, Interval, Level, LinearMap, PiecewiseLinear,
    PlaneGrid, Trapezoid,
};
pub use metrics::{hausdorff, metric_d_r, metric_d_r_theta, metric_rho_r, Metric};
