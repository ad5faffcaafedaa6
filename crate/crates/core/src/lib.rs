//! Metrics and pseudometrics on finite digital images.
//!
//! A digital image is a finite subset of `Z^n` viewed as a graph under `c_u`
//! adjacency. This crate computes, exactly:
//!
//! * ℓp and shortest-path distances between points, and set diameters;
//! * the Hausdorff metric over ℓp and over shortest paths in an ambient image;
//! * the diameter-difference and Euler-characteristic pseudometrics, and
//!   positive weighted sums of all of the above;
//! * digital continuity of explicit maps and the metric of continuity, by an
//!   exact threshold search over list homomorphisms.
//!
//! ```
//! use digimetric::{hausdorff_lp, shapes};
//!
//! let (a, b) = shapes::rect_and_c(5, 1).unwrap();
//! let h = hausdorff_lp(a.points(), b.points(), 1.0).unwrap();
//! assert_eq!(h.value.to_string(), "1");
//! ```

pub mod continuity;
pub mod distance;
pub mod error;
pub mod euler;
pub mod format;
pub mod hausdorff;
pub mod lattice;
pub mod metrics;
pub mod pseudometric;
pub mod shapes;
pub mod verify;

pub use continuity::{
    continuity_metric, feasible_at_threshold, is_continuous, one_sided_displacement,
    ContinuityMetricResult, Displacement, PointMap, DEFAULT_BUDGET,
};
pub use distance::{ExtendedDistance, LpExponent};
pub use error::{Error, Result};
pub use euler::{euler_characteristic, euler_diff};
pub use hausdorff::{hausdorff_lp, hausdorff_path, HausdorffResult};
pub use lattice::{cu_adjacent, DigitalImage, LatticePoint};
pub use metrics::{diam_diff, diameter, lp_distance, path_distance, PointMetric};
pub use pseudometric::{eval_pseudometric, PseudometricSpec};
