//! Closed-form bounds on the number of segments of a constrained covering path.

pub mod literature;
pub mod lower;
pub mod upper;

pub use literature::{literature_bounds, LiteratureBounds};
pub use lower::{
    capacity, lower_3d, lower_cube, lower_kd, lower_min_h, lower_relaxed, CapacityModel, LowerBoundBreakdown, Parity,
};
pub use upper::{
    best_upper, jmax, jmax_scan, planar_upper, upper_3d, upper_3d_summation, upper_kd, Branch, Summation,
    UpperBoundBreakdown, UpperMethod,
};
