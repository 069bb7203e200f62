//! Bounds, constructions and exact checks for minimum-link covering paths of
//! `n1 x ... x nk` lattice grids (the generalized nine dots puzzle, solved
//! inside the bounding box without revisits or crossings).
//!
//! Bound formulas are generic over [`scalar::Int`]; the aliases below fix
//! the scalar for everyday use.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod path;
pub mod report;
pub mod scalar;
pub mod solver;
pub mod spiral;
pub mod svg;

pub use error::{Error, Result};
pub use grid::{GridPoint, GridSpec, NormalizedSpec, Segment};
pub use path::{path_length, verify_path, CoveringPath, ExactLength, VerificationReport, Violation};
pub use report::{run_bounds_report, sweep_table, BoundsRange, ReportFormat};
pub use solver::{solve_restricted, SolveResult};
pub use spiral::{gen_pure_spiral, gen_saving_spiral_3d, SpiralMode, SpiralPlan};
pub use svg::render_svg;

pub type UpperBound = bounds::UpperBoundBreakdown<i64>;
pub type WideUpperBound = bounds::UpperBoundBreakdown<i128>;
pub type LowerBound = bounds::LowerBoundBreakdown<i64>;
pub type WideLowerBound = bounds::LowerBoundBreakdown<i128>;
pub type Literature = bounds::LiteratureBounds<i64>;
