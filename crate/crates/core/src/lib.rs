//! Potential functions of the exterior of a convex quadrilateral.
//!
//! The unbounded complement of a convex quadrilateral is mapped from the
//! upper half plane by an exterior Schwarz-Christoffel map with a double
//! pole. Composing with an elliptic integral sends the exterior onto a
//! rectangle, where the potential that is 0 on one side and 1 on the
//! opposite side is just the real coordinate. Its value at infinity and
//! its level curves follow from there.

// negated comparisons are how NaN inputs get rejected; the quadrature
// tables keep their published digits
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod accessory;
pub mod cases;
pub mod cli;
pub mod disk_exterior;
pub mod elliptic;
pub mod error;
pub mod potential;
pub mod quad_geometry;
pub mod quadrature;
pub mod scmap;

pub use error::{Error, Result};
pub use potential::{trace_level, u_infinity, LevelCurve, PotentialSolution};
pub use quad_geometry::Quadrilateral;
pub use scmap::ScMap;
