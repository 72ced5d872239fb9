//! Graded free modules, degree-checked maps, subquotient modules and their
//! homological algebra.

mod map;
mod module;

pub use map::{GradedFree, GradedMap};
pub use module::{minimalize, Resolution, Subquotient, GLOBAL_DIMENSION};
