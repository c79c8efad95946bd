pub mod bounds;
pub mod cli;
pub mod code;
pub mod construct;
pub mod eaqecc;
pub mod gf4linalg;
pub mod hull;
pub mod matrix_file;
mod packed;
pub mod search;

pub use code::{CodeError, LinearCode, WeightDistribution};
pub use gf4linalg::{Gf4, Gf4Matrix};
pub use hull::{hull_report, HullClass, HullReport};
