//! Exact verification toolkit for higher Courant algebroids and their
//! transgression to Lie algebroids over the shifted tangent bundle.

// Structure constants are naturally indexed by several loop variables.
#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod courant;
pub mod error;
pub mod leibniz;
pub mod liealgebroid;
pub mod oddpath;
pub mod sample;
pub mod symcore;
pub mod transgression;

pub use error::{Error, Result};
