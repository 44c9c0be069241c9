//! Numerical laboratory for measures of origin-symmetric star bodies and
//! their central hyperplane sections under even densities.

pub mod error;

pub use error::{Error, Result};
