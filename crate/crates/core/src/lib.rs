//! Exact computations for tilting theory, Galois coverings and Hochschild
//! cohomology of finite-dimensional quiver algebras over the rationals.

pub mod error;
pub mod exactla;
pub mod algebra;
pub mod derived;
pub mod quiver;
pub mod rep;
pub mod tilt;
pub mod cover;
pub mod hh;

pub use error::{Error, Result};
