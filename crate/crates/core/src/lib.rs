//! Exact symbolic algebra of Laurent spinors on the three-sphere.
//!
//! The crate is `no_std` and needs only `alloc`. Every quantity is exact:
//! coefficients live in [`scalar::Scalar`], sums of Gaussian rationals times
//! square roots of squarefree integers.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod enveloping;
pub mod error;
pub mod ghat;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod sphere;
pub mod spinor;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{GaussRational, Rational, Scalar};
