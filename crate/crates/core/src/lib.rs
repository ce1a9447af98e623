//! Exact divided differences and the equispaced-knot questions built on them.
//!
//! Everything is computed over arbitrary-precision rationals:
//!
//! * [`rational`] and [`poly`]: scalars, binomials, dense polynomials;
//! * [`func`]: functions evaluable exactly at rational points, optionally
//!   extended by zero outside `[0, 1]`;
//! * [`differences`]: divided differences (direct and tabulated), forward
//!   finite differences, their integral representation for polynomials and
//!   the identity linking them on `0, 1/n, ..., 1`;
//! * [`interp`]: the interpolant `Q_n` at those knots and its leading
//!   coefficient;
//! * [`lab`]: constraint systems, kernels, an exact simplex, and the
//!   averaging/reindexing probes.

pub mod differences;
pub mod error;
pub mod func;
pub mod interp;
pub mod lab;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use func::{FuncKind, FuncSpec, GridFunction};
pub use poly::Polynomial;
pub use rational::Rational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
