//! Brute-force linear algebra over `F_p`, used to check the combinatorics.

pub mod fp;
pub mod rep;

pub use fp::Matrix;
pub use rep::{Morphism, Oracle, Rep};

/// Default characteristic.
pub const DEFAULT_PRIME: u64 = 101;
