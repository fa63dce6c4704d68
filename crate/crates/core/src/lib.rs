//! Exact equivariant-localization engine for Donaldson-Thomas invariants of
//! the projective three-space.
//!
//! Two pipelines share one arithmetic kernel:
//!
//! - the *quadratic* pipeline localizes with respect to the normalizer of
//!   the diagonal torus in SL_2, whose fixed couples and orientation data
//!   produce the Witt-ring-valued degrees `I~_2 = 10`, `I~_4 = 25`,
//!   `I~_6 = -50`, vanishing in odd lengths and breaking down (detectably)
//!   at length eight;
//! - the *classical* pipeline localizes with respect to the full diagonal
//!   torus and reproduces the integer degrees `I_1 = 20`, `I_2 = 150` of the
//!   MacMahon series `M(-q)^{-20}`.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! integer linear forms as torus weights, and factored rational functions
//! for the Euler classes. There is no floating point anywhere.

pub mod algebra;
pub mod error;
pub mod euler;
pub mod invariants;
pub mod partitions;
pub mod series;
pub mod suite;
pub mod vertex;

pub use error::{Error, Result};
