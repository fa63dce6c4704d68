//! Exact arithmetic kernel: linear forms in the torus parameters, virtual
//! characters, expanded polynomials, and factored rational functions.
//!
//! Everything is arbitrary-precision and immutable after construction; there
//! is no floating point anywhere in the crate.

mod character;
mod linear_form;
mod params;
mod polynomial;
mod rational;

pub use character::VirtualCharacter;
pub use linear_form::{param_names, LinearForm};
pub use params::ParamChoice;
pub use polynomial::Polynomial;
pub use rational::{sum_to_constant, FactoredRational, SumMode};
