//! Exact engine for sl(2,ℝ)-invariant generalized functions supported on the
//! nilpotent cone, with values in the irreducible representations `V_n`.
//!
//! The symbolic side ([`sl2`], [`character`], [`transversal`], [`solver`])
//! works over ℚ and never rounds. The [`oracle`] module is the only place
//! floating point appears; it checks the symbolic statements by quadrature
//! against the moment-map definition of the half-cone measure.

pub mod character;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod sl2;
pub mod solver;
pub mod transversal;

pub use character::Character;
pub use error::{Error, Result};
pub use matrix::EndMatrix;
pub use rational::Rational;
pub use sl2::Irrep;
pub use solver::{CasimirPolynomial, GlobalAnswer, GlobalQuery};
pub use transversal::TransversalDist;
