// Negated comparisons like `!(x > 0.0)` are domain guards that also reject
// NaN; coefficient literals keep their full published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

//! Numerical engine for Ramanujan's reciprocal integrals.
//!
//! Evaluates the three families of oscillatory integrals
//! (`cos/sin(pi n x^2)` against `1/cosh`, `1/(1+2cosh)`, and Bose-type
//! denominators) by mutually independent routes - direct phase-aware
//! quadrature and Meijer G-function series - and checks the reciprocity
//! theorems, the G-sum identities, and the printed closed-form values
//! against each other.

pub mod error;
pub mod gamma;
pub mod laplace;
pub mod meijer;
pub mod quadrature;
pub mod result;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use result::{EvaluationResult, Method, Work};
