//! Closed-form Lie group elements from trace invariants.
//!
//! The characteristic polynomial of an algebra element `A` has coefficients
//! `phi_j` that are Bell polynomials in `tr A^k`. Its roots give
//! eigenprojectors, and those give `e^A` (or any other matrix function) as a
//! finite sum. The crate carries this through for Lorentz, Poincare, Galilei
//! and SU(3) and checks every closed form against a plain series
//! exponential.
//!
//! ```
//! use lieclosed::groups::{lorentz_exp_closed, LorentzParams};
//! use lieclosed::oracle::{series_exp, DEFAULT_SERIES_TOL};
//!
//! let p = LorentzParams { omega: [0.3, -0.2, 0.5], zeta: [0.1, 0.7, 0.0] };
//! let closed = lorentz_exp_closed(&p).unwrap();
//! let series = series_exp(&p.algebra(), DEFAULT_SERIES_TOL).unwrap();
//! assert!((closed - series.re()).amax() < 1e-12);
//! ```

pub mod bell;
pub mod chern;
pub mod error;
pub mod groups;
pub mod invariants;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod symfun;
pub mod zmethod;

pub use error::{Error, Result};
pub use matrix::{RealMatrix, SquareMatrix};
pub use scalar::{Complex, ExactRational, FieldScalar, Scalar};
