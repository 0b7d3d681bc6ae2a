//! Dense model order reduction for linear time-invariant systems.
//!
//! The crate decomposes standard, descriptor and second-order LTI systems
//! into stable, antistable and algebraic parts with spectral projection
//! methods (matrix sign and disk functions), reduces the parts with
//! balancing-based, modal and Hankel-norm methods, and assembles parametric
//! reduced models by transfer-function interpolation or piecewise
//! projection.
//!
//! Module map:
//! - [`matrix`]: dense kernels (LU, pivoted QR, SVD) behind a fixed contract
//! - [`lti`]: system classes, validation, transfer evaluation
//! - [`io`]: Matrix Market files and JSON system manifests
//! - [`options`]: nested option trees with a canonical key registry, and
//!   result metadata trees
//! - [`spectral`]: matrix sign function, inverse-free disk function,
//!   subspace extraction
//! - [`matfun`]: matrix exponential, square root and logarithm
//! - [`equations`]: Lyapunov/Stein/Sylvester/Riccati solvers and limited
//!   Gramians
//! - [`decompose`]: additive system decomposition and recombination
//! - [`reduction`]: first-order reduction methods (balancing family, modal
//!   truncation, Hankel-norm approximation)
//! - [`second_order`]: structure-preserving second-order balanced truncation
//! - [`parametric`]: parametric reduced models (interpolatory and piecewise)
//! - [`evaluation`]: frequency/time-domain evaluation

pub mod decompose;
pub mod equations;
pub mod error;
pub mod evaluation;
pub mod io;
pub mod lti;
pub mod matfun;
pub mod matrix;
pub mod options;
pub mod parametric;
pub mod reduction;
pub mod second_order;
pub mod spectral;

pub use error::{Error, Result};
pub use matrix::Matrix;
