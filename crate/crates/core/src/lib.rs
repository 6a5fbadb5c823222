//! Exact supertropical algebra.
//!
//! Scalars live in the layered max-plus semifield over the rationals: zero,
//! tangible values and ghost values. On top of that the crate provides sparse
//! (Laurent) polynomials, essential parts and full closures, root sets,
//! univariate factorization with ghost factors, ghost-surpassing checks,
//! plane-curve geometry and a few function-semiring identities.
//!
//! ```
//! use supertrop::parse::parse;
//! use supertrop::factor::factor_minimal_ghosts_1d;
//!
//! let f = parse("x^4 + 4g*x^3 + 6g*x^2 + 5g*x + 3").unwrap();
//! let fact = factor_minimal_ghosts_1d(&f).unwrap();
//! assert_eq!(fact.to_string(), "(x^2 + 4g*x + 2)(x + -1)(x + 2)");
//! ```

pub mod error;
pub mod factor;
pub mod geometry2d;
pub mod identities;
pub mod lp;
pub mod parse;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod shape;

pub use error::{Error, Result};
pub use poly::{Exp, Polynomial};
pub use scalar::{Layer, Scalar, Tag, Q};
