//! Lower bounds on the vertex and edge isoperimetric numbers of random
//! `d`-regular graphs obtained from the first moment method, together with
//! the machinery that checks them.
//!
//! * [`bounds`] evaluates the exponent functions, locates the roots that
//!   define the bounds `A_d(u)` and `Â_d(u)`, and provides the closed-form
//!   asymptotic and spectral reference bounds.
//! * [`exact`] computes the underlying expectations as exact big rationals.
//! * [`pairing`] samples and enumerates the pairing (configuration) model and
//!   measures boundaries of vertex subsets exhaustively.
//! * [`report`] assembles tables, verification suites and simulation reports
//!   for the `isoperimetric` binary.
//!
//! ```
//! use isoperimetric::bounds::{vertex_bound_half, BoundQuery};
//!
//! let a3 = vertex_bound_half(3, 1e-12).unwrap();
//! assert!((a3 - 0.14420).abs() < 1e-4);
//! let q = BoundQuery::new(3, 0.5).unwrap();
//! let via_profile = isoperimetric::bounds::vertex_bound(&q).unwrap();
//! assert!((a3 - via_profile).abs() < 1e-9);
//! ```

pub mod bounds;
pub mod error;
pub mod exact;
pub mod pairing;
pub mod report;

pub use error::{Error, Result};
