//! Exact computations for glued stability conditions on Hirzebruch surfaces.
//!
//! ```
//! use hirzebruch::gluing::{z_glued, GluingParams};
//! use hirzebruch::ktheory::{ChernVector, Surface};
//!
//! let g = GluingParams::standard_pair(Surface::new(2).unwrap());
//! let z = z_glued(&g, &ChernVector::from_ints(0, 0, 0, 1));
//! assert_eq!(z.to_string(), "-2+0i");
//! ```

pub mod adjoints;
pub mod arith;
pub mod divisorial;
pub mod error;
pub mod figure;
pub mod gluing;
pub mod ktheory;
pub mod moduli;
pub mod sampling;
pub mod selfcheck;

pub use arith::{GaussianRational, HalfPlanePoint, Rational, Sign};
pub use error::{Error, Result};
