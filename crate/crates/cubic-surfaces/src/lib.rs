//! Exact-arithmetic construction of smooth cubic surfaces in P^3: the 27
//! lines, the 45 tritangent planes, Eckardt points, the stratification into
//! Eckardt families, and the projective stabilizer group of every family.
//!
//! Everything is computed over Q or over an explicit algebraic number field
//! Q(w); no floating point is used anywhere.  See the `examples/` directory
//! for runnable tours of each capability and the `cubics` binary for the
//! command-line interface.

pub mod error;
pub mod field;
pub mod geometry;
pub mod lines27;

pub use error::{Error, Result};
