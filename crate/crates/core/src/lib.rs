//! Exact construction of the honeycomb ("graphene") vertex set from the A2
//! root and weight lattices and from projected Weyl orbits of G2, A3, B3 and
//! C3, together with colourings mod `m` and lattice refinement.
//!
//! All geometry is exact: coordinates are integers or `Ratio<i64>` in the
//! ω-basis and the metric is the Gram matrix of that basis. Floating point
//! appears only in [`io::embed`] for drawing.

pub mod affine;
pub mod algebra;
pub mod colouring;
pub mod error;
pub mod exact;
pub mod graphene;
pub mod io;
pub mod lattice;
pub mod projection;
pub mod refinement;
pub mod verify;

pub use error::{Error, Result};
pub use exact::Rational;
