//! Projective metrics on convex domains.
//!
//! The crate computes the Hilbert metric of bounded convex bodies, the
//! Cayley-Klein distances and angles induced by a quadric absolute, and
//! executable versions of the classical projective constructions around
//! them: harmonic conjugates by complete quadrangles, coordinates on a line
//! by iterated bisection, the perspective proof of the triangle inequality
//! and the flat-boundary equality cases.
//!
//! Most algorithms are generic over [`scalar::Field`], so they run both in
//! `f64` and in exact rational arithmetic.

pub mod cayley_klein;
pub mod convex;
pub mod error;
pub mod frame;
pub mod hilbert;
pub mod linalg;
pub mod order;
pub mod point;
pub mod projective;
pub mod scalar;

pub use convex::{chord, is_nested, Chord, ConvexBody, ConvexDomain, Polytope, Position};
pub use error::{GeometryError, Result};
pub use hilbert::{hilbert_distance, HilbertConfig};
pub use point::Point;
pub use projective::{cross_ratio, ProjectivePoint, ProjectiveScalar};
pub use scalar::{Field, Rational, RealField};
