//! Combinatorial machinery for totally hyperbolic group actions on compact
//! surfaces and 3-manifolds: labeled cell complexes, exact rational fan
//! vectors, one-parameter flow analysis, sphere-insertion surgery and a
//! realizability search.
//!
//! All geometry is decided over exact rationals; see [`scalar`]. The default
//! scalar is pinned by the aliases below.

pub mod complex;
pub mod fan;
pub mod fansearch;
pub mod flow;
pub mod io;
pub mod linalg;
pub mod moves;
pub mod rng;
pub mod scalar;
pub mod sphere2;

pub use complex::cell3::CellComplex3;
pub use complex::involution::{Involution3, SurfaceInvolution};
pub use complex::{SurfaceComplex, SurfaceKind};

/// Default exact scalar: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Fan over the default scalar.
pub type Fan = fan::Fan<Rat>;
/// Fan vector over the default scalar.
pub type FanVector = fan::FanVector<Rat>;
/// Simplicial cone over the default scalar.
pub type Cone = fan::Cone<Rat>;
/// Generic flow direction over the default scalar.
pub type Direction = flow::Direction<Rat>;

/// Convenience constructor for the default scalar.
pub fn rat(n: i64, d: i64) -> Rat {
    scalar::Scalar::from_ratio(n, d)
}
