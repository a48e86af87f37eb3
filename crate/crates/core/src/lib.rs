//! Constructive chain from the E8 root lattice to helicoidal rod structures.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, quaternions, doubled-integer 8-vectors, `Q(√2)`.
//! * [`e8`]: shells of the E8 lattice, the quaternionic decomposition of the
//!   240 roots and the Hopf images of its ten 24-point subsets.
//! * [`map`] and [`torus`]: rotation-system maps, the torus maps `{6,3}_{b,c}`
//!   and the handle-cut / refine / dualize pipeline.
//! * [`polyhedra`]: the loaded polyhedra `{2^n·24}` with Q-edge matchings.
//! * [`polytope4d`]: voltage covers, the geometric `{240}`, F4 orbits.
//! * [`helicoid`]: screw axes, generating relations and rod geometry.
//! * [`minsurf`]: catenoid bifurcation, the associated family and the
//!   Weierstrass representation.
//! * [`io`]: run manifests and OBJ export.

// `!(x > 0.0)` guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod e8;
pub mod error;
pub mod exact;
pub mod helicoid;
pub mod io;
pub mod map;
pub mod minsurf;
pub mod polyhedra;
pub mod polytope4d;
pub mod torus;

pub use error::{Error, Result};
pub use exact::{QSqrt2, Quaternion, Rational, Vec8};

pub use io::{Check, RunManifest};
pub use map::CombinatorialMap;
