//! Graded local cohomology of monomial quotients of pointed affine semigroup
//! rings, supported at the graded maximal ideal.
//!
//! The pipeline runs bottom-up:
//!
//! * [`exact`]: integer linear algebra (Smith/Hermite forms, kernels, ranks).
//! * [`polyhedra`]: cones, face lattices, transverse sections, hyperplane
//!   arrangements.
//! * [`semigroup`]: membership in an affine semigroup and its localizations,
//!   Hilbert bases, holes.
//! * [`degrees`]: degree sets, degree pairs and overlap classes of every
//!   localization of a module.
//! * [`degspace`]: grains of the degree space and their generating functions.
//! * [`cohomology`]: graded pieces of the Ishida complex, Hilbert series of
//!   local cohomology and Cohen–Macaulay tests.

pub mod cohomology;
pub mod degrees;
pub mod degspace;
pub mod error;
pub mod exact;
pub mod polyhedra;
pub mod semigroup;

pub use error::{Error, Result};
pub use exact::Vector;
