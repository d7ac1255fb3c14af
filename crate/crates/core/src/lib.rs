//! Computational engine for finite point-line geometries.
//!
//! A geometry is a finite set of points `0..n` together with a family of
//! lines, each a point set of size at least 2. A subspace is a point set
//! that contains every line it meets in two or more points; the span of a
//! set is the least subspace containing it. On top of this closure
//! operator the crate computes generating rank, independence witnesses,
//! chains of subspaces and their maximality, and, for the classical polar
//! spaces over small finite fields, polar rank and corank both
//! combinatorially and through the defining form.

pub mod budget;
pub mod chains;
pub mod error;
pub mod exchange;
pub mod gallery;
pub mod geometry;
pub mod gf;
pub mod natgeom;
pub mod pointset;
pub mod polar;
pub mod random;
pub mod rank;

pub use budget::Budget;
pub use error::{Error, Result};
pub use geometry::Geometry;
pub use pointset::PointSet;
