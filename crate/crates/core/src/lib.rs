//! Polyomino ideals: inner 2-minors, Gröbner bases under the eight vertex
//! orders, combinatorial quadraticity and primality criteria, and primality
//! decided by saturation.
//!
//! Vertices and cells live in ℕ² with 0-based coordinates; a cell is named by
//! its lower-left corner. Every polyomino is translated so that its bounding
//! box starts at the origin.

pub mod conditions;
pub mod families;
pub mod gbasis;
pub mod geometry;
pub mod io;
pub mod lattice;
pub mod orders;

pub use geometry::{Cell, Interval, Polyomino, Vertex};
