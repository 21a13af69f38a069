//! Witness sets in simple and monotone polygons.
//!
//! A witness set is a set of points in a polygon whose visibility regions are pairwise
//! disjoint. The crate computes visibility regions exactly over rationals, builds the
//! visibility intersection graph, and solves the discrete and continuous problems.

pub mod cover;
pub mod discretizer;
pub mod error;
pub mod geometry;
pub mod gen;
pub mod io;
pub mod mis;
pub mod monotone;
pub mod region_graph;
pub mod solve;
pub mod string_model;
pub mod oracle;
pub mod visibility;

pub use error::{Error, Result};
