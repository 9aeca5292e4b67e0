//! Planar polyline drawings of colored acyclic graphs on colored point sets.
//!
//! The pipeline builds a two-page topological book embedding whose spine
//! vertex colors follow the point set's x-order, then realizes it on the
//! points with at most `2h + 1` bends per edge, `h` being the edge's number
//! of spine crossings.

pub mod bookembed;
pub mod error;
pub mod exact;
pub mod instances;
pub mod model;
pub mod multicolor;
pub mod realizer;
pub mod report;
pub mod twocolor;
pub mod verify;

pub use error::{Error, Result};
