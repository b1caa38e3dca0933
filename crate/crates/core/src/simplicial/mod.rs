//! Finite simplicial complexes, subdivisions and exact integral homology.

pub mod complex;
pub mod homology;
pub mod snf;
pub mod squares;
pub mod subdivision;

pub use complex::{cone, wedge, ComplexJson, SimplicialComplex};
pub use homology::{homology, relative_homology, ChainComplex, HomologyGroup, HomologyResult};
pub use squares::{square_report, SquareReport};
pub use subdivision::{barycentric_subdivision, no_square_subdivision};
