use super::presentation::{presentation_complex, Presentation};
use crate::simplicial::{barycentric_subdivision, no_square_subdivision, SimplicialComplex};

/// `⟨x, y | x⁵(xy)⁻², y³(xy)⁻²⟩`, written with inverses as capitals. The
/// second relator freely reduces to `yyXYX`.
pub fn spine_presentation() -> Presentation {
    Presentation::new(&["x", "y"], &["xxxxxYXYX", "yyyYXYX"]).expect("fixed presentation is valid")
}

/// Barycentric subdivision of the presentation complex: flag, but not yet
/// free of empty squares.
pub fn flag_spine_complex() -> SimplicialComplex {
    barycentric_subdivision(&presentation_complex(&spine_presentation()))
}

/// The flag-no-squares acyclic 2-complex used as a nerve.
pub fn spine_complex() -> SimplicialComplex {
    no_square_subdivision(&flag_spine_complex()).expect("spine subdivision converges")
}
