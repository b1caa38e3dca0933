//! Presentation complexes, the spine example and finite-quotient certificates.

pub mod permutation;
pub mod presentation;
pub mod spine;

pub use permutation::{group_order, pi1_certificate, search_certificate, CertificateChecks, Perm, Pi1Certificate};
pub use presentation::{presentation_complex, Letter, Presentation, PresentationJson, LOOP_EDGES};
pub use spine::{flag_spine_complex, spine_complex, spine_presentation};
