//! Coxeter matrices and systems, nerves, finiteness and hyperbolicity tests,
//! and the right-angled word problem.

pub mod classification;
pub mod hyperbolic;
pub mod system;
pub mod word;

pub use classification::FiniteType;
pub use hyperbolic::{hyperbolicity, HyperbolicityReport, Z2Witness};
pub use system::{nerve, racg_from_flag, CoxeterJson, CoxeterMatrix, CoxeterSystem};
pub use word::{NormalForm, Word};
