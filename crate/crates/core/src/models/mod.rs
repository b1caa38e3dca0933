//! Finite stand-ins for classifying spaces with virtually cyclic
//! stabilisers, and the dimension report for right-angled Coxeter groups
//! with acyclic nerves.

mod farrell;
mod theorem;
mod wedge;

pub use farrell::{farey_slopes, farrell_h3_growth, farrell_quotient, solid_torus, torus, torus_size, Slope, SlopeSet, CORE_VERTICES};
pub use theorem::{main_theorem_report, Dimension, GdAccounting, HypothesisCheck, MainTheoremReport, NerveStats};
pub use wedge::{dihedral_pairs, wedge_model, DihedralPairSet};
