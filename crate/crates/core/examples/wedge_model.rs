//! Wedges of an acyclic complex with circles, and the dihedral pairs of the
//! associated right-angled group.

use coxeter_davis::coxeter::racg_from_flag;
use coxeter_davis::factory::{presentation_complex, spine_presentation};
use coxeter_davis::models::{dihedral_pairs, wedge_model};
use coxeter_davis::simplicial::{barycentric_subdivision, homology};

fn main() {
    let l = presentation_complex(&spine_presentation());
    println!("presentation complex f={:?} acyclic {}", l.f_vector(), homology(&l, true).is_trivial());
    for k in [0, 1, 3] {
        let w = wedge_model(&l, k).unwrap();
        let h = homology(&w, true);
        println!("  wedge with {k} circles: f={:?} b1={} b2={}", w.f_vector(), h.betti(1), h.betti(2));
    }

    let flag = barycentric_subdivision(&wedge_model(&l, 1).unwrap());
    let pairs = dihedral_pairs(&racg_from_flag(&flag).unwrap()).unwrap();
    println!("after subdivision: {} generators, {} infinite dihedral pairs", flag.num_vertices(), pairs.pairs.len());
}
