//! Dehn fillings of a triangulated torus along Farey slopes, and the growth
//! of the top homology of the quotient.

use coxeter_davis::models::{farey_slopes, farrell_h3_growth, farrell_quotient, torus_size};
use coxeter_davis::simplicial::homology;

fn main() {
    for n in 0..=4 {
        let slopes = farey_slopes(n);
        let q = farrell_quotient(&slopes);
        let h = homology(&q, false);
        let listed: Vec<String> = slopes.slopes().iter().map(|s| format!("{}/{}", s.p, s.q)).collect();
        println!(
            "{n} slopes {listed:?}: grid {}, f={:?}, b=({}, {}, {}, {}) H1 torsion {:?}",
            torus_size(&slopes),
            q.f_vector(),
            h.betti(0),
            h.betti(1),
            h.betti(2),
            h.betti(3),
            h.torsion(1),
        );
    }
    println!("rank H3 for 1..=6 slopes: {:?}", farrell_h3_growth(6));
}
