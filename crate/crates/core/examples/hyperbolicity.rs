//! Gromov hyperbolicity of right-angled Coxeter groups via empty squares.

use coxeter_davis::coxeter::{hyperbolicity, racg_from_flag};
use coxeter_davis::simplicial::SimplicialComplex;

fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<String>> = (0..n).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % n)]).collect();
    SimplicialComplex::faces_closure(&edges).unwrap()
}

fn main() {
    for n in 4..=7 {
        let sys = racg_from_flag(&cycle(n)).unwrap();
        let rep = hyperbolicity(&sys);
        print!("{n}-cycle: hyperbolic {:?}, {} empty squares", rep.hyperbolic, rep.empty_squares.len());
        if let Some(w) = &rep.z2_witness {
            print!(", Z^2 witness {}", serde_json::to_string(w).unwrap());
        }
        println!();
    }
}
