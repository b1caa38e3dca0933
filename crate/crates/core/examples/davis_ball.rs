//! A ball in the Davis complex of a right-angled Coxeter group, with its
//! singular set and the union of fixed sets.

use coxeter_davis::coxeter::racg_from_flag;
use coxeter_davis::davis::{chamber, davis_ball, dim_of, fixed_subcomplex, hash_union_sharp, singular_subcomplex};
use coxeter_davis::simplicial::{homology, SimplicialComplex};

fn main() {
    let arc = SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"]]).unwrap();
    let k = chamber(&arc).unwrap();
    println!("chamber f={:?} with {} mirrors", k.k.f_vector(), k.mirrors.len());

    let sys = racg_from_flag(&arc).unwrap();
    for r in 0..=3 {
        let ball = davis_ball(&sys, r).unwrap();
        let real = ball.realization().unwrap();
        let sing = singular_subcomplex(&ball).unwrap();
        let sharp = hash_union_sharp(&ball).unwrap();
        println!(
            "r={r}: {} chambers, {} cosets, realization f={:?} acyclic {}, singular dim {}, sharp f={:?}",
            ball.chambers().len(),
            ball.coset_count(),
            real.f_vector(),
            homology(&real, true).is_trivial(),
            dim_of(&sing),
            sharp.f_vector(),
        );
    }

    let ball = davis_ball(&sys, 2).unwrap();
    let g = sys.parse_word("bab").unwrap();
    let fixed = fixed_subcomplex(&ball, &g).unwrap();
    println!("fixed set of bab: f={:?}", fixed.f_vector());
    let json = serde_json::to_string(&ball.to_json().unwrap()).unwrap();
    println!("ball json is {} bytes", json.len());
}
