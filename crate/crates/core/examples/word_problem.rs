//! ShortLex normal forms in the right-angled Coxeter group of a pentagon.

use coxeter_davis::coxeter::racg_from_flag;
use coxeter_davis::simplicial::SimplicialComplex;

fn main() {
    let pentagon =
        SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"], vec!["c", "d"], vec!["d", "e"], vec!["e", "a"]])
            .unwrap();
    let sys = racg_from_flag(&pentagon).unwrap();

    for text in ["ba", "abab", "acca", "cadbe", "bab", "ebcdce"] {
        let w = sys.parse_word(text).unwrap();
        let nf = sys.reduce(&w).unwrap();
        let descents = sys.labels(&sys.right_descents(&nf));
        println!("{text:<8} -> {:<8} length {} right descents {descents:?}", sys.format_word(&nf), nf.len());
    }

    let sizes: Vec<usize> = (0..=5).map(|r| sys.ball(r).unwrap().len()).collect();
    println!("ball sizes {sizes:?}");

    let w = sys.parse_word("cab").unwrap();
    let t = sys.generator_set(&["a", "b"]).unwrap();
    let rep = sys.min_coset_rep(&w, &t).unwrap();
    println!("minimal representative of cab<a,b> is {:?}", sys.format_word(&rep));
}
