//! Builds the acyclic flag-no-squares spine and its alternating quotient.

use std::time::Instant;

use coxeter_davis::factory::{search_certificate, spine_complex, spine_presentation};
use coxeter_davis::simplicial::{homology, square_report};

fn main() {
    let start = Instant::now();
    let l = spine_complex();
    println!("f-vector {:?} ({:.1?})", l.f_vector(), start.elapsed());

    let h = homology(&l, true);
    println!("reduced homology trivial: {} ({:.1?})", h.is_trivial(), start.elapsed());

    let sq = square_report(&l);
    println!(
        "flag {} empty squares {} ({:.1?})",
        sq.is_flag,
        sq.empty_squares.len(),
        start.elapsed()
    );

    let cert = search_certificate(&spine_presentation(), 5).expect("a degree 5 quotient exists");
    println!("images {:?} order {} valid {} ({:.1?})", cert.images, cert.checks.image_order, cert.valid, start.elapsed());
}
