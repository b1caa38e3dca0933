//! End-to-end certification for the spine: hypotheses, predicted dimensions
//! and the Davis-complex accounting. Pass `--raw` to run on the presentation
//! complex before the square-removing subdivision.

use coxeter_davis::factory::{flag_spine_complex, search_certificate, spine_complex, spine_presentation};
use coxeter_davis::models::main_theorem_report;

fn main() {
    let raw = std::env::args().any(|a| a == "--raw");
    let l = if raw { flag_spine_complex() } else { spine_complex() };
    let cert = search_certificate(&spine_presentation(), 5).expect("certificate");
    let report = main_theorem_report(&l, &cert);

    for h in &report.hypotheses {
        println!("{:<16} {} {}", h.name, if h.holds { "holds" } else { "fails" }, h.detail);
    }
    println!("empty squares {}", report.nerve.empty_squares);
    match report.predictions() {
        Some((cd, gd)) => println!("cd = {cd}, gd = {gd}"),
        None => println!("hypotheses fail: {:?}", report.failed),
    }
    println!("{}", serde_json::to_string_pretty(&report.gd_accounting).unwrap());
}
