//! Nerves of general Coxeter systems and recognition of finite special
//! subgroups.

use coxeter_davis::coxeter::{hyperbolicity, nerve, CoxeterMatrix, CoxeterSystem};

fn system(names: &[&str], entries: &[((usize, usize), u32)]) -> CoxeterSystem {
    let gens = names.iter().map(|s| s.to_string()).collect();
    CoxeterSystem::new(CoxeterMatrix::new(gens, entries.iter().copied()).unwrap())
}

fn main() {
    let examples = [
        ("H3", system(&["r", "s", "t"], &[((0, 1), 5), ((1, 2), 3), ((0, 2), 2)])),
        ("affine A2", system(&["r", "s", "t"], &[((0, 1), 3), ((1, 2), 3), ((0, 2), 3)])),
        ("B3", system(&["r", "s", "t"], &[((0, 1), 4), ((1, 2), 3), ((0, 2), 2)])),
        ("free product", system(&["r", "s", "t"], &[])),
    ];
    for (name, sys) in &examples {
        let all: Vec<usize> = (0..sys.rank()).collect();
        let types = sys.spherical_type(&all);
        let order: Option<u128> = types.as_ref().map(|ts| ts.iter().map(|t| t.order()).product());
        let l = nerve(sys);
        println!(
            "{name:<13} whole group finite {:?} order {order:?}, nerve f={:?}, right-angled {}, hyperbolic {:?}",
            types.map(|ts| ts.iter().map(ToString::to_string).collect::<Vec<_>>()),
            l.f_vector(),
            sys.is_right_angled(),
            hyperbolicity(sys).hyperbolic,
        );
    }
}
