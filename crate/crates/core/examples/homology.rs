//! Integral homology of a few small complexes, including a torsion example.

use coxeter_davis::simplicial::{barycentric_subdivision, cone, homology, relative_homology, SimplicialComplex};

fn projective_plane() -> SimplicialComplex {
    let faces: [[u8; 3]; 10] = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
        [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
    ];
    let faces: Vec<Vec<String>> = faces.iter().map(|f| f.iter().map(|v| format!("p{v}")).collect()).collect();
    SimplicialComplex::faces_closure(&faces).unwrap()
}

fn describe(name: &str, k: &SimplicialComplex) {
    let h = homology(k, false);
    let groups: Vec<String> = (0..=k.dim())
        .map(|d| {
            let mut parts = vec![];
            if h.betti(d) > 0 {
                parts.push(format!("Z^{}", h.betti(d)));
            }
            parts.extend(h.torsion(d).iter().map(|t| format!("Z/{t}")));
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        })
        .collect();
    println!("{name:<20} f={:?}  H_* = [{}]", k.f_vector(), groups.join(", "));
}

fn main() {
    let circle = SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
    describe("circle", &circle);
    describe("cone on circle", &cone(&circle, "apex").unwrap());
    describe("subdivided circle", &barycentric_subdivision(&circle));
    describe("projective plane", &projective_plane());

    let edge = SimplicialComplex::faces_closure(&[vec!["a", "b"]]).unwrap();
    let rel = relative_homology(&circle, &edge).unwrap();
    println!("H_1(circle, edge) has rank {}", rel.betti(1));
}
