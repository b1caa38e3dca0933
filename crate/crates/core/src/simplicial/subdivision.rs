use std::collections::HashMap;

use super::complex::SimplicialComplex;
use super::squares::square_report;
use crate::error::{Error, Result};

/// Label of the barycentre of a simplex given by its vertex labels.
pub fn barycenter_label<S: AsRef<str>>(simplex: &[S]) -> String {
    let parts: Vec<&str> = simplex.iter().map(AsRef::as_ref).collect();
    format!("[{}]", parts.join(","))
}

/// Order complex of the face poset. Vertex `[a,b,...]` stands for the
/// barycentre of the simplex `{a,b,...}`; vertices follow the simplex order of
/// `k` (by dimension, then lexicographically).
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let mut position: HashMap<&Vec<usize>, usize> = HashMap::new();
    let mut labels = Vec::with_capacity(k.total_simplices());
    for s in k.all_simplices() {
        position.insert(s, labels.len());
        labels.push(barycenter_label(&k.simplex_labels(s)));
    }
    let mut chains = Vec::new();
    for top in k.maximal_simplices() {
        // a maximal flag of faces of `top` is an ordering of its vertices
        let mut order: Vec<usize> = top.clone();
        permutations(&mut order, 0, &mut |perm| {
            let mut chain = Vec::with_capacity(perm.len());
            let mut face: Vec<usize> = Vec::with_capacity(perm.len());
            for &v in perm {
                face.push(v);
                let mut sorted = face.clone();
                sorted.sort_unstable();
                chain.push(position[&sorted]);
            }
            chains.push(chain);
        });
    }
    SimplicialComplex::from_indexed(labels, chains)
}

fn permutations(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start + 1 >= items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}

/// Maximum number of rounds [`no_square_subdivision`] will run.
pub const MAX_NO_SQUARE_ROUNDS: usize = 4;

/// Subdivides a complex of dimension at most 2 until it is flag with no
/// induced 4-cycles.
///
/// One round splits every edge at its midpoint and every triangle `XYZ`
/// (midpoints `A` on `XY`, `B` on `YZ`, `C` on `ZX`) into ten triangles around
/// three interior vertices `P`, `Q`, `R` sitting near `X`, `Y`, `Z`:
/// `XAP XPC APQ AQY YQB BQR BRZ ZRC CRP PQR`.
///
/// After a round, corners have link paths of length 2 inside each triangle,
/// edge midpoints length 3 and interior vertices are 5-valent. Rounds repeat
/// until the square checker passes.
pub fn no_square_subdivision(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.dim() > 2 {
        return Err(Error::DimensionTooLarge(k.dim()));
    }
    let mut current = k.clone();
    for _ in 0..=MAX_NO_SQUARE_ROUNDS {
        if square_report(&current).flag_no_squares() {
            return Ok(current);
        }
        current = subdivide_round(&current);
    }
    Err(Error::SubdivisionFailed(MAX_NO_SQUARE_ROUNDS))
}

/// One round of the midpoint/ten-triangle scheme.
pub fn subdivide_round(k: &SimplicialComplex) -> SimplicialComplex {
    let mut labels: Vec<String> = k.vertex_labels().to_vec();
    let mut index: HashMap<String, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let mut vertex = |label: String, labels: &mut Vec<String>| -> usize {
        *index.entry(label.clone()).or_insert_with(|| {
            labels.push(label);
            labels.len() - 1
        })
    };
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut midpoint = HashMap::new();
    for e in k.simplices(1) {
        let m = vertex(format!("m{}", barycenter_label(&k.simplex_labels(e))), &mut labels);
        midpoint.insert((e[0], e[1]), m);
        cells.push(vec![e[0], m]);
        cells.push(vec![m, e[1]]);
    }
    for v in 0..k.num_vertices() {
        cells.push(vec![v]);
    }
    for t in k.simplices(2) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let tri = barycenter_label(&k.simplex_labels(t));
        let a = midpoint[&(x, y)];
        let b = midpoint[&(y, z)];
        let c = midpoint[&(x, z)];
        let p = vertex(format!("p{tri}@{}", k.label(x)), &mut labels);
        let q = vertex(format!("p{tri}@{}", k.label(y)), &mut labels);
        let r = vertex(format!("p{tri}@{}", k.label(z)), &mut labels);
        cells.extend([
            vec![x, a, p],
            vec![x, p, c],
            vec![a, p, q],
            vec![a, q, y],
            vec![y, q, b],
            vec![b, q, r],
            vec![b, r, z],
            vec![z, r, c],
            vec![c, r, p],
            vec![p, q, r],
        ]);
    }
    SimplicialComplex::from_indexed(labels, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::homology::homology;

    fn complex(sets: &[&[&str]]) -> SimplicialComplex {
        let v: Vec<Vec<&str>> = sets.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::faces_closure(&v).unwrap()
    }

    #[test]
    fn barycentric_counts() {
        let point = complex(&[&["a"]]);
        assert_eq!(barycentric_subdivision(&point).f_vector(), vec![1]);
        let tri = complex(&[&["a", "b", "c"]]);
        let b = barycentric_subdivision(&tri);
        assert_eq!(b.f_vector(), vec![7, 12, 6]);
        assert!(b.index_of("[a,b,c]").is_some());
        assert!(square_report(&b).is_flag);
    }

    #[test]
    fn ten_triangle_round_counts() {
        let tri = complex(&[&["a", "b", "c"]]);
        let s = subdivide_round(&tri);
        assert_eq!(s.f_vector(), vec![9, 18, 10]);
        assert_eq!(s.euler_characteristic(), 1);
        assert!(square_report(&s).flag_no_squares());
    }

    #[test]
    fn four_cycle_loses_its_square() {
        let c4 = complex(&[&["1", "2"], &["2", "3"], &["3", "4"], &["4", "1"]]);
        let out = no_square_subdivision(&c4).unwrap();
        let r = square_report(&out);
        assert!(r.flag_no_squares());
        assert_eq!(homology(&out, true), homology(&c4, true));
    }

    #[test]
    fn rejects_three_dimensional_input() {
        let tet = complex(&[&["a", "b", "c", "d"]]);
        assert!(matches!(no_square_subdivision(&tet), Err(Error::DimensionTooLarge(3))));
    }
}
