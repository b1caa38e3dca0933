use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;

/// Flagness and induced 4-cycles of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareReport {
    pub is_flag: bool,
    /// A clique of the 1-skeleton spanning no simplex, all of whose proper
    /// subsets are simplices.
    pub flag_witness: Option<Vec<String>>,
    /// Induced 4-cycles `[a, b, c, d]` in cyclic order: consecutive vertices
    /// adjacent, neither `ac` nor `bd` an edge.
    pub empty_squares: Vec<[String; 4]>,
}

impl SquareReport {
    pub fn flag_no_squares(&self) -> bool {
        self.is_flag && self.empty_squares.is_empty()
    }
}

/// First minimal non-simplex clique, scanning simplices in order and
/// extending each by common neighbours.
pub fn flag_witness(k: &SimplicialComplex) -> Option<Vec<usize>> {
    let adj = k.adjacency();
    for s in k.all_simplices() {
        let first = s[0];
        for &v in &adj[first] {
            if s.contains(&v) || !s.iter().all(|&u| adj[u].contains(&v)) {
                continue;
            }
            let mut t = s.clone();
            t.push(v);
            t.sort_unstable();
            if k.contains(&t) {
                continue;
            }
            let facets_present = (0..t.len()).all(|i| {
                let mut f = t.clone();
                f.remove(i);
                k.contains(&f)
            });
            if facets_present {
                return Some(t);
            }
        }
    }
    None
}

/// All induced 4-cycles, each listed once as `[a, b, c, d]` with `a` the
/// smallest vertex and `b < d`.
pub fn induced_squares(k: &SimplicialComplex) -> Vec<[usize; 4]> {
    let adj = k.adjacency();
    // non-adjacent pairs (a, c) with a < c, mapped to their common neighbours
    let mut common: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (b, nb) in adj.iter().enumerate() {
        let nb: Vec<usize> = nb.iter().copied().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, c) = (nb[i], nb[j]);
                if !adj[a].contains(&c) {
                    common.entry((a, c)).or_default().push(b);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for ((a, c), mids) in common {
        for i in 0..mids.len() {
            for j in i + 1..mids.len() {
                let (b, d) = (mids[i], mids[j]);
                if !adj[b].contains(&d) {
                    out.insert(canonical_square([a, b, c, d]));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn canonical_square(q: [usize; 4]) -> [usize; 4] {
    let start = (0..4).min_by_key(|&i| q[i]).unwrap();
    let r = [q[start], q[(start + 1) % 4], q[(start + 2) % 4], q[(start + 3) % 4]];
    if r[1] < r[3] {
        r
    } else {
        [r[0], r[3], r[2], r[1]]
    }
}

pub fn square_report(k: &SimplicialComplex) -> SquareReport {
    let witness = flag_witness(k);
    let squares = induced_squares(k);
    SquareReport {
        is_flag: witness.is_none(),
        flag_witness: witness.map(|w| k.simplex_labels(&w)),
        empty_squares: squares
            .into_iter()
            .map(|q| q.map(|v| k.label(v).to_string()))
            .collect(),
    }
}
