use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::simplicial::squares::flag_witness;
use crate::simplicial::subdivision::barycenter_label;
use crate::simplicial::{barycentric_subdivision, cone, SimplicialComplex};

/// Label of the cone point of a chamber.
pub const CHAMBER_APEX: &str = "∅";

/// The fundamental chamber `K = cone(bary L)` with its mirrors.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub k: SimplicialComplex,
    /// `K_s`: the full subcomplex of `bary L` on barycenters of simplices
    /// containing `s`, i.e. the closed star of `[s]`.
    pub mirrors: BTreeMap<String, SimplicialComplex>,
}

impl Chamber {
    /// `K^S`, the union of all mirrors.
    pub fn mirror_union(&self) -> SimplicialComplex {
        self.mirrors
            .values()
            .fold(SimplicialComplex::empty(), |acc, m| acc.union(m))
    }
}

pub fn chamber(l: &SimplicialComplex) -> Result<Chamber> {
    if let Some(w) = flag_witness(l) {
        return Err(Error::NotFlag(l.simplex_labels(&w)));
    }
    let bary = barycentric_subdivision(l);
    let k = cone(&bary, CHAMBER_APEX)?;
    let mut mirrors = BTreeMap::new();
    for s in 0..l.num_vertices() {
        let keep: BTreeSet<String> = l
            .all_simplices()
            .filter(|t| t.contains(&s))
            .map(|t| barycenter_label(&l.simplex_labels(t)))
            .collect();
        let mirror = bary.full_subcomplex(|v| keep.contains(bary.label(v)));
        mirrors.insert(l.label(s).to_string(), mirror);
    }
    Ok(Chamber { k, mirrors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::homology;

    #[test]
    fn two_points() {
        let l = SimplicialComplex::faces_closure(&[vec!["s"], vec!["t"]]).unwrap();
        let c = chamber(&l).unwrap();
        assert_eq!(c.k.f_vector(), vec![3, 2]);
        assert_eq!(c.mirrors["s"].vertex_labels(), ["[s]"]);
        assert_eq!(c.mirrors["t"].vertex_labels(), ["[t]"]);
        assert_eq!(c.k.simplices(1).count(), 2);
    }

    #[test]
    fn edge_mirrors_meet_in_barycenter() {
        let l = SimplicialComplex::faces_closure(&[vec!["s", "t"]]).unwrap();
        let c = chamber(&l).unwrap();
        assert!(homology(&c.k, true).is_trivial());
        let (ms, mt) = (&c.mirrors["s"], &c.mirrors["t"]);
        assert_eq!(ms.dim(), 1);
        let common: Vec<&String> = ms.vertex_labels().iter().filter(|v| mt.index_of(v).is_some()).collect();
        assert_eq!(common, vec!["[s,t]"]);
        assert_eq!(c.mirror_union(), barycentric_subdivision(&l));
    }

    #[test]
    fn non_flag_rejected() {
        let l = SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
        assert!(matches!(chamber(&l), Err(Error::NotFlag(_))));
    }
}
