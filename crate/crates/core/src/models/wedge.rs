use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::simplicial::{wedge, SimplicialComplex};

/// Generator pairs with `m_st = ∞`, each spanning an infinite dihedral
/// special subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralPairSet {
    pub pairs: Vec<[String; 2]>,
}

impl DihedralPairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn dihedral_pairs(sys: &CoxeterSystem) -> Result<DihedralPairSet> {
    if !sys.is_right_angled() {
        return Err(Error::NotRightAngled);
    }
    let n = sys.rank();
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if sys.entry(s, t).is_none() {
                pairs.push([sys.label(s).to_string(), sys.label(t).to_string()]);
            }
        }
    }
    Ok(DihedralPairSet { pairs })
}

/// `L ∨ S¹ ∨ … ∨ S¹` with `k` hollow triangles at the first vertex of `L`.
pub fn wedge_model(l: &SimplicialComplex, k: usize) -> Result<SimplicialComplex> {
    if l.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut parts = vec![l.clone()];
    let mut basepoints = vec![l.label(0).to_string()];
    for i in 0..k {
        let v: Vec<String> = (0..3).map(|j| format!("S{i}.{j}")).collect();
        let edges = vec![
            vec![v[0].clone(), v[1].clone()],
            vec![v[1].clone(), v[2].clone()],
            vec![v[0].clone(), v[2].clone()],
        ];
        parts.push(SimplicialComplex::faces_closure(&edges)?);
        basepoints.push(v[0].clone());
    }
    wedge(&parts, &basepoints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::racg_from_flag;
    use crate::simplicial::homology;

    #[test]
    fn pair_counts() {
        let two = SimplicialComplex::faces_closure(&[vec!["s"], vec!["t"]]).unwrap();
        assert_eq!(dihedral_pairs(&racg_from_flag(&two).unwrap()).unwrap().len(), 1);
        let pentagon: Vec<Vec<String>> = (0..5).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % 5)]).collect();
        let c5 = SimplicialComplex::faces_closure(&pentagon).unwrap();
        assert_eq!(dihedral_pairs(&racg_from_flag(&c5).unwrap()).unwrap().len(), 5);
        let simplex = SimplicialComplex::faces_closure(&[vec!["a", "b", "c"]]).unwrap();
        assert!(dihedral_pairs(&racg_from_flag(&simplex).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn wedge_homology() {
        let l = SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"], vec!["c", "a"]]).unwrap();
        assert_eq!(wedge_model(&l, 0).unwrap(), l);
        let h = homology(&wedge_model(&l, 3).unwrap(), true);
        assert_eq!(h.betti(1), 4);
        assert!(wedge_model(&SimplicialComplex::empty(), 1).is_err());
    }
}
