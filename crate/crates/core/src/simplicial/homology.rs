use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::complex::SimplicialComplex;
use super::snf::{invariant_factors, SparseMatrix};
use crate::error::{Error, Result};

type Membership<'a> = dyn Fn(&[usize]) -> bool + 'a;

/// Integral simplicial chains. `boundaries[k]` is the matrix of
/// `∂_k : C_k -> C_{k-1}` with rows indexed by `(k-1)`-simplices and columns
/// by `k`-simplices, both in lexicographic order. `boundaries[0]` is the
/// zero map (or the augmentation, for reduced chains).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
    pub augmented: bool,
}

impl ChainComplex {
    pub fn of(k: &SimplicialComplex, augmented: bool) -> Self {
        Self::relative(k, None, augmented)
    }

    /// Chains of `k` modulo chains of the subcomplex `sub` (given as a
    /// membership test on `k`'s simplices).
    fn relative(k: &SimplicialComplex, sub: Option<&Membership<'_>>, augmented: bool) -> Self {
        let keep = |s: &[usize]| sub.is_none_or(|f| !f(s));
        let mut bases: Vec<Vec<&Vec<usize>>> = Vec::new();
        let mut positions: Vec<HashMap<&Vec<usize>, usize>> = Vec::new();
        for dim in 0..(k.dim() + 1).max(0) as usize {
            let basis: Vec<&Vec<usize>> = k.simplices(dim).filter(|s| keep(s)).collect();
            positions.push(basis.iter().enumerate().map(|(i, s)| (*s, i)).collect());
            bases.push(basis);
        }
        let ranks: Vec<usize> = bases.iter().map(Vec::len).collect();
        let mut boundaries = Vec::with_capacity(ranks.len());
        for dim in 0..bases.len() {
            if dim == 0 {
                let mut m = SparseMatrix::new(usize::from(augmented), ranks[0]);
                if augmented {
                    for c in 0..ranks[0] {
                        m.cols[c].push((0, BigInt::one()));
                    }
                }
                boundaries.push(m);
                continue;
            }
            let mut m = SparseMatrix::new(ranks[dim - 1], ranks[dim]);
            for (c, s) in bases[dim].iter().enumerate() {
                let mut col = Vec::with_capacity(s.len());
                for i in 0..s.len() {
                    let mut face = (*s).clone();
                    face.remove(i);
                    if let Some(&r) = positions[dim - 1].get(&face) {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        col.push((r, BigInt::from(sign)));
                    }
                }
                col.sort_by_key(|e| e.0);
                m.cols[c] = col;
            }
            boundaries.push(m);
        }
        ChainComplex {
            ranks,
            boundaries,
            augmented,
        }
    }

    /// Checks `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn is_chain_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

/// One homology group `Z^betti ⊕ ⨁ Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: isize,
    pub betti: usize,
    #[serde(serialize_with = "ser_divisors", deserialize_with = "de_divisors")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Integral homology, one entry per degree from the bottom degree up to the
/// dimension of the complex.
///
/// Reduced homology of the empty complex is `Z` in degree `-1`; that is the
/// only case where degree `-1` shows up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn degree(&self, k: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.degree == k)
    }

    pub fn betti(&self, k: isize) -> usize {
        self.degree(k).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, k: isize) -> Vec<u64> {
        self.degree(k)
            .map(|g| g.torsion.iter().map(|d| d.to_u64().unwrap_or(u64::MAX)).collect())
            .unwrap_or_default()
    }

    /// All groups vanish.
    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Reduced homology vanishes: for reduced results this is
    /// [`is_trivial`](Self::is_trivial); for unreduced ones, `H_0 = Z` and
    /// everything else is zero.
    pub fn is_acyclic(&self) -> bool {
        if self.reduced {
            self.is_trivial()
        } else {
            self.groups.iter().all(|g| {
                if g.degree == 0 {
                    g.betti == 1 && g.torsion.is_empty()
                } else {
                    g.is_zero()
                }
            })
        }
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| if g.degree.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// Cohomology by universal coefficients: `H^k` has the free rank of `H_k`
    /// and the torsion of `H_{k-1}`.
    pub fn cohomology(&self) -> HomologyResult {
        let groups = self
            .groups
            .iter()
            .map(|g| HomologyGroup {
                degree: g.degree,
                betti: g.betti,
                torsion: self.degree(g.degree - 1).map(|p| p.torsion.clone()).unwrap_or_default(),
            })
            .collect();
        HomologyResult {
            reduced: self.reduced,
            groups,
        }
    }
}

fn ser_divisors<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for d in v {
        match d.to_u64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

fn de_divisors<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigUint>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Div {
        Num(u64),
        Text(String),
    }
    let raw = Vec::<Div>::deserialize(d)?;
    raw.into_iter()
        .map(|x| match x {
            Div::Num(n) => Ok(BigUint::from(n)),
            Div::Text(t) => t.parse().map_err(serde::de::Error::custom),
        })
        .collect()
}

fn from_chains(chains: &ChainComplex, bottom_degree: isize) -> HomologyResult {
    let factors: Vec<Vec<BigInt>> = chains.boundaries.iter().map(invariant_factors).collect();
    let rank = |k: usize| factors.get(k).map_or(0, Vec::len);
    let mut groups = Vec::new();
    if chains.augmented && chains.ranks.first().copied().unwrap_or(0) == 0 {
        // empty complex: the augmented chain complex is Z in degree -1
        groups.push(HomologyGroup {
            degree: -1,
            betti: 1,
            torsion: Vec::new(),
        });
        return HomologyResult { reduced: true, groups };
    }
    for k in 0..chains.ranks.len() {
        let betti = chains.ranks[k] - rank(k) - rank(k + 1);
        let torsion = factors
            .get(k + 1)
            .map(|f| f.iter().filter(|d| !d.is_one()).map(|d| d.magnitude().clone()).collect())
            .unwrap_or_default();
        groups.push(HomologyGroup {
            degree: bottom_degree + k as isize,
            betti,
            torsion,
        });
    }
    HomologyResult {
        reduced: chains.augmented,
        groups,
    }
}

/// Integral homology via Smith normal form of the boundary matrices.
pub fn homology(k: &SimplicialComplex, reduced: bool) -> HomologyResult {
    if !reduced && k.is_empty() {
        return HomologyResult {
            reduced,
            groups: Vec::new(),
        };
    }
    from_chains(&ChainComplex::of(k, reduced), 0)
}

/// Cap-checked variant of [`homology`], refusing complexes with more
/// simplices than the configured limit.
pub fn homology_capped(k: &SimplicialComplex, reduced: bool) -> Result<HomologyResult> {
    crate::limits::check_cells("complex", k.total_simplices() as u64)?;
    Ok(homology(k, reduced))
}

/// Homology of the quotient chain complex `C(K)/C(A)`.
pub fn relative_homology(k: &SimplicialComplex, a: &SimplicialComplex) -> Result<HomologyResult> {
    if let Some(missing) = a.first_missing_in(k) {
        return Err(Error::NotSubcomplex(missing));
    }
    let in_a = |s: &[usize]| {
        let labels: Vec<&str> = s.iter().map(|&v| k.label(v)).collect();
        a.contains_labels(&labels)
    };
    let chains = ChainComplex::relative(k, Some(&in_a), false);
    let mut result = from_chains(&chains, 0);
    result.reduced = false;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::complex::cone;

    fn complex(sets: &[&[&str]]) -> SimplicialComplex {
        let v: Vec<Vec<&str>> = sets.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::faces_closure(&v).unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let k = complex(&[&["a", "b"], &["b", "c"], &["c", "a"]]);
        let h = homology(&k, true);
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 1);
        let h = homology(&k, false);
        assert_eq!((h.betti(0), h.betti(1)), (1, 1));
        assert!(ChainComplex::of(&k, true).is_chain_complex());
    }

    #[test]
    fn empty_complex_conventions() {
        let e = SimplicialComplex::empty();
        let h = homology(&e, true);
        assert_eq!(h.groups.len(), 1);
        assert_eq!(h.degree(-1).unwrap().betti, 1);
        assert!(!h.is_acyclic());
        assert!(homology(&e, false).groups.is_empty());
    }

    #[test]
    fn relative_disk_boundary() {
        let disk = complex(&[&["a", "b", "c"]]);
        let circle = complex(&[&["a", "b"], &["b", "c"], &["c", "a"]]);
        let h = relative_homology(&disk, &circle).unwrap();
        assert_eq!((h.betti(0), h.betti(1), h.betti(2)), (0, 0, 1));
        let h = relative_homology(&disk, &disk).unwrap();
        assert!(h.is_trivial());
        assert!(matches!(
            relative_homology(&circle, &disk),
            Err(Error::NotSubcomplex(_))
        ));
    }

    #[test]
    fn cone_on_acyclic_rel_base_vanishes() {
        let path = complex(&[&["a", "b"], &["b", "c"]]);
        let c = cone(&path, "o").unwrap();
        assert!(relative_homology(&c, &path).unwrap().is_trivial());
    }

    #[test]
    fn cohomology_shifts_torsion() {
        let h = HomologyResult {
            reduced: false,
            groups: vec![
                HomologyGroup { degree: 0, betti: 1, torsion: vec![] },
                HomologyGroup { degree: 1, betti: 0, torsion: vec![BigUint::from(2u32)] },
                HomologyGroup { degree: 2, betti: 0, torsion: vec![] },
            ],
        };
        let c = h.cohomology();
        assert!(c.degree(1).unwrap().torsion.is_empty());
        assert_eq!(c.torsion(2), vec![2]);
    }

    #[test]
    fn json_shape() {
        let k = complex(&[&["a", "b"], &["b", "c"], &["c", "a"]]);
        let json = serde_json::to_value(homology(&k, false).groups).unwrap();
        assert_eq!(
            json,
            serde_json::json!([{"degree":0,"betti":1,"torsion":[]},{"degree":1,"betti":1,"torsion":[]}])
        );
    }
}
