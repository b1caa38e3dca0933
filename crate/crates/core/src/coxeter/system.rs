use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::classification::{classify_component, FiniteType};
use crate::error::{Error, Result};
use crate::simplicial::squares::flag_witness;
use crate::simplicial::SimplicialComplex;

/// A Coxeter matrix over an ordered generator list.
///
/// Only the finite off-diagonal entries are stored; a missing pair means
/// `m_st = ∞`. The diagonal is implicitly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    finite: BTreeMap<(usize, usize), u32>,
}

/// `{"generators":[...],"matrix":[[...]]}` with ∞ written as 0.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoxeterJson {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from the off-diagonal finite entries, keyed by
    /// unordered generator pairs.
    pub fn new(generators: Vec<String>, finite: impl IntoIterator<Item = ((usize, usize), u32)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(Error::InvalidMatrix(format!("duplicate generator `{g}`")));
            }
        }
        let n = generators.len();
        let mut map = BTreeMap::new();
        for ((i, j), m) in finite {
            if i >= n || j >= n {
                return Err(Error::GeneratorOutOfRange(i.max(j)));
            }
            if i == j {
                return Err(Error::InvalidMatrix("diagonal entries are fixed at 1".into()));
            }
            if m < 2 {
                return Err(Error::InvalidMatrix(format!("off-diagonal entry {m} below 2")));
            }
            let key = (i.min(j), i.max(j));
            if let Some(old) = map.insert(key, m) {
                if old != m {
                    return Err(Error::InvalidMatrix(format!("entry ({i},{j}) given twice")));
                }
            }
        }
        Ok(CoxeterMatrix { generators, finite: map })
    }

    pub fn from_json(json: &CoxeterJson) -> Result<Self> {
        let n = json.generators.len();
        if json.matrix.len() != n || json.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!("matrix must be {n}x{n}")));
        }
        let mut entries = Vec::new();
        for i in 0..n {
            if json.matrix[i][i] != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (json.matrix[i][j], json.matrix[j][i]);
                if a != b {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                }
                if a == 1 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry 1 at ({i},{j})")));
                }
                if a != 0 && i < j {
                    entries.push(((i, j), a));
                }
            }
        }
        Self::new(json.generators.clone(), entries)
    }

    pub fn to_json(&self) -> CoxeterJson {
        let n = self.generators.len();
        let mut matrix = vec![vec![0u32; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (&(i, j), &m) in &self.finite {
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
        CoxeterJson {
            generators: self.generators.clone(),
            matrix,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `m_st`, with `None` meaning ∞.
    pub fn entry(&self, s: usize, t: usize) -> Option<u32> {
        if s == t {
            return Some(1);
        }
        self.finite.get(&(s.min(t), s.max(t))).copied()
    }

    pub fn finite_entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.finite.iter().map(|(&k, &v)| (k, v))
    }
}

/// A Coxeter system `(W, S)`. Right-angled systems built from a flag complex
/// keep that complex.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    right_angled: bool,
    index: HashMap<String, usize>,
    /// Commuting partners (`m_st = 2`) of each generator.
    commuting: Vec<BTreeSet<usize>>,
    flag_complex: Option<SimplicialComplex>,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let right_angled = matrix.finite.values().all(|&m| m == 2);
        let index = matrix.generators.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let mut commuting = vec![BTreeSet::new(); matrix.len()];
        for (&(i, j), &m) in &matrix.finite {
            if m == 2 {
                commuting[i].insert(j);
                commuting[j].insert(i);
            }
        }
        CoxeterSystem {
            matrix,
            right_angled,
            index,
            commuting,
            flag_complex: None,
        }
    }

    pub fn from_json(json: &CoxeterJson) -> Result<Self> {
        Ok(Self::new(CoxeterMatrix::from_json(json)?))
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn is_right_angled(&self) -> bool {
        self.right_angled
    }

    pub fn flag_complex(&self) -> Option<&SimplicialComplex> {
        self.flag_complex.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn generators(&self) -> &[String] {
        self.matrix.generators()
    }

    pub fn generator(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn generator_set(&self, labels: &[impl AsRef<str>]) -> Result<Vec<usize>> {
        let mut t: Vec<usize> = labels.iter().map(|l| self.generator(l.as_ref())).collect::<Result<_>>()?;
        t.sort_unstable();
        t.dedup();
        Ok(t)
    }

    pub fn label(&self, s: usize) -> &str {
        &self.matrix.generators[s]
    }

    pub fn labels(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&s| self.label(s).to_string()).collect()
    }

    pub fn entry(&self, s: usize, t: usize) -> Option<u32> {
        self.matrix.entry(s, t)
    }

    /// Distinct generators with `m_st = 2`.
    pub fn commute(&self, s: usize, t: usize) -> bool {
        self.commuting[s].contains(&t)
    }

    pub fn commuting_partners(&self, s: usize) -> &BTreeSet<usize> {
        &self.commuting[s]
    }

    /// Finite types of the connected components of the diagram on `t`, or
    /// `None` if `W_T` is infinite.
    pub fn spherical_type(&self, t: &[usize]) -> Option<Vec<FiniteType>> {
        let n = t.len();
        let mut comp = vec![usize::MAX; n];
        let mut types = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut members = vec![start];
            comp[start] = start;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                for v in 0..n {
                    if comp[v] == usize::MAX && self.entry(t[u], t[v]) != Some(2) {
                        comp[v] = start;
                        members.push(v);
                    }
                }
                k += 1;
            }
            let ty = classify_component(members.len(), |i, j| self.entry(t[members[i]], t[members[j]]))?;
            types.push(ty);
        }
        types.sort();
        Some(types)
    }

    /// Whether `W_T` is finite. For right-angled systems this is the clique
    /// test on the commutation graph.
    pub fn is_spherical(&self, t: &[usize]) -> Result<bool> {
        if let Some(&bad) = t.iter().find(|&&s| s >= self.rank()) {
            return Err(Error::GeneratorOutOfRange(bad));
        }
        if self.right_angled {
            return Ok(self.is_clique(t));
        }
        Ok(self.spherical_type(t).is_some())
    }

    pub fn is_spherical_labels(&self, t: &[impl AsRef<str>]) -> Result<bool> {
        let t = self.generator_set(t)?;
        self.is_spherical(&t)
    }

    fn is_clique(&self, t: &[usize]) -> bool {
        t.iter()
            .enumerate()
            .all(|(i, &a)| t[i + 1..].iter().all(|&b| a != b && self.commute(a, b)))
    }

    /// All non-empty spherical subsets, as sorted index lists, grouped by
    /// size and lexicographic within a size.
    pub fn spherical_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|s| vec![s]).collect()];
        loop {
            let last = levels.last().unwrap();
            let mut next = Vec::new();
            for t in last {
                let top = *t.last().unwrap();
                let candidates: Vec<usize> = if self.right_angled {
                    self.commuting[top].range(top + 1..).copied().collect()
                } else {
                    (top + 1..n).collect()
                };
                for s in candidates {
                    let mut u = t.clone();
                    u.push(s);
                    let ok = if self.right_angled {
                        t.iter().all(|&a| self.commute(a, s))
                    } else {
                        // every facet is already spherical when it was generated
                        self.spherical_type(&u).is_some()
                    };
                    if ok {
                        next.push(u);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        levels.into_iter().flatten().collect()
    }
}

/// Right-angled system with nerve `L`: `m_st = 2` on edges, ∞ otherwise.
pub fn racg_from_flag(l: &SimplicialComplex) -> Result<CoxeterSystem> {
    if let Some(w) = flag_witness(l) {
        return Err(Error::NotFlag(l.simplex_labels(&w)));
    }
    let entries = l.simplices(1).map(|e| ((e[0], e[1]), 2));
    let matrix = CoxeterMatrix::new(l.vertex_labels().to_vec(), entries)?;
    let mut sys = CoxeterSystem::new(matrix);
    sys.flag_complex = Some(l.clone());
    Ok(sys)
}

/// The nerve: simplices are the non-empty spherical subsets.
pub fn nerve(sys: &CoxeterSystem) -> SimplicialComplex {
    SimplicialComplex::from_indexed(sys.generators().to_vec(), sys.spherical_subsets())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(n: usize) -> Vec<String> {
        (0..n).map(|i| ((b's' + i as u8) as char).to_string()).collect()
    }

    #[test]
    fn single_vertex_and_dihedral() {
        let pt = SimplicialComplex::faces_closure(&[vec!["s"]]).unwrap();
        let sys = racg_from_flag(&pt).unwrap();
        assert_eq!(sys.rank(), 1);
        let two = SimplicialComplex::faces_closure(&[vec!["s"], vec!["t"]]).unwrap();
        let sys = racg_from_flag(&two).unwrap();
        assert_eq!(sys.entry(0, 1), None);
        assert_eq!(sys.matrix().to_json().matrix, vec![vec![1, 0], vec![0, 1]]);
        assert!(!sys.is_spherical(&[0, 1]).unwrap());
        assert!(sys.is_spherical(&[0]).unwrap());
        assert!(sys.is_spherical(&[]).unwrap());
        assert_eq!(nerve(&sys), two);
    }

    #[test]
    fn five_cycle_entries() {
        let edges: Vec<Vec<String>> = (0..5).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % 5)]).collect();
        let c5 = SimplicialComplex::faces_closure(&edges).unwrap();
        let sys = racg_from_flag(&c5).unwrap();
        let json = sys.matrix().to_json();
        let twos = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| json.matrix[i][j] == 2).count();
        let infs = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| json.matrix[i][j] == 0).count();
        assert_eq!((twos, infs), (5, 5));
    }

    #[test]
    fn non_flag_rejected_with_witness() {
        let hollow = SimplicialComplex::faces_closure(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
        match racg_from_flag(&hollow) {
            Err(Error::NotFlag(w)) => assert_eq!(w, vec!["a", "b", "c"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn a2_nerve_is_an_edge() {
        let m = CoxeterMatrix::new(gens(2), [((0, 1), 3)]).unwrap();
        let sys = CoxeterSystem::new(m);
        assert!(!sys.is_right_angled());
        assert_eq!(sys.spherical_type(&[0, 1]), Some(vec![FiniteType::A(2)]));
        assert_eq!(nerve(&sys).f_vector(), vec![2, 1]);
    }

    #[test]
    fn affine_triangle_nerve_is_hollow() {
        // m = 3 on all pairs: affine A2, every proper subset finite
        let m = CoxeterMatrix::new(gens(3), [((0, 1), 3), ((1, 2), 3), ((0, 2), 3)]).unwrap();
        let sys = CoxeterSystem::new(m);
        assert_eq!(nerve(&sys).f_vector(), vec![3, 3]);
        // H3 spherical, with one commuting pair
        let m = CoxeterMatrix::new(gens(3), [((0, 1), 5), ((1, 2), 3), ((0, 2), 2)]).unwrap();
        let sys = CoxeterSystem::new(m);
        assert_eq!(sys.spherical_type(&[0, 1, 2]), Some(vec![FiniteType::H(3)]));
    }

    #[test]
    fn json_validation() {
        let bad = CoxeterJson {
            generators: gens(2),
            matrix: vec![vec![1, 2], vec![3, 1]],
        };
        assert!(CoxeterMatrix::from_json(&bad).is_err());
        let bad = CoxeterJson {
            generators: gens(2),
            matrix: vec![vec![1, 1], vec![1, 1]],
        };
        assert!(CoxeterMatrix::from_json(&bad).is_err());
        let ok = CoxeterJson {
            generators: gens(3),
            matrix: vec![vec![1, 2, 0], vec![2, 1, 4], vec![0, 4, 1]],
        };
        let m = CoxeterMatrix::from_json(&ok).unwrap();
        assert_eq!(m.to_json(), ok);
        assert!(CoxeterSystem::new(m).is_spherical_labels(&["u"]).is_ok());
    }

    #[test]
    fn unknown_generator() {
        let pt = SimplicialComplex::faces_closure(&[vec!["s"]]).unwrap();
        let sys = racg_from_flag(&pt).unwrap();
        assert!(matches!(sys.is_spherical_labels(&["q"]), Err(Error::UnknownGenerator(_))));
        assert!(matches!(sys.is_spherical(&[4]), Err(Error::GeneratorOutOfRange(4))));
    }
}
