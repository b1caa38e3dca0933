use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abstract simplicial complex on opaque string vertex ids.
///
/// Vertices are kept in declaration order and simplices are stored as
/// strictly increasing lists of vertex positions, grouped by dimension.
/// The set of simplices is always closed under taking non-empty faces.
#[derive(Clone, Debug, Default)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    simplices: Vec<BTreeSet<Vec<usize>>>,
}

/// On-disk form: `{"vertices":[...],"maximal_simplices":[[...],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Smallest complex containing every given set. Vertices are ordered by
    /// first appearance.
    pub fn faces_closure<S: AsRef<str>>(maximal: &[Vec<S>]) -> Result<Self> {
        if maximal.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut vertices: Vec<String> = Vec::new();
        let mut seen = HashMap::new();
        for set in maximal {
            if set.is_empty() {
                return Err(Error::EmptySimplex);
            }
            for v in set {
                let v = v.as_ref();
                if !seen.contains_key(v) {
                    seen.insert(v.to_string(), vertices.len());
                    vertices.push(v.to_string());
                }
            }
        }
        Self::with_vertices(vertices, maximal)
    }

    /// Builds a complex over a declared vertex universe. Every vertex of the
    /// universe becomes a 0-simplex, so isolated vertices are allowed.
    pub fn with_vertices<S: AsRef<str>>(vertices: Vec<String>, maximal: &[Vec<S>]) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::VertexCollision(v.clone()));
            }
        }
        let mut idx_sets = Vec::with_capacity(maximal.len());
        for set in maximal {
            if set.is_empty() {
                return Err(Error::EmptySimplex);
            }
            let mut s = Vec::with_capacity(set.len());
            for v in set {
                let v = v.as_ref();
                s.push(*index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?);
            }
            idx_sets.push(s);
        }
        Ok(Self::from_indexed(vertices, idx_sets))
    }

    /// Index-based constructor used by the generators in this crate. Sets may
    /// be unsorted and contain repeats; callers guarantee indices are in range.
    pub(crate) fn from_indexed(labels: Vec<String>, maximal: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut complex = SimplicialComplex {
            labels,
            index,
            simplices: Vec::new(),
        };
        for v in 0..complex.labels.len() {
            complex.insert_closed(vec![v]);
        }
        for mut s in maximal {
            s.sort_unstable();
            s.dedup();
            if !s.is_empty() {
                complex.insert_closed(s);
            }
        }
        complex
    }

    fn insert_closed(&mut self, simplex: Vec<usize>) {
        let k = simplex.len() - 1;
        while self.simplices.len() <= k {
            self.simplices.push(BTreeSet::new());
        }
        if self.simplices[k].contains(&simplex) {
            return;
        }
        if simplex.len() > 1 {
            for i in 0..simplex.len() {
                let mut face = simplex.clone();
                face.remove(i);
                self.insert_closed(face);
            }
        }
        self.simplices[k].insert(simplex);
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        Self::with_vertices(json.vertices.clone(), &json.maximal_simplices)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.labels.clone(),
            maximal_simplices: self
                .maximal_simplices()
                .into_iter()
                .map(|s| self.simplex_labels(&s))
                .collect(),
        }
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Largest simplex cardinality minus one; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    /// Simplices of dimension `k` in lexicographic order.
    pub fn simplices(&self, k: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.get(k).into_iter().flatten()
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, BTreeSet::len)
    }

    pub fn total_simplices(&self) -> usize {
        self.simplices.iter().map(BTreeSet::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(BTreeSet::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Membership test for a strictly increasing index list.
    pub fn contains(&self, simplex: &[usize]) -> bool {
        !simplex.is_empty()
            && self
                .simplices
                .get(simplex.len() - 1)
                .is_some_and(|s| s.contains(simplex))
    }

    /// Membership test by vertex labels in any order.
    pub fn contains_labels<S: AsRef<str>>(&self, simplex: &[S]) -> bool {
        let mut idx = Vec::with_capacity(simplex.len());
        for v in simplex {
            match self.index_of(v.as_ref()) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        idx.len() == simplex.len() && self.contains(&idx)
    }

    pub fn simplex_labels(&self, simplex: &[usize]) -> Vec<String> {
        simplex.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// All simplices, lowest dimension first.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut covered: BTreeSet<&Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for k in (0..self.simplices.len()).rev() {
            for s in &self.simplices[k] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            if k > 0 {
                for s in &self.simplices[k] {
                    // only facets need marking; lower faces are reached through them
                    for i in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(i);
                        if let Some(face) = self.simplices[k - 1].get(&f) {
                            covered.insert(face);
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).reverse().then_with(|| a.cmp(b)));
        out
    }

    /// Neighbour sets of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.labels.len()];
        for e in self.simplices(1) {
            adj[e[0]].insert(e[1]);
            adj[e[1]].insert(e[0]);
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        a != b && self.contains(&[a, b])
    }

    /// Full subcomplex on the vertices accepted by `keep`. Vertex order is
    /// inherited.
    pub fn full_subcomplex(&self, keep: impl Fn(usize) -> bool) -> SimplicialComplex {
        let kept: Vec<usize> = (0..self.labels.len()).filter(|&v| keep(v)).collect();
        let mut remap = vec![usize::MAX; self.labels.len()];
        for (i, &v) in kept.iter().enumerate() {
            remap[v] = i;
        }
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        let maximal: Vec<Vec<usize>> = self
            .all_simplices()
            .filter(|s| s.iter().all(|&v| remap[v] != usize::MAX))
            .map(|s| s.iter().map(|&v| remap[v]).collect())
            .collect();
        SimplicialComplex::from_indexed(labels, maximal)
    }

    /// True iff every simplex of `self` is a simplex of `other`, compared by
    /// vertex labels.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.first_missing_in(other).is_none()
    }

    pub(crate) fn first_missing_in(&self, other: &SimplicialComplex) -> Option<Vec<String>> {
        self.all_simplices()
            .find(|s| !other.contains_labels(&self.simplex_labels(s)))
            .map(|s| self.simplex_labels(s))
    }

    /// Label-level union of two complexes. Vertices of `self` come first.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut labels = self.labels.clone();
        let mut index = self.index.clone();
        for l in &other.labels {
            if !index.contains_key(l) {
                index.insert(l.clone(), labels.len());
                labels.push(l.clone());
            }
        }
        let mut maximal: Vec<Vec<usize>> = self.maximal_simplices();
        for s in other.maximal_simplices() {
            maximal.push(s.iter().map(|&v| index[&other.labels[v]]).collect());
        }
        SimplicialComplex::from_indexed(labels, maximal)
    }

    /// Same complex with vertex labels rewritten by `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> SimplicialComplex {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        SimplicialComplex::from_indexed(labels, self.maximal_simplices())
    }

    /// The set of simplices as sets of labels, for order-independent comparison.
    pub fn label_simplex_set(&self) -> BTreeSet<BTreeSet<String>> {
        self.all_simplices()
            .map(|s| s.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }
}

/// Two complexes are equal when they have the same vertex labels and the same
/// simplices, regardless of vertex order.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels.len() == other.labels.len()
            && self.total_simplices() == other.total_simplices()
            && self.is_subcomplex_of(other)
    }
}

impl Eq for SimplicialComplex {}

/// `cone(K, apex)`: every simplex of `K` joined with a fresh apex vertex.
pub fn cone(k: &SimplicialComplex, apex: &str) -> Result<SimplicialComplex> {
    if k.index_of(apex).is_some() {
        return Err(Error::VertexCollision(apex.to_string()));
    }
    let mut labels = k.labels.clone();
    let a = labels.len();
    labels.push(apex.to_string());
    let maximal: Vec<Vec<usize>> = k
        .maximal_simplices()
        .into_iter()
        .map(|mut s| {
            s.push(a);
            s
        })
        .chain(std::iter::once(vec![a]))
        .collect();
    Ok(SimplicialComplex::from_indexed(labels, maximal))
}

/// Disjoint union of the complexes with all basepoints identified.
///
/// A single complex is returned unchanged. Otherwise the wedge point keeps the
/// first basepoint's label and every other vertex `v` of complex `i` becomes
/// `"{i}:{v}"`.
pub fn wedge<S: AsRef<str>>(complexes: &[SimplicialComplex], basepoints: &[S]) -> Result<SimplicialComplex> {
    if complexes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if complexes.len() != basepoints.len() {
        return Err(Error::BasepointMismatch {
            expected: complexes.len(),
            got: basepoints.len(),
        });
    }
    let mut bases = Vec::with_capacity(complexes.len());
    for (c, b) in complexes.iter().zip(basepoints) {
        let b = b.as_ref();
        bases.push(c.index_of(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?);
    }
    if complexes.len() == 1 {
        return Ok(complexes[0].clone());
    }
    let mut labels = vec![basepoints[0].as_ref().to_string()];
    let mut maximal = Vec::new();
    for (i, (c, &base)) in complexes.iter().zip(&bases).enumerate() {
        let mut remap = vec![0usize; c.num_vertices()];
        for (v, slot) in remap.iter_mut().enumerate() {
            if v != base {
                *slot = labels.len();
                labels.push(format!("{i}:{}", c.label(v)));
            }
        }
        for s in c.maximal_simplices() {
            maximal.push(s.iter().map(|&v| remap[v]).collect());
        }
    }
    Ok(SimplicialComplex::from_indexed(labels, maximal))
}
