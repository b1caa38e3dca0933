use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, NormalForm, Word};
use crate::error::{Error, Result};
use crate::limits::check_cells;
use crate::simplicial::SimplicialComplex;

/// ShortLex on representatives, then `T` by size and lexicographically.
pub(crate) fn coset_cmp(a: &SphericalCoset, b: &SphericalCoset) -> std::cmp::Ordering {
    a.rep
        .shortlex_cmp(&b.rep)
        .then_with(|| a.t.len().cmp(&b.t.len()))
        .then_with(|| a.t.cmp(&b.t))
}

/// The coset `rep · W_T`, with `rep` its shortest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphericalCoset {
    pub rep: NormalForm,
    pub t: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetJson {
    pub rep: String,
    #[serde(rename = "T")]
    pub t: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisBallJson {
    pub radius: usize,
    pub cosets: Vec<CosetJson>,
    /// Strict containments `cosets[a] ⊊ cosets[b]`.
    pub order: Vec<[usize; 2]>,
}

/// All spherical cosets whose shortest element has length at most `radius`.
///
/// Cosets are kept implicit: every coset has a unique shortest element `u`
/// and `uW_T` has shortest element `u` exactly when no letter of `T` is a
/// right descent of `u`. The ball stores its chambers `u` and the spherical
/// subsets; cosets, realisation and subcomplexes are materialised on demand
/// under the cell cap.
#[derive(Clone, Debug)]
pub struct DavisBall {
    system: CoxeterSystem,
    radius: usize,
    chambers: Vec<NormalForm>,
    descents: Vec<Vec<usize>>,
    /// Spherical subsets, `∅` first, then by size and lexicographically.
    spherical: Vec<Vec<usize>>,
    spherical_index: HashMap<Vec<usize>, usize>,
    /// `star[s]`: indices of spherical subsets containing `s`.
    star: Vec<Vec<usize>>,
    /// Largest size of a spherical superset of each spherical subset.
    top: Vec<usize>,
}

pub fn davis_ball(sys: &CoxeterSystem, r: usize) -> Result<DavisBall> {
    if !sys.is_right_angled() {
        return Err(Error::NotRightAngled);
    }
    let mut chambers = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for len in 1..=r {
        let mut next = Vec::new();
        for w in &frontier {
            // v = w·s is kept only when s is its largest right descent, so
            // each element is produced once
            for s in 0..sys.rank() {
                let v = sys.multiply(w, s)?;
                if v.len() == len && sys.right_descents(&v).last() == Some(&s) {
                    next.push(v);
                }
            }
        }
        next.sort_by(Word::shortlex_cmp);
        if next.is_empty() {
            break;
        }
        check_cells("chambers", (chambers.len() + next.len()) as u64)?;
        chambers.extend(next.iter().cloned());
        frontier = next;
    }
    let descents = chambers.iter().map(|u| sys.right_descents(u)).collect();

    let mut spherical = vec![Vec::new()];
    spherical.extend(sys.spherical_subsets());
    let spherical_index: HashMap<Vec<usize>, usize> =
        spherical.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let mut star = vec![Vec::new(); sys.rank()];
    for (i, t) in spherical.iter().enumerate() {
        for &s in t {
            star[s].push(i);
        }
    }
    let mut top: Vec<usize> = spherical.iter().map(Vec::len).collect();
    for i in (1..spherical.len()).rev() {
        for skip in 0..spherical[i].len() {
            let mut facet = spherical[i].clone();
            facet.remove(skip);
            let f = spherical_index[&facet];
            top[f] = top[f].max(top[i]);
        }
    }
    Ok(DavisBall {
        system: sys.clone(),
        radius: r,
        chambers,
        descents,
        spherical,
        spherical_index,
        star,
        top,
    })
}

impl DavisBall {
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Elements of length at most the radius, in ShortLex order.
    pub fn chambers(&self) -> &[NormalForm] {
        &self.chambers
    }

    /// Spherical subsets including `∅`.
    pub fn spherical_subsets(&self) -> &[Vec<usize>] {
        &self.spherical
    }

    fn avoiding(&self, chamber: usize) -> Vec<bool> {
        let mut ok = vec![true; self.spherical.len()];
        for &s in &self.descents[chamber] {
            for &i in &self.star[s] {
                ok[i] = false;
            }
        }
        ok
    }

    /// Number of cosets, without enumerating them.
    pub fn coset_count(&self) -> u64 {
        let mut mark = vec![usize::MAX; self.spherical.len()];
        let mut total = 0u64;
        for c in 0..self.chambers.len() {
            let mut meeting = 0u64;
            for &s in &self.descents[c] {
                for &i in &self.star[s] {
                    if mark[i] != c {
                        mark[i] = c;
                        meeting += 1;
                    }
                }
            }
            total += self.spherical.len() as u64 - meeting;
        }
        total
    }

    /// Cosets sorted by representative (ShortLex), then by `T` (size, then
    /// lexicographic).
    pub fn cosets(&self) -> Result<Vec<SphericalCoset>> {
        check_cells("cosets", self.coset_count())?;
        let mut out = Vec::new();
        for (c, u) in self.chambers.iter().enumerate() {
            let ok = self.avoiding(c);
            for (i, t) in self.spherical.iter().enumerate() {
                if ok[i] {
                    out.push(SphericalCoset {
                        rep: u.clone(),
                        t: t.clone(),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Whether `c` is a coset of this ball.
    pub fn is_member(&self, c: &SphericalCoset) -> bool {
        c.rep.len() <= self.radius
            && self.spherical_index.contains_key(&c.t)
            && self.system.reduce(&c.rep).ok().as_ref() == Some(&c.rep)
            && self.system.min_coset_rep(&c.rep, &c.t).ok().as_ref() == Some(&c.rep)
    }

    /// The order relation: `a ⊆ b` iff `T_a ⊆ T_b` and `a.rep` lies in `b`.
    pub fn contains(&self, a: &SphericalCoset, b: &SphericalCoset) -> bool {
        a.t.iter().all(|s| b.t.contains(s)) && self.system.min_coset_rep(&a.rep, &b.t).ok().as_ref() == Some(&b.rep)
    }

    pub fn coset_label(&self, c: &SphericalCoset) -> String {
        format!("{}W{{{}}}", self.system.format_word(&c.rep), self.system.labels(&c.t).join(","))
    }

    /// Maximal chains of spherical subsets starting at `bottom`, or none if
    /// `bottom` is not spherical.
    pub(crate) fn flags_above(&self, bottom: &[usize]) -> Vec<Vec<Vec<usize>>> {
        let Some(&start) = self.spherical_index.get(bottom) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut stack = vec![vec![start]];
        while let Some(chain) = stack.pop() {
            let last = &self.spherical[*chain.last().unwrap()];
            let mut extended = false;
            let candidates: Vec<usize> = match last.first() {
                Some(&s) => self.system.commuting_partners(s).iter().copied().collect(),
                None => (0..self.system.rank()).collect(),
            };
            for s in candidates {
                if last.contains(&s) {
                    continue;
                }
                let mut next = last.clone();
                next.push(s);
                next.sort_unstable();
                if let Some(&j) = self.spherical_index.get(&next) {
                    let mut c = chain.clone();
                    c.push(j);
                    stack.push(c);
                    extended = true;
                }
            }
            if !extended {
                out.push(chain);
            }
        }
        out.sort();
        out.into_iter()
            .map(|c| c.into_iter().map(|i| self.spherical[i].clone()).collect())
            .collect()
    }

    /// Complex spanned by chains of cosets, vertices in canonical order.
    pub(crate) fn order_complex(&self, chains: Vec<Vec<SphericalCoset>>) -> SimplicialComplex {
        let mut vertices: Vec<&SphericalCoset> = chains.iter().flatten().collect();
        vertices.sort_by(|a, b| coset_cmp(a, b));
        vertices.dedup();
        let index: HashMap<&SphericalCoset, usize> = vertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let labels = vertices.iter().map(|c| self.coset_label(c)).collect();
        let maximal: Vec<Vec<usize>> = chains.iter().map(|ch| ch.iter().map(|c| index[c]).collect()).collect();
        SimplicialComplex::from_indexed(labels, maximal)
    }

    /// The order complex together with its vertex list: vertex `i` of the
    /// complex is `cosets[i]`.
    pub(crate) fn realization_with_cosets(&self) -> Result<(SimplicialComplex, Vec<SphericalCoset>)> {
        let cosets = self.cosets()?;
        let flags = self.flags_above(&[]);
        check_cells("chains", (self.chambers.len() * flags.len()) as u64)?;
        let mut chains = Vec::with_capacity(self.chambers.len() * flags.len());
        for u in &self.chambers {
            for flag in &flags {
                let chain = flag
                    .iter()
                    .map(|t| {
                        Ok(SphericalCoset {
                            rep: self.system.min_coset_rep(u, t)?,
                            t: t.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                chains.push(chain);
            }
        }
        let k = self.order_complex(chains);
        debug_assert_eq!(k.num_vertices(), cosets.len());
        Ok((k, cosets))
    }

    /// Order complex of the coset poset: one chamber copy of the cone on
    /// `bary L` per element of the ball.
    pub fn realization(&self) -> Result<SimplicialComplex> {
        Ok(self.realization_with_cosets()?.0)
    }

    /// Dimension of the realisation, from the poset alone. A chain lies in
    /// the chamber of the shortest element of its smallest coset `uW_T`, so
    /// its length is at most `1 + top(T) - |T|` for some `T` avoiding the
    /// descents of `u`.
    pub fn realization_dim(&self) -> isize {
        self.chain_dim(false)
    }

    /// Dimension of the singular part, where the smallest coset of every
    /// chain has `T ≠ ∅`. Shrinking `T` to one of its letters keeps it
    /// clear of the descents and never shortens the bound, so singletons
    /// suffice.
    pub fn singular_dim(&self) -> isize {
        self.chain_dim(true)
    }

    fn chain_dim(&self, singular: bool) -> isize {
        if !singular {
            return self.top[0] as isize;
        }
        // generators by decreasing top, then the first one clear of the
        // chamber's descents
        let mut by_top: Vec<usize> = (0..self.system.rank()).collect();
        by_top.sort_by_key(|&s| std::cmp::Reverse(self.top[self.spherical_index[&vec![s]]]));
        let mut best: isize = -1;
        for d in &self.descents {
            if let Some(&s) = by_top.iter().find(|s| !d.contains(s)) {
                best = best.max(self.top[self.spherical_index[&vec![s]]] as isize - 1);
            }
        }
        best
    }

    pub fn to_json(&self) -> Result<DavisBallJson> {
        let (k, cosets) = self.realization_with_cosets()?;
        let mut order: Vec<[usize; 2]> = k
            .simplices(1)
            .map(|e| {
                if cosets[e[0]].t.len() < cosets[e[1]].t.len() {
                    [e[0], e[1]]
                } else {
                    [e[1], e[0]]
                }
            })
            .collect();
        order.sort_unstable();
        Ok(DavisBallJson {
            radius: self.radius,
            cosets: cosets
                .iter()
                .map(|c| CosetJson {
                    rep: self.system.format_word(&c.rep),
                    t: self.system.labels(&c.t),
                })
                .collect(),
            order,
        })
    }
}
