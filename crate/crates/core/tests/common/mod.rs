//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use coxeter_davis::coxeter::{racg_from_flag, CoxeterSystem, Word};
use coxeter_davis::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Rank over Q by fraction-free Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Betti numbers from rational ranks of boundary matrices built here from
/// the label-level simplex set.
pub fn rational_betti(k: &SimplicialComplex) -> Vec<usize> {
    let mut by_dim: Vec<Vec<Vec<String>>> = Vec::new();
    for s in k.label_simplex_set() {
        let d = s.len() - 1;
        if by_dim.len() <= d {
            by_dim.resize(d + 1, Vec::new());
        }
        by_dim[d].push(s.into_iter().collect());
    }
    let index: Vec<HashMap<Vec<String>, usize>> = by_dim
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let mut ranks = vec![0usize; by_dim.len() + 1];
    for d in 1..by_dim.len() {
        let mut rows = vec![vec![0i64; by_dim[d].len()]; by_dim[d - 1].len()];
        for (j, s) in by_dim[d].iter().enumerate() {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                rows[index[d - 1][&f]][j] = if i % 2 == 0 { 1 } else { -1 };
            }
        }
        ranks[d] = rational_rank(&rows);
    }
    (0..by_dim.len()).map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1]).collect()
}

/// Clique complex of a graph, by brute-force enumeration of vertex subsets.
pub fn clique_complex(n: usize, edges: &BTreeSet<(usize, usize)>) -> SimplicialComplex {
    let adj = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let mut cliques = Vec::new();
    for mask in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| adj(a, b))) {
            cliques.push(vs.iter().map(|v| format!("v{v}")).collect::<Vec<_>>());
        }
    }
    let labels = (0..n).map(|v| format!("v{v}")).collect();
    SimplicialComplex::with_vertices(labels, &cliques).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> BTreeSet<(usize, usize)> {
    let mut e = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.insert((a, b));
            }
        }
    }
    e
}

pub fn random_racg(rng: &mut impl Rng, n: usize, p: f64) -> CoxeterSystem {
    racg_from_flag(&clique_complex(n, &random_graph(rng, n, p))).unwrap()
}

type Mat = Vec<i64>;

/// Integral Tits representation of a right-angled system: `B(s,s) = 1`,
/// `B(s,t) = 0` for commuting and `-1` for free pairs; `σ_s(v) = v − 2B(e_s, v)e_s`.
pub struct Tits {
    n: usize,
    gens: Vec<Mat>,
}

fn mul(n: usize, a: &Mat, b: &Mat) -> Mat {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

impl Tits {
    pub fn new(sys: &CoxeterSystem) -> Self {
        let n = sys.rank();
        let b = |s: usize, t: usize| -> i64 {
            if s == t {
                1
            } else if sys.commute(s, t) {
                0
            } else {
                -1
            }
        };
        let gens = (0..n)
            .map(|s| {
                let mut m = vec![0i64; n * n];
                for i in 0..n {
                    m[i * n + i] = 1;
                }
                // column j is σ_s(e_j) = e_j − 2B(s, j) e_s
                for j in 0..n {
                    m[s * n + j] -= 2 * b(s, j);
                }
                m
            })
            .collect();
        Tits { n, gens }
    }

    pub fn eval(&self, w: &[usize]) -> Mat {
        let mut m = vec![0i64; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        for &s in w {
            m = mul(self.n, &m, &self.gens[s]);
        }
        m
    }

    /// All elements of length at most `r`: matrix ↦ (length, inverse).
    pub fn ball(&self, r: usize) -> HashMap<Mat, (usize, Mat)> {
        let id = self.eval(&[]);
        let mut seen = HashMap::new();
        seen.insert(id.clone(), (0, id.clone()));
        let mut frontier = vec![(id.clone(), id)];
        for len in 1..=r {
            let mut next = Vec::new();
            for (m, inv) in &frontier {
                for g in &self.gens {
                    let x = mul(self.n, m, g);
                    if !seen.contains_key(&x) {
                        // (m·g)⁻¹ = g·m⁻¹
                        let xi = mul(self.n, g, inv);
                        seen.insert(x.clone(), (len, xi.clone()));
                        next.push((x, xi));
                    }
                }
            }
            frontier = next;
        }
        seen
    }
}

/// Cayley distance from the identity, by meeting two balls of radius `r`
/// in the middle. Exact for elements of length at most `2r`.
pub struct CayleyOracle {
    tits: Tits,
    ball: HashMap<Mat, (usize, Mat)>,
}

impl CayleyOracle {
    pub fn new(sys: &CoxeterSystem, r: usize) -> Self {
        let tits = Tits::new(sys);
        let ball = tits.ball(r);
        CayleyOracle { tits, ball }
    }

    pub fn matrix(&self, w: &[usize]) -> Mat {
        self.tits.eval(w)
    }

    /// `min |a| + |a⁻¹g|` over `a` in the ball.
    pub fn distance(&self, w: &[usize]) -> Option<usize> {
        let g = self.tits.eval(w);
        if let Some((d, _)) = self.ball.get(&g) {
            return Some(*d);
        }
        self.ball
            .values()
            .filter_map(|(len, inv)| self.ball.get(&mul(self.tits.n, inv, &g)).map(|(d, _)| len + d))
            .min()
    }
}

/// Elements of the coset `uW_T` (right-angled, `T` spherical), as normal forms.
pub fn coset_elements(sys: &CoxeterSystem, u: &Word, t: &[usize]) -> BTreeSet<Word> {
    (0u32..1 << t.len())
        .map(|mask| {
            let mut v = u.0.clone();
            v.extend(t.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s));
            sys.reduce(&Word(v)).unwrap()
        })
        .collect()
}

pub fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<String>> = (0..n).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % n)]).collect();
    SimplicialComplex::faces_closure(&edges).unwrap()
}

pub fn simplex(n: usize) -> SimplicialComplex {
    let v: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    SimplicialComplex::faces_closure(&[v]).unwrap()
}

/// Six-vertex projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let t = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
    ];
    let faces: Vec<Vec<String>> = t.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
    SimplicialComplex::faces_closure(&faces).unwrap()
}
