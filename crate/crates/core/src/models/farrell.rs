//! Truncations of the three-dimensional model for `Z²` with virtually cyclic
//! stabilisers: a triangulated torus with one solid torus filled in for each
//! chosen slope.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A primitive vector `(p, q)` up to sign, stored with `q > 0`, or `q = 0`
/// and `p = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlopes(format!("({p},{q}) is not primitive")));
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
        Ok(Slope { p, q })
    }

    pub fn height(&self) -> i64 {
        self.p.abs().max(self.q.abs())
    }

    /// `|p| + |q|`: how far the slope's line functional varies across one
    /// grid triangle.
    pub fn spread(&self) -> i64 {
        self.p.abs() + self.q.abs()
    }

    /// Height first, then angle in `[0, π)`.
    pub fn farey_cmp(&self, other: &Slope) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| {
            // both lie in the upper half plane: compare by cross product
            let cross = self.p * other.q - self.q * other.p;
            0.cmp(&cross)
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeSet {
    slopes: Vec<Slope>,
}

impl SlopeSet {
    pub fn new(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut slopes: Vec<Slope> = Vec::with_capacity(pairs.len());
        for &(p, q) in pairs {
            let s = Slope::new(p, q)?;
            if slopes.contains(&s) {
                return Err(Error::InvalidSlopes(format!("({p},{q}) is parallel to an earlier slope")));
            }
            slopes.push(s);
        }
        Ok(SlopeSet { slopes })
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }
}

/// The first `n` primitive slopes in Farey order:
/// `(1,0), (1,1), (0,1), (-1,1), (2,1), (1,2), …`.
pub fn farey_slopes(n: usize) -> SlopeSet {
    let mut out = Vec::with_capacity(n);
    let mut h: i64 = 1;
    while out.len() < n {
        let mut level: Vec<Slope> = Vec::new();
        for p in -h..=h {
            for q in 0..=h {
                if p.abs().max(q) == h {
                    if let Ok(s) = Slope::new(p, q) {
                        if !level.contains(&s) {
                            level.push(s);
                        }
                    }
                }
            }
        }
        level.sort_by(Slope::farey_cmp);
        out.extend(level);
        h += 1;
    }
    out.truncate(n);
    SlopeSet { slopes: out }
}

/// Vertices on the core circle of each solid torus.
pub const CORE_VERTICES: i64 = 3;

/// Side of the torus grid: wide enough that no grid triangle meets more than
/// two arcs of any slope's projection.
pub fn torus_size(slopes: &SlopeSet) -> i64 {
    let spread = slopes.slopes.iter().map(Slope::spread).max().unwrap_or(1);
    (CORE_VERTICES * spread + 1).max(3)
}

fn grid(n: i64, a: i64, b: i64) -> usize {
    (a.rem_euclid(n) * n + b.rem_euclid(n)) as usize
}

fn torus_triangles(n: i64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let (x, y, z, w) = (grid(n, a, b), grid(n, a + 1, b), grid(n, a, b + 1), grid(n, a + 1, b + 1));
            out.push(vec![x, y, w]);
            out.push(vec![x, z, w]);
        }
    }
    out
}

fn torus_labels(n: i64) -> Vec<String> {
    (0..n).flat_map(|a| (0..n).map(move |b| format!("t{a},{b}"))).collect()
}

/// The `n × n` grid torus, each square split along its main diagonal.
pub fn torus(n: i64) -> SimplicialComplex {
    SimplicialComplex::from_indexed(torus_labels(n), torus_triangles(n))
}

/// Simplicial mapping cylinder of the projection of the torus onto a core
/// circle that collapses the lines of `slope`: the vertex `(a, b)` goes to
/// arc `⌊3·((qa − pb) mod n)/n⌋`. With torus vertices ordered by index, a
/// simplex `v_0 < … < v_k` contributes `{v_0..v_i} ∪ {f(v_i)..f(v_k)}` for
/// every `i`. Core vertices are appended after the torus vertices.
fn cylinder_simplices(n: i64, slope: Slope, core: usize) -> Vec<Vec<usize>> {
    let f = |v: usize| {
        let (a, b) = (v as i64 / n, v as i64 % n);
        let x = (slope.q * a - slope.p * b).rem_euclid(n);
        core + (x * CORE_VERTICES / n) as usize
    };
    let mut out = Vec::new();
    for tri in torus_triangles(n) {
        let mut t = tri.clone();
        t.sort_unstable();
        for i in 0..t.len() {
            let mut s: Vec<usize> = t[..=i].to_vec();
            s.extend(t[i..].iter().map(|&v| f(v)));
            out.push(s);
        }
    }
    out
}

/// The torus of the given size together with the solid torus for one slope.
pub fn solid_torus(n: i64, slope: Slope) -> SimplicialComplex {
    let mut labels = torus_labels(n);
    let core = labels.len();
    labels.extend((0..CORE_VERTICES).map(|j| format!("c0.{j}")));
    SimplicialComplex::from_indexed(labels, cylinder_simplices(n, slope, core))
}

/// Torus with a solid torus for every slope, glued along the whole torus.
pub fn farrell_quotient(slopes: &SlopeSet) -> SimplicialComplex {
    let n = torus_size(slopes);
    let mut labels = torus_labels(n);
    let mut cells = torus_triangles(n);
    for (i, &s) in slopes.slopes.iter().enumerate() {
        let core = labels.len();
        labels.extend((0..CORE_VERTICES).map(|j| format!("c{i}.{j}")));
        cells.extend(cylinder_simplices(n, s, core));
    }
    SimplicialComplex::from_indexed(labels, cells)
}

/// Rank of `H₃` for the first `k` Farey slopes, `k = 1..=n`.
pub fn farrell_h3_growth(n: usize) -> Vec<usize> {
    (1..=n)
        .map(|k| crate::simplicial::homology(&farrell_quotient(&farey_slopes(k)), false).betti(3))
        .collect()
}
