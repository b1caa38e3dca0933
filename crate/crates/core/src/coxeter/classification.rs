//! Finite irreducible Coxeter types, matched against connected components of
//! the Coxeter diagram.

use std::fmt;

/// A finite irreducible Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral of order `2m`, for `m ≥ 5` or `m = 4`; `I2(3)` is `A2`.
    I2(u32),
}

impl FiniteType {
    /// Order of the group.
    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(_) => 696_729_600,
            FiniteType::F4 => 1152,
            FiniteType::H(3) => 120,
            FiniteType::H(_) => 14_400,
            FiniteType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Classifies one connected diagram. `label(i, j)` is the Coxeter entry
/// between component members `i` and `j` (`None` for ∞); pairs with entry 2
/// are not diagram edges. Returns `None` when the group is infinite.
pub fn classify_component(n: usize, label: impl Fn(usize, usize) -> Option<u32>) -> Option<FiniteType> {
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match label(i, j) {
                Some(2) => {}
                Some(m) => edges.push((i, j, m)),
                None => return None,
            }
        }
    }
    if n == 2 {
        let m = edges.first()?.2;
        return Some(if m == 3 { FiniteType::A(2) } else { FiniteType::I2(m) });
    }
    // must be a tree (connected with n - 1 edges)
    if edges.len() != n - 1 {
        return None;
    }
    let mut degree = vec![0usize; n];
    for &(i, j, _) in &edges {
        degree[i] += 1;
        degree[j] += 1;
    }
    if degree.iter().any(|&d| d > 3) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] == 3).collect();
    if branch.len() > 1 {
        return None;
    }
    if let Some(&centre) = branch.first() {
        if edges.iter().any(|e| e.2 != 3) {
            return None;
        }
        let mut legs = leg_lengths(n, &edges, centre);
        legs.sort_unstable();
        return match legs.as_slice() {
            [1, 1, k] => Some(FiniteType::D(k + 3)),
            [1, 2, 2] => Some(FiniteType::E(6)),
            [1, 2, 3] => Some(FiniteType::E(7)),
            [1, 2, 4] => Some(FiniteType::E(8)),
            _ => None,
        };
    }
    // a path: read the labels from one end
    let start = (0..n).find(|&v| degree[v] == 1)?;
    let labels = path_labels(n, &edges, start);
    let heavy: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, m)| m != 3).collect();
    let last = labels.len() - 1;
    match heavy.as_slice() {
        [] => Some(FiniteType::A(n)),
        [(pos, 4)] if *pos == 0 || *pos == last => Some(FiniteType::B(n)),
        [(1, 4)] if n == 4 => Some(FiniteType::F4),
        [(pos, 5)] if (*pos == 0 || *pos == last) && n <= 4 => Some(FiniteType::H(n)),
        _ => None,
    }
}

fn neighbours(edges: &[(usize, usize, u32)], v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
    edges.iter().filter_map(move |&(i, j, m)| {
        if i == v {
            Some((j, m))
        } else if j == v {
            Some((i, m))
        } else {
            None
        }
    })
}

fn leg_lengths(n: usize, edges: &[(usize, usize, u32)], centre: usize) -> Vec<usize> {
    let mut legs = Vec::new();
    for (first, _) in neighbours(edges, centre) {
        let mut len = 1;
        let (mut prev, mut cur) = (centre, first);
        loop {
            let next: Vec<usize> = neighbours(edges, cur).map(|e| e.0).filter(|&x| x != prev).collect();
            match next.as_slice() {
                [x] if len < n => {
                    prev = cur;
                    cur = *x;
                    len += 1;
                }
                _ => break,
            }
        }
        legs.push(len);
    }
    legs
}

fn path_labels(n: usize, edges: &[(usize, usize, u32)], start: usize) -> Vec<u32> {
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    while labels.len() < n - 1 {
        let Some((next, m)) = neighbours(edges, cur).find(|e| e.0 != prev) else {
            break;
        };
        labels.push(m);
        prev = cur;
        cur = next;
    }
    labels
}
