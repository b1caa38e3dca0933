//! Permutations, group orders by Schreier–Sims, and finite-quotient
//! certificates for fundamental groups of presentation complexes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::presentation::{Presentation, PresentationJson};
use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image list.
///
/// Products act left to right: `a.then(&b)` applies `a` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// From zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// From one-line notation on `1..=n`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("one-line notation starts at 1".into()));
        }
        Self::new(images.iter().map(|&x| x - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All permutations of degree `n` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

/// Stabiliser chain: `base[i]` with the transversal of its orbit under the
/// strong generators fixing `base[..i]`.
struct Chain {
    n: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    transversals: Vec<HashMap<usize, Perm>>,
}

impl Chain {
    fn level_gens(&self, i: usize) -> Vec<&Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..i].iter().all(|&b| g.apply(b) == b))
            .collect()
    }

    fn rebuild(&mut self) {
        self.transversals = (0..self.base.len())
            .map(|i| {
                let gens = self.level_gens(i);
                let mut t = HashMap::new();
                t.insert(self.base[i], Perm::identity(self.n));
                let mut queue = vec![self.base[i]];
                while let Some(p) = queue.pop() {
                    let tp = t[&p].clone();
                    for g in &gens {
                        let q = g.apply(p);
                        if let std::collections::hash_map::Entry::Vacant(e) = t.entry(q) {
                            e.insert(tp.then(g));
                            queue.push(q);
                        }
                    }
                }
                t
            })
            .collect();
    }

    fn sift(&self, mut h: Perm, from: usize) -> Perm {
        for i in from..self.base.len() {
            match self.transversals[i].get(&h.apply(self.base[i])) {
                Some(t) => h = h.then(&t.inverse()),
                None => return h,
            }
        }
        h
    }

    fn add(&mut self, g: Perm) {
        while let Some(b) = (0..self.n).find(|&x| {
            !self.base.contains(&x) && self.base.iter().all(|&b| g.apply(b) == b) && g.apply(x) != x
        }) {
            self.base.push(b);
        }
        self.strong.push(g);
        self.rebuild();
    }

    /// First Schreier generator that does not sift to the identity.
    fn failing_schreier(&self) -> Option<Perm> {
        for i in 0..self.base.len() {
            for (p, tp) in &self.transversals[i] {
                for s in self.level_gens(i) {
                    let q = s.apply(*p);
                    let h = tp.then(s).then(&self.transversals[i][&q].inverse());
                    let r = self.sift(h, i + 1);
                    if !r.is_identity() {
                        return Some(r);
                    }
                }
            }
        }
        None
    }
}

/// Order of the group generated by `gens`, by Schreier–Sims: the product
/// of the basic orbit lengths of a stabiliser chain.
pub fn group_order(gens: &[Perm], degree: usize) -> u128 {
    let mut chain = Chain {
        n: degree,
        base: Vec::new(),
        strong: Vec::new(),
        transversals: Vec::new(),
    };
    for g in gens {
        let r = chain.sift(g.clone(), 0);
        if !r.is_identity() {
            chain.add(r);
        }
    }
    while let Some(r) = chain.failing_schreier() {
        chain.add(r);
    }
    chain.transversals.iter().map(|t| t.len() as u128).product()
}

/// A finite quotient witnessing that the fundamental group of the
/// presentation complex is non-trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Certificate {
    pub presentation: PresentationJson,
    pub degree: usize,
    /// One-line notation on `1..=degree`, one permutation per generator.
    pub images: Vec<Vec<usize>>,
    pub checks: CertificateChecks,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    /// Whether each relator maps to the identity.
    pub relator_kill: Vec<bool>,
    /// Order of the subgroup generated by the images.
    pub image_order: u64,
    pub nontrivial: bool,
}

fn evaluate(p: &Presentation, images: &[Perm], relator: usize, degree: usize) -> Perm {
    let inverses: Vec<Perm> = images.iter().map(Perm::inverse).collect();
    p.relators()[relator].iter().fold(Perm::identity(degree), |acc, l| {
        acc.then(if l.inverse {
            &inverses[l.generator]
        } else {
            &images[l.generator]
        })
    })
}

fn checks(p: &Presentation, images: &[Perm], degree: usize) -> CertificateChecks {
    let relator_kill: Vec<bool> = (0..p.relators().len())
        .map(|r| evaluate(p, images, r, degree).is_identity())
        .collect();
    let order = group_order(images, degree);
    CertificateChecks {
        relator_kill,
        image_order: u64::try_from(order).unwrap_or(u64::MAX),
        nontrivial: order > 1,
    }
}

/// Checks a candidate homomorphism to the symmetric group. A relator that
/// survives makes the certificate invalid rather than an error.
pub fn pi1_certificate(p: &Presentation, images: &[Vec<usize>]) -> Result<Pi1Certificate> {
    if images.len() != p.generators().len() {
        return Err(Error::ArityMismatch {
            expected: p.generators().len(),
            got: images.len(),
        });
    }
    let perms: Vec<Perm> = images.iter().map(|im| Perm::from_one_line(im)).collect::<Result<_>>()?;
    let degree = perms.first().map_or(0, Perm::degree);
    if perms.iter().any(|q| q.degree() != degree) {
        return Err(Error::InvalidPermutation("images have different degrees".into()));
    }
    let checks = checks(p, &perms, degree);
    let valid = checks.relator_kill.iter().all(|&k| k) && checks.nontrivial;
    Ok(Pi1Certificate {
        presentation: p.to_json(),
        degree,
        images: images.to_vec(),
        checks,
        valid,
    })
}

impl Pi1Certificate {
    /// Recomputes every check from the stored fields and compares.
    pub fn reverify(&self) -> bool {
        let Ok(p) = Presentation::from_json(&self.presentation) else {
            return false;
        };
        match pi1_certificate(&p, &self.images) {
            Ok(fresh) => fresh == *self && fresh.degree == self.degree,
            Err(_) => false,
        }
    }
}

/// Lexicographically least tuple of degree-`n` permutations that kills every
/// relator and generates a non-trivial group, by exhaustive search.
pub fn search_certificate(p: &Presentation, degree: usize) -> Option<Pi1Certificate> {
    let all = Perm::all(degree);
    let k = p.generators().len();
    let mut choice = vec![0usize; k];
    loop {
        let images: Vec<Perm> = choice.iter().map(|&i| all[i].clone()).collect();
        let killed = (0..p.relators().len()).all(|r| evaluate(p, &images, r, degree).is_identity());
        if killed && group_order(&images, degree) > 1 {
            let lines: Vec<Vec<usize>> = images.iter().map(Perm::one_line).collect();
            return pi1_certificate(p, &lines).ok();
        }
        // odometer, last generator fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < all.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}
