//! Smith normal form over the integers.
//!
//! Sparse boundary matrices are first reduced by unimodular eliminations on
//! unit pivots (Markowitz-style: shortest column, then shortest row). What is
//! left has no entry of absolute value one and is diagonalised densely with
//! arbitrary-precision arithmetic.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column-major sparse integer matrix. Each column is sorted by row.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x != 0 {
                    m.cols[c].push((r, BigInt::from(x)));
                }
            }
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.ncols]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col {
                d[*r][c] = x.clone();
            }
        }
        d
    }

    /// `self * other`, used to check that consecutive boundaries compose to zero.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = SparseMatrix::new(self.nrows, other.ncols);
        for (c, col) in other.cols.iter().enumerate() {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, x) in col {
                for (r, y) in &self.cols[*k] {
                    *acc.entry(*r).or_insert_with(BigInt::zero) += x * y;
                }
            }
            out.cols[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// Non-zero invariant factors `d_1 | d_2 | ... | d_r`, all positive. The
/// length is the rank.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let (units, rest) = eliminate_unit_pivots(m);
    let mut out = vec![BigInt::one(); units];
    out.extend(dense_invariant_factors(rest));
    out
}

/// Returns the number of unit pivots removed and the residual dense block.
fn eliminate_unit_pivots(m: &SparseMatrix) -> (usize, Vec<Vec<BigInt>>) {
    let mut cols: Vec<Vec<(usize, BigInt)>> = m.cols.clone();
    let mut rows: Vec<HashSet<usize>> = vec![HashSet::new(); m.nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col {
            rows[*r].insert(c);
        }
    }
    let mut alive_col = vec![true; m.ncols];
    let mut alive_row = vec![true; m.nrows];
    let mut heap: BinaryHeap<(Reverse<usize>, Reverse<usize>)> =
        cols.iter().enumerate().map(|(c, col)| (Reverse(col.len()), Reverse(c))).collect();
    let mut units = 0;

    while let Some((Reverse(len), Reverse(c))) = heap.pop() {
        if !alive_col[c] || cols[c].len() != len {
            continue;
        }
        if len == 0 {
            alive_col[c] = false;
            continue;
        }
        let pivot = cols[c]
            .iter()
            .filter(|(_, x)| x.abs().is_one())
            .min_by_key(|(r, _)| (rows[*r].len(), *r))
            .cloned();
        let Some((pr, pval)) = pivot else {
            continue;
        };
        let pivot_col = std::mem::take(&mut cols[c]);
        let mut others: Vec<usize> = rows[pr].iter().copied().filter(|&c2| c2 != c).collect();
        others.sort_unstable();
        for c2 in others {
            let a = cols[c2]
                .iter()
                .find(|(r, _)| *r == pr)
                .map(|(_, x)| x.clone())
                .expect("row index out of sync");
            // pval is a unit, so a/pval == a*pval
            let factor = &a * &pval;
            let updated = axpy(&cols[c2], &factor, &pivot_col);
            for (r, _) in &cols[c2] {
                rows[*r].remove(&c2);
            }
            for (r, _) in &updated {
                rows[*r].insert(c2);
            }
            cols[c2] = updated;
            heap.push((Reverse(cols[c2].len()), Reverse(c2)));
        }
        for (r, _) in &pivot_col {
            rows[*r].remove(&c);
        }
        debug_assert!(rows[pr].is_empty());
        alive_col[c] = false;
        alive_row[pr] = false;
        units += 1;
    }

    let live_cols: Vec<usize> = (0..m.ncols).filter(|&c| !cols[c].is_empty()).collect();
    let live_rows: Vec<usize> = (0..m.nrows).filter(|&r| alive_row[r] && !rows[r].is_empty()).collect();
    let mut row_pos = vec![usize::MAX; m.nrows];
    for (i, &r) in live_rows.iter().enumerate() {
        row_pos[r] = i;
    }
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (j, &c) in live_cols.iter().enumerate() {
        for (r, x) in &cols[c] {
            dense[row_pos[*r]][j] = x.clone();
        }
    }
    (units, dense)
}

/// `target - factor * source` on sorted sparse columns.
fn axpy(target: &[(usize, BigInt)], factor: &BigInt, source: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map_or(usize::MAX, |e| e.0);
        let sj = source.get(j).map_or(usize::MAX, |e| e.0);
        if ti < sj {
            out.push(target[i].clone());
            i += 1;
        } else if sj < ti {
            out.push((sj, -(factor * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - factor * &source[j].1;
            if !v.is_zero() {
                out.push((ti, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dense Smith normal form; returns the positive diagonal entries.
pub fn dense_invariant_factors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest non-zero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let (pr, r) = (&head[t], &mut tail[0]);
                for j in t..ncols {
                    let delta = &q * &pr[j];
                    r[j] -= delta;
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                // enforce d_t | every remaining entry
                let p = a[t][t].clone();
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &p).is_zero()));
                match bad {
                    None => break,
                    Some(i) => {
                        let (head, tail) = a.split_at_mut(i);
                        for j in t..ncols {
                            head[t][j] += &tail[0][j];
                        }
                        continue;
                    }
                }
            }
            // move the new smallest entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..nrows {
                if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}
