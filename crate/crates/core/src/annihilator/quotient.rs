//! Graded dimensions of `C[x, y] / I` for the generator ideal of a hook.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{Eliminator, GradedTable};
use crate::poly::Monomial;

#[derive(Debug, Clone, Serialize)]
pub struct QuotientTable {
    /// Keyed by operator bidegree `(x-degree, y-degree)`.
    pub table: GradedTable,
    pub total: usize,
    /// Whether every bidegree just outside the grid has dimension zero.
    pub boundary_zero: bool,
}

/// Exponent vectors of length `n` with sum `d`, at most `support` nonzero
/// entries, and zeros wherever `blocked` is set.
fn vectors(n: usize, d: usize, support: usize, blocked: &[bool]) -> Vec<Vec<u8>> {
    fn rec(i: usize, left: usize, used: usize, support: usize, blocked: &[bool], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        rec(i + 1, left, used, support, blocked, cur, out);
        if blocked[i] || used == support {
            return;
        }
        for e in 1..=left {
            cur[i] = e as u8;
            rec(i + 1, left - e, used + 1, support, blocked, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, 0, support, blocked, &mut vec![0; n], &mut out);
    out
}

/// Monomials of bidegree `(a, b)` outside the monomial part of the ideal:
/// no index shared by x and y, at most `l` x-indices, at most `k` y-indices.
fn standard(n: usize, k: usize, l: usize, a: usize, b: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for x in vectors(n, a, l, &vec![false; n]) {
        let blocked: Vec<bool> = x.iter().map(|&e| e > 0).collect();
        for y in vectors(n, b, k, &blocked) {
            out.push(Monomial::new(&x, &y));
        }
    }
    out
}

fn is_standard(m: &Monomial, k: usize, l: usize) -> bool {
    !m.has_mixed_index()
        && m.x().iter().filter(|&&e| e > 0).count() <= l
        && m.y().iter().filter(|&&e| e > 0).count() <= k
}

/// All exponent vectors of `h_i` in `n` variables.
fn h_terms(n: usize, i: usize) -> Vec<Vec<u8>> {
    vectors(n, i, n, &vec![false; n])
}

/// Dimension of the quotient in one bidegree: standard monomials modulo
/// the images of `h_i(X_n) m` and `h_i(Y_n) m`.
fn graded_dim(n: usize, k: usize, l: usize, a: usize, b: usize) -> usize {
    let target = standard(n, k, l, a, b);
    if target.is_empty() {
        return 0;
    }
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut el = Eliminator::new();
    for x_alpha in [true, false] {
        let deg = if x_alpha { a } else { b };
        for i in 1..=deg.min(n) {
            let hs = h_terms(n, i);
            let (sa, sb) = if x_alpha { (a - i, b) } else { (a, b - i) };
            for m in standard(n, k, l, sa, sb) {
                let mut row: Vec<(usize, BigInt)> = hs
                    .iter()
                    .filter_map(|e| {
                        let mut t = m.clone();
                        let slot = if x_alpha { t.x_mut() } else { t.y_mut() };
                        for (s, d) in slot.iter_mut().zip(e) {
                            *s += d;
                        }
                        if is_standard(&t, k, l) {
                            index.get(&t).map(|&j| (j, BigInt::one()))
                        } else {
                            None
                        }
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                el.insert(row);
                if el.rank() == target.len() {
                    return 0;
                }
            }
        }
    }
    target.len() - el.rank()
}

/// The bigraded dimensions of the quotient by the generator ideal of
/// `(k+1, 1^l)` over the box `a <= L(L+1)/2`, `b <= K(K+1)/2`, with the
/// shell just outside the box checked for zeros.
pub fn quotient_hilbert(k: usize, l: usize, limit: usize) -> Result<QuotientTable> {
    let n = k + l + 1;
    crate::check_size(n, limit)?;
    let (max_a, max_b) = (l * (l + 1) / 2, k * (k + 1) / 2);
    let cells: Vec<(usize, usize)> = (0..=max_a).flat_map(|a| (0..=max_b).map(move |b| (a, b))).collect();
    let dims: Vec<((usize, usize), usize)> = cells
        .par_iter()
        .map(|&(a, b)| ((a, b), graded_dim(n, k, l, a, b)))
        .collect();
    let mut shell: Vec<(usize, usize)> = (0..=max_b + 1).map(|b| (max_a + 1, b)).collect();
    shell.extend((0..=max_a).map(|a| (a, max_b + 1)));
    let boundary_zero = shell.par_iter().all(|&(a, b)| graded_dim(n, k, l, a, b) == 0);
    let table: GradedTable = dims.into_iter().filter(|&(_, d)| d > 0).collect();
    let total = table.values().sum();
    Ok(QuotientTable {
        table,
        total,
        boundary_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_11() {
        let q = quotient_hilbert(1, 1, 9).unwrap();
        let want: GradedTable = [((0, 0), 1), ((1, 0), 2), ((0, 1), 2), ((1, 1), 1)].into();
        assert_eq!(q.table, want);
        assert_eq!(q.total, 6);
        assert!(q.boundary_zero);
    }

    #[test]
    fn trivial_and_one_row() {
        assert_eq!(quotient_hilbert(0, 0, 9).unwrap().total, 1);
        for k in 0..5usize {
            let q = quotient_hilbert(k, 0, 9).unwrap();
            assert_eq!(q.total, (1..=k + 1).product::<usize>());
            assert!(q.boundary_zero);
        }
    }
}
