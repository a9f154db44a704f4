//! Oracles written independently of the library code they check.

#![allow(dead_code)]

use std::collections::HashMap;

use ghmodule::{Monomial, Polynomial};
use num_traits::ToPrimitive;

pub fn fact(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binom(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    (0..r as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Every hook `(K, L)` with `K + L + 1 <= n_max`.
pub fn hooks(n_max: usize) -> Vec<(usize, usize)> {
    (1..=n_max)
        .flat_map(|n| (0..n).map(move |k| (k, n - 1 - k)))
        .collect()
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let w = parts.first().copied().unwrap_or(0);
    (1..=w).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

/// `n! / prod(mu'_i!)`.
pub fn zero_x_dim(parts: &[usize]) -> u64 {
    let n: usize = parts.iter().sum();
    fact(n) / conjugate(parts).iter().map(|&c| fact(c)).product::<u64>()
}

/// Partitions of `n`, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

const P: u64 = 2_147_483_647;

fn inv(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank modulo `2^31 - 1` by dense Gaussian elimination. Never exceeds the
/// rational rank, so equality with the row count proves independence.
pub fn rank_mod_p(polys: &[Polynomial]) -> usize {
    let mut cols: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for m in p.monomials() {
            let k = cols.len();
            cols.entry(m.clone()).or_insert(k);
        }
    }
    let mut rows: Vec<Vec<u64>> = polys
        .iter()
        .map(|p| {
            let mut r = vec![0u64; cols.len()];
            for (m, c) in p.terms() {
                let v = (c % P as i64).to_i64().unwrap();
                r[cols[m]] = v.rem_euclid(P as i64) as u64;
            }
            r
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let f = inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|v| v * f % P).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let t = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - t * p % P) % P;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// `h_1(x_1..x_n) = x_1 + ... + x_n` built term by term.
pub fn power_sum_x(n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for i in 0..n {
        p.add_term(Monomial::x_pow(n, i, 1), 1.into());
    }
    p
}
