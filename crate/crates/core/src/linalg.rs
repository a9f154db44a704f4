//! Exact rank, span membership and derivative closure over the integers.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::delta::DeltaPolynomial;
use crate::error::Result;
use crate::poly::{Monomial, Polynomial};

type SparseRow = Vec<(usize, BigInt)>;

/// Rows over a column dictionary of monomials.
#[derive(Debug, Clone, Default)]
pub struct SparseIntMatrix {
    rows: Vec<SparseRow>,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl SparseIntMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polynomials<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut m = Self::new();
        for p in polys {
            m.push_polynomial(p);
        }
        m
    }

    /// Builds from dense integer rows; column `j` is keyed by `x_1^j`.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut m = Self::new();
        for j in 0..width {
            m.column_of(&Monomial::x_pow(1, 0, j as u8));
        }
        for r in rows {
            let row = r
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, BigInt::from(v)))
                .collect();
            m.rows.push(row);
        }
        m
    }

    fn column_of(&mut self, m: &Monomial) -> usize {
        if let Some(&j) = self.index.get(m) {
            return j;
        }
        let j = self.columns.len();
        self.columns.push(m.clone());
        self.index.insert(m.clone(), j);
        j
    }

    /// Appends `p` as a row; returns its index.
    pub fn push_polynomial(&mut self, p: &Polynomial) -> usize {
        let mut terms: Vec<_> = p.terms().collect();
        terms.sort_by(|a, b| a.0.cmp(b.0));
        let mut row: SparseRow = terms
            .into_iter()
            .map(|(m, c)| (self.column_of(m), c.clone()))
            .collect();
        row.sort_by_key(|e| e.0);
        self.rows.push(row);
        self.rows.len() - 1
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.rows[i]
    }

    /// Keeps the listed rows in the given order.
    pub fn select_rows(&self, order: &[usize]) -> SparseIntMatrix {
        SparseIntMatrix {
            rows: order.iter().map(|&i| self.rows[i].clone()).collect(),
            columns: self.columns.clone(),
            index: self.index.clone(),
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &BigInt) {
        assert!(!c.is_zero(), "scaling by zero");
        for e in &mut self.rows[i] {
            e.1 *= c;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    FractionFreeExact,
    ModularPrescreenThenExact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub method: RankMethod,
    /// `(row, pivot column)` in insertion order; replaying the rows in this
    /// order reproduces the same pivots.
    pub pivots: Vec<(usize, usize)>,
    pub row_order: Vec<usize>,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
}

/// Incremental row echelon form. Each stored row is primitive and has its
/// smallest column as pivot.
#[derive(Debug, Clone, Default)]
pub struct Eliminator {
    basis: BTreeMap<usize, SparseRow>,
}

fn content(row: &SparseRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = content(row);
    if row.first().is_some_and(|e| e.1.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for e in row.iter_mut() {
            e.1 /= &g;
        }
    }
}

/// `a * v - b * w`, merged by column.
fn combine(v: &SparseRow, a: &BigInt, w: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let ci = v.get(i).map_or(usize::MAX, |e| e.0);
        let cj = w.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &v[i].1 * a));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&w[j].1 * b)));
            j += 1;
        } else {
            let c = &v[i].1 * a - &w[j].1 * b;
            if !c.is_zero() {
                out.push((ci, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Eliminator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; returns the nonzero remainder.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, _)) = row.first() {
            let Some(b) = self.basis.get(c) else {
                break;
            };
            let lead_b = &b[0].1;
            let lead_v = row[0].1.clone();
            let g = lead_b.gcd(&lead_v);
            row = combine(&row, &(lead_b / &g), b, &(&lead_v / &g));
            make_primitive(&mut row);
        }
        row
    }

    /// Inserts a row; returns its pivot column if it raised the rank.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return None;
        }
        make_primitive(&mut row);
        let pivot = row[0].0;
        self.basis.insert(pivot, row);
        Some(pivot)
    }

    pub fn is_independent(&self, row: &SparseRow) -> bool {
        !self.reduce(row.clone()).is_empty()
    }
}

/// Exact rank by fraction-free elimination over the rows in order.
pub fn rank(m: &SparseIntMatrix) -> RankCertificate {
    let order: Vec<usize> = (0..m.n_rows()).collect();
    exact_in_order(m, order, RankMethod::FractionFreeExact, None, None)
}

fn exact_in_order(
    m: &SparseIntMatrix,
    order: Vec<usize>,
    method: RankMethod,
    prime: Option<u64>,
    seed: Option<u64>,
) -> RankCertificate {
    let mut el = Eliminator::new();
    let mut pivots = Vec::new();
    for &i in &order {
        if let Some(c) = el.insert(m.rows[i].clone()) {
            pivots.push((i, c));
        }
    }
    RankCertificate {
        rank: el.rank(),
        method,
        pivots,
        row_order: order,
        prime,
        seed,
    }
}

/// Reruns the exact elimination in the recorded order and compares.
pub fn replay(m: &SparseIntMatrix, cert: &RankCertificate) -> bool {
    let again = exact_in_order(m, cert.row_order.clone(), cert.method, cert.prime, cert.seed);
    again.rank == cert.rank && again.pivots == cert.pivots
}

/// Rank with a modular pass at a random prime above `2^30`.
///
/// Rows independent mod p are independent over the rationals, so a full
/// modular rank settles the answer. Otherwise the modular pivot rows are
/// moved to the front and the exact elimination decides.
pub fn rank_with_prescreen(m: &SparseIntMatrix, seed: u64) -> RankCertificate {
    let p = random_prime(seed);
    let independent = modular_independent_rows(m, p);
    if independent.len() == m.n_rows() {
        let pivots = independent.iter().map(|&(i, c)| (i, c)).collect();
        return RankCertificate {
            rank: independent.len(),
            method: RankMethod::ModularPrescreenThenExact,
            pivots,
            row_order: (0..m.n_rows()).collect(),
            prime: Some(p),
            seed: Some(seed),
        };
    }
    let mut order: Vec<usize> = independent.iter().map(|e| e.0).collect();
    let mut seen = vec![false; m.n_rows()];
    for &i in &order {
        seen[i] = true;
    }
    order.extend((0..m.n_rows()).filter(|&i| !seen[i]));
    exact_in_order(m, order, RankMethod::ModularPrescreenThenExact, Some(p), Some(seed))
}

/// A prime in `(2^30, 2^31)` drawn from the seed.
pub fn random_prime(seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c = rng.gen_range((1u64 << 30) + 1..(1u64 << 31)) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn modular_independent_rows(m: &SparseIntMatrix, p: u64) -> Vec<(usize, usize)> {
    let pb = BigInt::from(p);
    let mut basis: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, r) in m.rows.iter().enumerate() {
        let mut row: Vec<(usize, u64)> = r
            .iter()
            .map(|(j, c)| (*j, c.mod_floor(&pb).to_u64().unwrap()))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(c, lead)) = row.first() {
            let Some(b) = basis.get(&c) else {
                break;
            };
            // basis rows are monic
            let mut merged = Vec::with_capacity(row.len() + b.len());
            let (mut x, mut y) = (0, 0);
            while x < row.len() || y < b.len() {
                let cx = row.get(x).map_or(usize::MAX, |e| e.0);
                let cy = b.get(y).map_or(usize::MAX, |e| e.0);
                if cx < cy {
                    merged.push(row[x]);
                    x += 1;
                } else {
                    let sub = (lead as u128 * b[y].1 as u128 % p as u128) as u64;
                    let v = if cx == cy { row[x].1 } else { 0 };
                    let val = (v + p - sub) % p;
                    if val != 0 {
                        merged.push((cy, val));
                    }
                    if cx == cy {
                        x += 1;
                    }
                    y += 1;
                }
            }
            row = merged;
        }
        if let Some(&(c, lead)) = row.first() {
            let inv = pow_mod(lead, p - 2, p);
            for e in row.iter_mut() {
                e.1 = (e.1 as u128 * inv as u128 % p as u128) as u64;
            }
            basis.insert(c, row);
            out.push((i, c));
        }
    }
    out
}

/// Rational coefficients expressing `target` in `vectors`, or `None` when it
/// lies outside their span.
pub fn in_span(vectors: &[Polynomial], target: &Polynomial) -> Option<Vec<BigRational>> {
    let k = vectors.len();
    let mut mat = SparseIntMatrix::from_polynomials(vectors);
    let t = mat.push_polynomial(target);
    // each stored row carries its combination of the inputs in extra columns
    let base = mat.n_cols();
    let mut basis: BTreeMap<usize, SparseRow> = BTreeMap::new();
    let tracked = |i: usize, row: &SparseRow| -> SparseRow {
        let mut r = row.clone();
        r.push((base + i, BigInt::one()));
        r
    };
    let reduce = |basis: &BTreeMap<usize, SparseRow>, mut row: SparseRow| -> SparseRow {
        while let Some((c, _)) = row.first() {
            if *c >= base {
                break;
            }
            let Some(b) = basis.get(c) else {
                break;
            };
            let lead_b = &b[0].1;
            let lead_v = row[0].1.clone();
            let g = lead_b.gcd(&lead_v);
            row = combine(&row, &(lead_b / &g), b, &(&lead_v / &g));
            make_primitive(&mut row);
        }
        row
    };
    for i in 0..k {
        let row = reduce(&basis, tracked(i, &mat.rows[i]));
        if row.first().is_some_and(|e| e.0 < base) {
            basis.insert(row[0].0, row);
        }
    }
    // target gets index k in the combination columns
    let row = reduce(&basis, tracked(k, &mat.rows[t]));
    if row.first().is_some_and(|e| e.0 < base) {
        return None;
    }
    // row = a * target + sum c_i v_i = 0
    let a = row.iter().find(|e| e.0 == base + k)?.1.clone();
    let mut coeffs = vec![BigRational::zero(); k];
    for (j, c) in row {
        if j >= base && j < base + k {
            coeffs[j - base] = BigRational::new(-c, a.clone());
        }
    }
    Some(coeffs)
}

/// Dimensions of a space of bihomogeneous polynomials, by bidegree.
pub type GradedTable = BTreeMap<(usize, usize), usize>;

#[derive(Debug, Clone)]
pub struct Closure {
    pub dimension: usize,
    pub table: GradedTable,
    /// A basis, in insertion order.
    pub basis: Vec<Polynomial>,
}

/// Rank-increasing insertion per bidegree over a shared column dictionary.
#[derive(Default)]
struct GradedSpan {
    dict: HashMap<Monomial, usize>,
    parts: HashMap<(usize, usize), Eliminator>,
}

impl GradedSpan {
    fn row(&mut self, p: &Polynomial) -> SparseRow {
        let mut row: SparseRow = p
            .terms()
            .map(|(m, c)| {
                let next = self.dict.len();
                (*self.dict.entry(m.clone()).or_insert(next), c.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }

    fn insert(&mut self, p: &Polynomial) -> bool {
        let Some(bd) = p.bidegree() else {
            return false;
        };
        let row = self.row(p);
        self.parts.entry(bd).or_default().insert(row).is_some()
    }

    fn table(&self) -> GradedTable {
        self.parts
            .iter()
            .filter(|(_, e)| e.rank() > 0)
            .map(|(&k, e)| (k, e.rank()))
            .collect()
    }
}

/// The span of all partial derivatives of `seeds`, explored breadth first.
///
/// Every inserted polynomial has each single-variable derivative tested for
/// independence, so the final span is closed under differentiation.
pub fn closure_of(seeds: &[Polynomial]) -> Closure {
    let mut span = GradedSpan::default();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if !s.is_zero() && span.insert(s) {
            basis.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        let n = p.n();
        let children: Vec<Polynomial> = (0..2 * n)
            .into_par_iter()
            .map(|v| {
                let op = if v < n {
                    Monomial::x_pow(n, v, 1)
                } else {
                    Monomial::y_pow(n, v - n, 1)
                };
                p.apply_diff(&op)
            })
            .collect();
        for c in children {
            if !c.is_zero() && span.insert(&c) {
                basis.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    Closure {
        dimension: basis.len(),
        table: span.table(),
        basis,
    }
}

/// `dim M_mu` and its bigraded table.
pub fn derivative_closure(delta: &DeltaPolynomial, limit: usize) -> Result<Closure> {
    crate::check_size(delta.n(), limit)?;
    Ok(closure_of(std::slice::from_ref(&delta.value)))
}

/// The part of `M_mu` of x-degree `d`: all `d_x^a Delta` with
/// `|a| = n(mu) - d`, closed under y-derivatives.
pub fn graded_slice(delta: &DeltaPolynomial, x_degree: usize, limit: usize) -> Result<Closure> {
    crate::check_size(delta.n(), limit)?;
    let n = delta.n();
    let (top, _) = delta.bidegree;
    if x_degree > top {
        return Ok(Closure {
            dimension: 0,
            table: GradedTable::new(),
            basis: Vec::new(),
        });
    }
    // x-derivatives level by level, keeping only a basis of each level
    let mut level = vec![delta.value.clone()];
    for _ in 0..top - x_degree {
        let mut span = GradedSpan::default();
        let mut next = Vec::new();
        for p in &level {
            for i in 0..n {
                let c = p.apply_diff(&Monomial::x_pow(n, i, 1));
                if !c.is_zero() && span.insert(&c) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    let mut span = GradedSpan::default();
    let mut basis = Vec::new();
    let mut queue: VecDeque<Polynomial> = VecDeque::new();
    for p in level {
        if span.insert(&p) {
            basis.push(p.clone());
            queue.push_back(p);
        }
    }
    while let Some(p) = queue.pop_front() {
        for i in 0..n {
            let c = p.apply_diff(&Monomial::y_pow(n, i, 1));
            if !c.is_zero() && span.insert(&c) {
                basis.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    Ok(Closure {
        dimension: basis.len(),
        table: span.table(),
        basis,
    })
}
