//! Drawings for arbitrary partitions in x-degree zero.
//!
//! A drawing lines up the `n - 1` nonzero biexponents `(p, q)` as bars at
//! places `1..n-1`; a bar carries `p` x-cells, all crossed, and `q` y-cells,
//! some crossed. Bars with the same `p` appear in decreasing `q`. A bar to
//! the left of a bar with more x-cells and `q'` y-cells keeps at least
//! `q' + 1` white y-cells.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::delta::DeltaPolynomial;
use crate::error::{Error, Result};
use crate::hook::Side;
use crate::linalg::{graded_slice, rank, SparseIntMatrix};
use crate::partition::{factorial, Partition};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bar {
    pub nx: usize,
    pub ny: usize,
    pub y_crosses: usize,
}

impl Bar {
    pub fn whites(&self) -> usize {
        self.ny - self.y_crosses
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneralDrawing {
    pub mu: Partition,
    pub bars: Vec<Bar>,
}

/// Smallest number of white y-cells each bar needs, given the bars after it.
fn white_floor(bars: &[(usize, usize)]) -> Vec<usize> {
    (0..bars.len())
        .map(|i| {
            bars[i + 1..]
                .iter()
                .filter(|b| b.0 > bars[i].0)
                .map(|b| b.1 + 1)
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Bars grouped by x-count; each group sorted by decreasing y-count.
fn groups(mu: &Partition) -> Vec<Vec<usize>> {
    let be = mu.biexponents();
    let top = be.iter().map(|b| b.p).max().unwrap_or(0);
    (0..=top)
        .map(|p| {
            let mut qs: Vec<usize> = be.iter().filter(|b| b.p == p && (b.p, b.q) != (0, 0)).map(|b| b.q).collect();
            qs.sort_unstable_by(|a, b| b.cmp(a));
            qs
        })
        .collect()
}

/// Every bar order allowed by the equal-x rule, by x-count word.
fn bar_orders(mu: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn rec(groups: &[Vec<usize>], used: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, total: usize, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for p in 0..groups.len() {
            if used[p] < groups[p].len() {
                cur.push((p, groups[p][used[p]]));
                used[p] += 1;
                rec(groups, used, cur, total, out);
                used[p] -= 1;
                cur.pop();
            }
        }
    }
    let g = groups(mu);
    let total = g.iter().map(Vec::len).sum();
    let mut out = Vec::new();
    rec(&g, &mut vec![0; g.len()], &mut Vec::new(), total, &mut out);
    out
}

/// All drawings of `mu`, by bar order then cross vector.
pub fn enumerate_general(mu: &Partition, limit: usize) -> Result<Vec<GeneralDrawing>> {
    crate::check_size(mu.n(), limit)?;
    let mut out = Vec::new();
    for order in bar_orders(mu) {
        let floor = white_floor(&order);
        if order.iter().zip(&floor).any(|(b, &f)| f > b.1) {
            continue;
        }
        let ranges: Vec<usize> = order.iter().zip(&floor).map(|(b, &f)| b.1 - f).collect();
        let mut crosses = vec![0usize; order.len()];
        loop {
            out.push(GeneralDrawing {
                mu: mu.clone(),
                bars: order
                    .iter()
                    .zip(&crosses)
                    .map(|(&(nx, ny), &c)| Bar { nx, ny, y_crosses: c })
                    .collect(),
            });
            // odometer, last place fastest
            let Some(i) = (0..order.len()).rev().find(|&i| crosses[i] < ranges[i]) else {
                break;
            };
            crosses[i] += 1;
            crosses[i + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub count: BigUint,
    pub expected: BigUint,
    pub pass: bool,
}

pub fn count_check(mu: &Partition, limit: usize) -> Result<CountCheck> {
    let count = BigUint::from(enumerate_general(mu, limit)?.len());
    let expected = mu.zero_x_degree_dimension();
    Ok(CountCheck {
        pass: count == expected,
        count,
        expected,
    })
}

/// `n!/mu'! = sum_j alpha_j (n-1)!/(mu^j)'!` over the corners `j`, with
/// `alpha_j` the number of columns as tall as the corner's column.
pub fn corner_recursion_check(mu: &Partition) -> bool {
    let n = mu.n();
    let conj = mu.conjugate();
    let mut sum = BigUint::from(0u32);
    for (row, col) in mu.corners() {
        let height = conj.parts()[col];
        debug_assert_eq!(height, row + 1);
        let alpha = conj.parts().iter().filter(|&&c| c == height).count();
        let smaller = mu
            .remove_corner(row)
            .map_or_else(|| BigUint::from(1u32), |m| factorial(n - 1) / m.conjugate_factorial());
        sum += smaller * alpha;
    }
    sum == mu.zero_x_degree_dimension()
}

impl GeneralDrawing {
    pub fn n(&self) -> usize {
        self.mu.n()
    }

    /// `(S, T)`: crosses (all x-cells and the crossed y-cells) and white
    /// y-cells, as operators over `n` variables.
    pub fn split(&self) -> (Monomial, Monomial) {
        let n = self.n();
        let mut s = Monomial::one(n);
        let mut t = Monomial::one(n);
        for (i, b) in self.bars.iter().enumerate() {
            s.x_mut()[i] = b.nx as u8;
            s.y_mut()[i] = b.y_crosses as u8;
            t.y_mut()[i] = b.whites() as u8;
        }
        (s, t)
    }

    pub fn is_valid(&self) -> bool {
        let mut want: Vec<(usize, usize)> = self
            .mu
            .biexponents()
            .iter()
            .filter(|b| (b.p, b.q) != (0, 0))
            .map(|b| (b.p, b.q))
            .collect();
        let shape: Vec<(usize, usize)> = self.bars.iter().map(|b| (b.nx, b.ny)).collect();
        let mut have = shape.clone();
        want.sort_unstable();
        have.sort_unstable();
        if want != have || self.bars.iter().any(|b| b.y_crosses > b.ny) {
            return false;
        }
        for i in 0..shape.len() {
            for j in i + 1..shape.len() {
                if shape[i].0 == shape[j].0 && shape[i].1 <= shape[j].1 {
                    return false;
                }
            }
        }
        let floor = white_floor(&shape);
        self.bars.iter().zip(floor).all(|(b, f)| b.whites() >= f)
    }
}

pub fn split_general(d: &GeneralDrawing) -> (Monomial, Monomial) {
    d.split()
}

/// Rebuilds the drawing from its S or T operator.
pub fn reconstruct_general(part: &Monomial, side: Side, mu: &Partition) -> Result<GeneralDrawing> {
    let n = mu.n();
    if part.n() != n {
        return Err(Error::AmbientMismatch { left: part.n(), right: n });
    }
    let m = n - 1;
    let extra = |v: &[u8]| v[m..].iter().any(|&e| e > 0);
    match side {
        Side::S => {
            if extra(part.x()) || extra(part.y()) {
                return Err(Error::NoPreimage);
            }
            // x-orders give the bar order directly; y-counts follow by rule 1
            let g = groups(mu);
            let mut used = vec![0usize; g.len()];
            let mut bars = Vec::with_capacity(m);
            for i in 0..m {
                let p = part.x()[i] as usize;
                if p >= g.len() || used[p] == g[p].len() {
                    return Err(Error::NoPreimage);
                }
                let q = g[p][used[p]];
                used[p] += 1;
                bars.push(Bar {
                    nx: p,
                    ny: q,
                    y_crosses: part.y()[i] as usize,
                });
            }
            let d = GeneralDrawing { mu: mu.clone(), bars };
            if d.is_valid() {
                Ok(d)
            } else {
                Err(Error::NoPreimage)
            }
        }
        Side::T => {
            if part.x().iter().any(|&e| e > 0) || extra(part.y()) {
                return Err(Error::NoPreimage);
            }
            let whites: Vec<usize> = part.y()[..m].iter().map(|&e| e as usize).collect();
            let g = groups(mu);
            let mut found = Vec::new();
            let mut used = vec![0usize; g.len()];
            let mut cur = Vec::with_capacity(m);
            fill_from_whites(&g, &whites, &mut used, &mut cur, &mut found);
            match found.len() {
                0 => Err(Error::NoPreimage),
                1 => Ok(GeneralDrawing {
                    mu: mu.clone(),
                    bars: found.pop().unwrap(),
                }),
                c => Err(Error::Ambiguous(c)),
            }
        }
    }
}

fn fill_from_whites(
    g: &[Vec<usize>],
    whites: &[usize],
    used: &mut Vec<usize>,
    cur: &mut Vec<Bar>,
    found: &mut Vec<Vec<Bar>>,
) {
    if found.len() > 1 {
        return;
    }
    let i = cur.len();
    if i == whites.len() {
        found.push(cur.clone());
        return;
    }
    for p in 0..g.len() {
        if used[p] == g[p].len() {
            continue;
        }
        let q = g[p][used[p]];
        if whites[i] > q {
            continue;
        }
        // earlier bars with fewer x-cells need more than q whites
        if cur.iter().any(|b| b.nx < p && b.whites() < q + 1) {
            continue;
        }
        cur.push(Bar {
            nx: p,
            ny: q,
            y_crosses: q - whites[i],
        });
        used[p] += 1;
        fill_from_whites(g, whites, used, cur, found);
        used[p] -= 1;
        cur.pop();
    }
}

/// Minimal-monomial triangularity in the place-by-place order: `M_T` is
/// the least monomial of `d_S Delta`, and `M_S` that of `d_T Delta`.
pub fn minimal_monomial_check(d: &GeneralDrawing, delta: &DeltaPolynomial) -> bool {
    let (s, t) = d.split();
    let order = MonomialOrder::PlaceByPlace;
    let ps = delta.derive(&s);
    let pt = delta.derive(&t);
    matches!(ps.min_monomial_by(order), Ok(m) if *m == t) && matches!(pt.min_monomial_by(order), Ok(m) if *m == s)
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroXReport {
    pub count: usize,
    pub expected: BigUint,
    /// Every `d_S Delta` has x-degree 0, every `d_T Delta` x-degree `n(mu)`.
    pub degrees_ok: bool,
    pub minimal_ok: bool,
    pub distinct_t: bool,
    pub rank_s: usize,
    pub rank_t: usize,
    /// `dim` of the x-degree-zero slice of `M_mu`.
    pub slice_dim: usize,
    /// `dim` of the top x-degree slice.
    pub top_slice_dim: usize,
}

impl ZeroXReport {
    pub fn pass(&self) -> bool {
        let e = &self.expected;
        BigUint::from(self.count) == *e
            && self.degrees_ok
            && self.minimal_ok
            && self.distinct_t
            && BigUint::from(self.rank_s) == *e
            && BigUint::from(self.rank_t) == *e
            && BigUint::from(self.slice_dim) == *e
            && BigUint::from(self.top_slice_dim) == *e
    }
}

pub fn verify_zero_x_basis(mu: &Partition, delta: &DeltaPolynomial, limit: usize) -> Result<ZeroXReport> {
    let drawings = enumerate_general(mu, limit)?;
    let (top, _) = delta.bidegree;
    let mut s_images: Vec<Polynomial> = Vec::with_capacity(drawings.len());
    let mut t_images: Vec<Polynomial> = Vec::with_capacity(drawings.len());
    let mut ts = std::collections::HashSet::new();
    let mut degrees_ok = true;
    let mut minimal_ok = true;
    for d in &drawings {
        let (s, t) = d.split();
        let ps = delta.derive(&s);
        let pt = delta.derive(&t);
        degrees_ok &= ps.terms().all(|(m, _)| m.bidegree().0 == 0);
        degrees_ok &= pt.terms().all(|(m, _)| m.bidegree().0 == top);
        minimal_ok &= minimal_monomial_check(d, delta);
        ts.insert(t);
        s_images.push(ps);
        t_images.push(pt);
    }
    Ok(ZeroXReport {
        count: drawings.len(),
        expected: mu.zero_x_degree_dimension(),
        degrees_ok,
        minimal_ok,
        distinct_t: ts.len() == drawings.len(),
        rank_s: rank(&SparseIntMatrix::from_polynomials(&s_images)).rank,
        rank_t: rank(&SparseIntMatrix::from_polynomials(&t_images)).rank,
        slice_dim: graded_slice(delta, 0, limit)?.dimension,
        top_slice_dim: graded_slice(delta, top, limit)?.dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::build_delta;
    use crate::poly::parse_monomial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn drawings_of_21() {
        let mu = p("2,1");
        let ds = enumerate_general(&mu, 9).unwrap();
        let ops: Vec<String> = ds.iter().map(|d| d.split().0.to_string()).collect();
        assert_eq!(ds.len(), 3);
        for want in ["x2", "x1", "x1*y2"] {
            assert!(ops.contains(&want.to_string()), "{:?}", ops);
        }
        let d = reconstruct_general(&parse_monomial("x2", 3).unwrap(), Side::S, &mu).unwrap();
        assert_eq!(d.bars, vec![Bar { nx: 0, ny: 1, y_crosses: 0 }, Bar { nx: 1, ny: 0, y_crosses: 0 }]);
        assert_eq!(d.split().1, parse_monomial("y1", 3).unwrap());
    }

    #[test]
    fn drawings_of_22_by_order() {
        let mu = p("2,2");
        let orders = bar_orders(&mu);
        assert_eq!(orders.len(), 3);
        let all = enumerate_general(&mu, 9).unwrap();
        let mut per: Vec<usize> = orders
            .iter()
            .map(|o| {
                all.iter()
                    .filter(|d| d.bars.iter().map(|b| (b.nx, b.ny)).collect::<Vec<_>>() == *o)
                    .count()
            })
            .collect();
        per.sort_unstable();
        assert_eq!(per, vec![0, 2, 4]);
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn counts_small() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                let c = count_check(&mu, 9).unwrap();
                assert!(c.pass, "{} {} {}", mu, c.count, c.expected);
            }
        }
        assert_eq!(enumerate_general(&p("1,1,1,1"), 9).unwrap().len(), 1);
        assert_eq!(enumerate_general(&p("4"), 9).unwrap().len(), 24);
    }

    #[test]
    fn corner_identity() {
        assert!(corner_recursion_check(&p("1")));
        for n in 1..=8 {
            for mu in Partition::all(n) {
                assert!(corner_recursion_check(&mu), "{}", mu);
            }
        }
    }

    #[test]
    fn minimal_monomials_on_21() {
        let mu = p("2,1");
        let d = build_delta(&mu, 9).unwrap();
        for g in enumerate_general(&mu, 9).unwrap() {
            assert!(minimal_monomial_check(&g, &d));
        }
        let x2 = parse_monomial("x2", 3).unwrap();
        let img = d.derive(&x2);
        assert_eq!(img.min_monomial_by(MonomialOrder::PlaceByPlace).unwrap(), &parse_monomial("y1", 3).unwrap());
    }

    #[test]
    fn round_trips() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                for d in enumerate_general(&mu, 9).unwrap() {
                    assert!(d.is_valid());
                    let (s, t) = d.split();
                    assert_eq!(reconstruct_general(&s, Side::S, &mu).unwrap(), d);
                    assert_eq!(reconstruct_general(&t, Side::T, &mu).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn zero_x_basis_small() {
        let mu = p("2,1");
        let r = verify_zero_x_basis(&mu, &build_delta(&mu, 9).unwrap(), 9).unwrap();
        assert!(r.pass(), "{:?}", r);
        assert_eq!(r.rank_s, 3);
        let mu = p("2,2");
        let r = verify_zero_x_basis(&mu, &build_delta(&mu, 9).unwrap(), 9).unwrap();
        assert_eq!(r.rank_s, 6);
        assert!(r.pass());
    }
}
