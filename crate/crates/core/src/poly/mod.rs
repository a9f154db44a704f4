//! Sparse polynomials in `x_1..x_n, y_1..y_n` with big-integer coefficients.
//!
//! A [`Monomial`] doubles as a differential operator: `x^a y^b` acts as
//! `d_x^a d_y^b`. Indices are 0-based in the API and 1-based in text.

mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use parse::{parse, parse_monomial, parse_with_n};

type Exps = SmallVec<[u8; 24]>;

/// Exponent vectors over both alphabets, stored as `[x_1..x_n, y_1..y_n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    n: usize,
    exps: Exps,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            n,
            exps: SmallVec::from_elem(0, 2 * n),
        }
    }

    pub fn new(x: &[u8], y: &[u8]) -> Self {
        assert_eq!(x.len(), y.len(), "x and y exponent vectors differ in length");
        let mut exps = Exps::with_capacity(2 * x.len());
        exps.extend_from_slice(x);
        exps.extend_from_slice(y);
        Monomial { n: x.len(), exps }
    }

    /// `x_i^e` for 0-based `i`.
    pub fn x_pow(n: usize, i: usize, e: u8) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = e;
        m
    }

    /// `y_i^e` for 0-based `i`.
    pub fn y_pow(n: usize, i: usize, e: u8) -> Self {
        let mut m = Monomial::one(n);
        m.exps[n + i] = e;
        m
    }

    /// Square-free product of the listed x-variables.
    pub fn x_product(n: usize, indices: &[usize]) -> Self {
        let mut m = Monomial::one(n);
        for &i in indices {
            m.exps[i] += 1;
        }
        m
    }

    /// Square-free product of the listed y-variables.
    pub fn y_product(n: usize, indices: &[usize]) -> Self {
        let mut m = Monomial::one(n);
        for &i in indices {
            m.exps[n + i] += 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &[u8] {
        &self.exps[..self.n]
    }

    pub fn y(&self) -> &[u8] {
        &self.exps[self.n..]
    }

    pub fn x_mut(&mut self) -> &mut [u8] {
        let n = self.n;
        &mut self.exps[..n]
    }

    pub fn y_mut(&mut self) -> &mut [u8] {
        let n = self.n;
        &mut self.exps[n..]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `(x-degree, y-degree)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let dx = self.x().iter().map(|&e| e as usize).sum();
        let dy = self.y().iter().map(|&e| e as usize).sum();
        (dx, dy)
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// True when some index carries both an x and a y exponent.
    pub fn has_mixed_index(&self) -> bool {
        self.x().iter().zip(self.y()).any(|(&a, &b)| a > 0 && b > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n == other.n && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { n: self.n, exps })
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_ambient(self.n, other.n)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Ok(Monomial { n: self.n, exps })
    }

    /// Constant produced by applying `self` as an operator to itself:
    /// `prod a_i! prod b_i!`.
    pub fn self_pairing(&self) -> BigInt {
        self.exps
            .iter()
            .map(|&e| falling_factorial(e, e))
            .fold(BigInt::one(), |acc, f| acc * f)
    }

    /// Subscript form used in the literature, e.g. `x_2y_2x_3^4`.
    pub fn to_subscript_string(&self) -> String {
        self.render("", true)
    }

    fn render(&self, sep: &str, subscript: bool) -> String {
        let mut factors = Vec::new();
        for i in 0..self.n {
            for (name, e) in [("x", self.exps[i]), ("y", self.exps[self.n + i])] {
                if e == 0 {
                    continue;
                }
                let idx = if subscript {
                    format!("_{}", i + 1)
                } else {
                    (i + 1).to_string()
                };
                if e == 1 {
                    factors.push(format!("{}{}", name, idx));
                } else {
                    factors.push(format!("{}{}^{}", name, idx, e));
                }
            }
        }
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(sep)
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("*", false))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.checked_mul(rhs).expect("ambient mismatch")
    }
}

fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { left: a, right: b })
    }
}

/// `e (e-1) ... (e-o+1)`.
fn falling_factorial(e: u8, o: u8) -> u64 {
    ((e - o + 1) as u64..=e as u64).product()
}

/// The two lexicographic orders used by the crate.
///
/// Both compare exponent vectors lexicographically with the *larger* exponent
/// at the first difference giving the *smaller* monomial; they differ in the
/// scan sequence. Multiplying both sides by a monomial preserves either order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Scan `x_1, ..., x_n, y_1, ..., y_n`, giving
    /// `x_1 < x_2 < ... < x_n < y_1 < ... < y_n`. Drives the hook rewriting.
    #[default]
    VariableChain,
    /// Scan place by place, `x_1, y_1, x_2, y_2, ...`. Gives the
    /// minimal-monomial triangularity of the zero x-degree bases, where a
    /// place may carry both alphabets.
    PlaceByPlace,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.n, b.n);
        let n = a.n;
        let first = match self {
            MonomialOrder::VariableChain => (0..2 * n).find(|&i| a.exps[i] != b.exps[i]),
            MonomialOrder::PlaceByPlace => (0..n)
                .flat_map(|i| [i, n + i])
                .find(|&i| a.exps[i] != b.exps[i]),
        };
        match first {
            None => Ordering::Equal,
            Some(i) => b.exps[i].cmp(&a.exps[i]),
        }
    }

    pub fn less(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Less
    }
}

/// Strict `m1 < m2` in the default order.
pub fn mono_less(m1: &Monomial, m2: &Monomial) -> Result<bool> {
    check_ambient(m1.n, m2.n)?;
    Ok(MonomialOrder::VariableChain.less(m1, m2))
}

/// A finite map from monomials to nonzero integers.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: HashMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Polynomial::from_terms(n, [(Monomial::one(n), c.into())])
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, 1)
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.n;
        Polynomial::from_terms(n, [(m, BigInt::one())])
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n, n, "ambient mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Terms sorted from largest to smallest in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled_shifted(&mut self, other: &Polynomial, c: &BigInt, m: &Monomial) {
        for (t, d) in &other.terms {
            self.add_term(t * m, c * d);
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_ambient(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_ambient(self.n, other.n)?;
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1 * m2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, c)| (t * m, c.clone())).collect(),
        }
    }

    /// Drops every term in which some index carries both an x and a y.
    pub fn without_mixed_terms(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_mixed_index())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `op` as the differential operator `d_x^a d_y^b`.
    pub fn apply_diff(&self, op: &Monomial) -> Polynomial {
        assert_eq!(op.n, self.n, "ambient mismatch");
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            if let Some(q) = op.quotient_of(m) {
                let f = m
                    .exps
                    .iter()
                    .zip(&op.exps)
                    .filter(|(_, &o)| o > 0)
                    .fold(BigInt::one(), |acc, (&e, &o)| acc * falling_factorial(e, o));
                out.add_term(q, c * f);
            }
        }
        out
    }

    /// Applies the operator `P(d)` obtained from `self` by `x_i -> d/dx_i`.
    pub fn apply_as_operator(&self, target: &Polynomial) -> Result<Polynomial> {
        check_ambient(self.n, target.n)?;
        let mut out = Polynomial::zero(self.n);
        for (op, c) in &self.terms {
            for (m, d) in target.apply_diff(op).terms {
                out.add_term(m, d * c);
            }
        }
        Ok(out)
    }

    /// The smallest monomial of the support in the default order.
    pub fn min_monomial(&self) -> Result<&Monomial> {
        self.min_monomial_by(MonomialOrder::VariableChain)
    }

    pub fn min_monomial_by(&self, order: MonomialOrder) -> Result<&Monomial> {
        self.terms
            .keys()
            .min_by(|a, b| order.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_monomial_by(&self, order: MonomialOrder) -> Result<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    /// The value when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Common bidegree of all terms, `None` for zero or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|m| m.bidegree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Renders in the crate grammar, largest term first.
    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::VariableChain).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{}*{}", abs, m));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({})", self.n, self.format())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ambient mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ambient mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ambient mismatch")
    }
}

/// `h_k` of the chosen x-variables (`x_alphabet`) or y-variables, by direct
/// enumeration of multisets.
pub fn complete_homogeneous(n: usize, indices: &[usize], k: usize, x_alphabet: bool) -> Polynomial {
    let mut out = Polynomial::zero(n);
    let mut exps = vec![0u8; indices.len()];
    fn rec(
        pos: usize,
        left: usize,
        exps: &mut Vec<u8>,
        indices: &[usize],
        n: usize,
        x_alphabet: bool,
        out: &mut Polynomial,
    ) {
        if pos == indices.len() {
            if left == 0 {
                let mut m = Monomial::one(n);
                for (&i, &e) in indices.iter().zip(exps.iter()) {
                    if x_alphabet {
                        m.x_mut()[i] = e;
                    } else {
                        m.y_mut()[i] = e;
                    }
                }
                out.add_term(m, BigInt::one());
            }
            return;
        }
        for e in 0..=left {
            exps[pos] = e as u8;
            rec(pos + 1, left - e, exps, indices, n, x_alphabet, out);
        }
        exps[pos] = 0;
    }
    rec(0, k, &mut exps, indices, n, x_alphabet, &mut out);
    out
}
