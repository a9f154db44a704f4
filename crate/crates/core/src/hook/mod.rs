//! Drawings for hook partitions `(K+1, 1^L)`.
//!
//! A shape is a row of `K+L` places; `K` of them carry y-columns of heights
//! `K, K-1, ..., 1` and the other `L` carry x-columns of depths
//! `L, L-1, ..., 1`, both read left to right. A drawing puts crosses in the
//! columns. X-columns take any number of crosses. A y-column looks at the
//! first *plain* x-column to its right (all crossed or all white): an empty
//! one forces at least one cross, a full one forces at least one white cell.
//!
//! Place `i` (0-based) is bound to the variables `x_{i+1}, y_{i+1}`; the last
//! variables `x_n, y_n` never occur in a drawing operator.

mod descendants;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::factorial;
use crate::poly::Monomial;

pub use descendants::{descendant_graph, is_son, son_constant, DescendantGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    X,
    Y,
}

/// The placement of x- and y-columns; sizes follow from the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    k: usize,
    l: usize,
    kinds: Vec<ColumnKind>,
}

impl HookShape {
    pub fn new(k: usize, l: usize, kinds: Vec<ColumnKind>) -> Result<Self> {
        let ny = kinds.iter().filter(|&&c| c == ColumnKind::Y).count();
        if kinds.len() != k + l || ny != k {
            return Err(Error::InvalidDrawing(format!(
                "shape needs {} y-columns and {} x-columns",
                k, l
            )));
        }
        Ok(HookShape { k, l, kinds })
    }

    /// Every shape, in lexicographic order of the kind word (`X < Y`).
    pub fn all(k: usize, l: usize) -> Vec<HookShape> {
        fn rec(k: usize, l: usize, word: &mut Vec<ColumnKind>, out: &mut Vec<Vec<ColumnKind>>) {
            if k == 0 && l == 0 {
                out.push(word.clone());
                return;
            }
            if l > 0 {
                word.push(ColumnKind::X);
                rec(k, l - 1, word, out);
                word.pop();
            }
            if k > 0 {
                word.push(ColumnKind::Y);
                rec(k - 1, l, word, out);
                word.pop();
            }
        }
        let mut words = Vec::new();
        rec(k, l, &mut Vec::new(), &mut words);
        words
            .into_iter()
            .map(|kinds| HookShape { k, l, kinds })
            .collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn kinds(&self) -> &[ColumnKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Column sizes: heights for y-columns, depths for x-columns.
    pub fn sizes(&self) -> Vec<u8> {
        let (mut y, mut x) = (self.k, self.l);
        self.kinds
            .iter()
            .map(|kind| match kind {
                ColumnKind::Y => {
                    y -= 1;
                    (y + 1) as u8
                }
                ColumnKind::X => {
                    x -= 1;
                    (x + 1) as u8
                }
            })
            .collect()
    }
}

/// Which rule a y-column breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleBreak {
    /// All white, facing an all-white plain x-column.
    White { place: usize },
    /// All crossed, facing an all-crossed plain x-column.
    Cross { place: usize },
}

impl RuleBreak {
    pub fn place(&self) -> usize {
        match *self {
            RuleBreak::White { place } | RuleBreak::Cross { place } => place,
        }
    }
}

/// Checks the cross rules on a shape; returns every broken y-column, left
/// to right. Cross counts must already fit the column sizes.
pub fn rule_breaks(shape: &HookShape, crosses: &[u8]) -> Vec<RuleBreak> {
    let sizes = shape.sizes();
    let kinds = shape.kinds();
    let mut out = Vec::new();
    for i in 0..kinds.len() {
        if kinds[i] != ColumnKind::Y {
            continue;
        }
        let has_x = kinds[i + 1..].contains(&ColumnKind::X);
        if !has_x {
            continue;
        }
        let plain = (i + 1..kinds.len())
            .find(|&j| kinds[j] == ColumnKind::X && (crosses[j] == 0 || crosses[j] == sizes[j]))
            .expect("the depth-one x-column is always plain");
        if crosses[plain] == 0 && crosses[i] == 0 {
            out.push(RuleBreak::White { place: i });
        } else if crosses[plain] == sizes[plain] && crosses[i] == sizes[i] {
            out.push(RuleBreak::Cross { place: i });
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DrawingJson", into = "DrawingJson")]
pub struct HookDrawing {
    shape: HookShape,
    crosses: Vec<u8>,
}

impl HookDrawing {
    pub fn new(shape: HookShape, crosses: Vec<u8>) -> Result<Self> {
        if crosses.len() != shape.len() {
            return Err(Error::InvalidDrawing("one cross count per place".into()));
        }
        let sizes = shape.sizes();
        if let Some(i) = (0..sizes.len()).find(|&i| crosses[i] > sizes[i]) {
            return Err(Error::InvalidDrawing(format!(
                "place {} has {} crosses in a column of size {}",
                i + 1,
                crosses[i],
                sizes[i]
            )));
        }
        if let Some(b) = rule_breaks(&shape, &crosses).first() {
            return Err(Error::InvalidDrawing(format!("{:?}", b)));
        }
        Ok(HookDrawing { shape, crosses })
    }

    pub fn shape(&self) -> &HookShape {
        &self.shape
    }

    pub fn crosses(&self) -> &[u8] {
        &self.crosses
    }

    pub fn k(&self) -> usize {
        self.shape.k
    }

    pub fn l(&self) -> usize {
        self.shape.l
    }

    pub fn n(&self) -> usize {
        self.shape.k + self.shape.l + 1
    }

    /// Exchanges crosses and white cells.
    pub fn flip(&self) -> HookDrawing {
        let crosses = self
            .shape
            .sizes()
            .iter()
            .zip(&self.crosses)
            .map(|(s, c)| s - c)
            .collect();
        HookDrawing {
            shape: self.shape.clone(),
            crosses,
        }
    }

    /// `(S, T)`: the crossed cells and the white cells.
    pub fn split(&self) -> (CrossDiagram, CrossDiagram) {
        let sizes = self.shape.sizes();
        let mut s = Vec::with_capacity(sizes.len());
        let mut t = Vec::with_capacity(sizes.len());
        for ((kind, &size), &c) in self.shape.kinds.iter().zip(&sizes).zip(&self.crosses) {
            let (cross, white) = match kind {
                ColumnKind::X => ((c, 0), (size - c, 0)),
                ColumnKind::Y => ((0, c), (0, size - c)),
            };
            s.push(cross);
            t.push(white);
        }
        (CrossDiagram { places: s }, CrossDiagram { places: t })
    }

    /// The operator `d_D = d_S`.
    pub fn operator(&self) -> Monomial {
        diff_op_of(&self.split().0, self.n())
    }

    /// The operator of the white cells, `d_T`.
    pub fn white_operator(&self) -> Monomial {
        diff_op_of(&self.split().1, self.n())
    }
}

impl fmt::Debug for HookDrawing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .shape
            .kinds
            .iter()
            .zip(self.shape.sizes())
            .zip(&self.crosses)
            .map(|((k, s), c)| format!("{}{}:{}", if *k == ColumnKind::X { 'x' } else { 'y' }, s, c))
            .collect();
        write!(f, "HookDrawing[{}]", cols.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct PlaceJson {
    kind: ColumnKind,
    size: u8,
    crosses: u8,
}

#[derive(Serialize, Deserialize)]
struct DrawingJson {
    places: Vec<PlaceJson>,
}

impl From<HookDrawing> for DrawingJson {
    fn from(d: HookDrawing) -> Self {
        let places = d
            .shape
            .kinds
            .iter()
            .zip(d.shape.sizes())
            .zip(&d.crosses)
            .map(|((&kind, size), &crosses)| PlaceJson {
                kind,
                size,
                crosses,
            })
            .collect();
        DrawingJson { places }
    }
}

impl TryFrom<DrawingJson> for HookDrawing {
    type Error = Error;

    fn try_from(j: DrawingJson) -> Result<Self> {
        let kinds: Vec<ColumnKind> = j.places.iter().map(|p| p.kind).collect();
        let k = kinds.iter().filter(|&&c| c == ColumnKind::Y).count();
        let shape = HookShape::new(k, kinds.len() - k, kinds)?;
        if shape.sizes() != j.places.iter().map(|p| p.size).collect::<Vec<_>>() {
            return Err(Error::InvalidDrawing("column sizes do not decrease by one".into()));
        }
        HookDrawing::new(shape, j.places.iter().map(|p| p.crosses).collect())
    }
}

/// Per-place `(x_order, y_order)`: the S or T half of a drawing, or the
/// diagram of an arbitrary operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossDiagram {
    pub places: Vec<(u8, u8)>,
}

impl CrossDiagram {
    pub fn from_monomial(m: &Monomial) -> Self {
        CrossDiagram {
            places: m.x().iter().copied().zip(m.y().iter().copied()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.places.iter().all(|&p| p == (0, 0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The crossed cells.
    S,
    /// The white cells.
    T,
}

/// Monomial operator with x-order `x_order[i]` and y-order `y_order[i]` at
/// variable `i`, over `n` variables.
pub fn diff_op_of(s: &CrossDiagram, n: usize) -> Monomial {
    assert!(s.places.len() <= n, "diagram has more places than variables");
    let mut m = Monomial::one(n);
    for (i, &(a, b)) in s.places.iter().enumerate() {
        m.x_mut()[i] = a;
        m.y_mut()[i] = b;
    }
    m
}

/// All valid cross vectors on one shape, in lexicographic order.
fn drawings_on(shape: &HookShape) -> Vec<Vec<u8>> {
    let sizes = shape.sizes();
    let m = sizes.len();
    let mut out = Vec::new();
    let mut crosses = vec![0u8; m];
    // x-crosses are free; y-ranges depend only on them
    fn rec(
        i: usize,
        shape: &HookShape,
        sizes: &[u8],
        crosses: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if i == sizes.len() {
            if rule_breaks(shape, crosses).is_empty() {
                out.push(crosses.clone());
            }
            return;
        }
        for c in 0..=sizes[i] {
            crosses[i] = c;
            rec(i + 1, shape, sizes, crosses, out);
        }
        crosses[i] = 0;
    }
    rec(0, shape, &sizes, &mut crosses, &mut out);
    out
}

/// Every drawing for the hook `(k+1, 1^l)`, by shape word then cross vector.
pub fn enumerate_drawings(k: usize, l: usize) -> Vec<HookDrawing> {
    HookShape::all(k, l)
        .into_iter()
        .flat_map(|shape| {
            drawings_on(&shape)
                .into_iter()
                .map(move |crosses| HookDrawing {
                    shape: shape.clone(),
                    crosses,
                })
        })
        .collect()
}

/// The closed-form count, split by `k1` (y-columns right of the last
/// x-column), from `k1 = K` down to `0`.
pub fn closed_form_summands(k: usize, l: usize) -> Vec<(usize, BigUint)> {
    (0..=k)
        .rev()
        .map(|k1| {
            let k2 = k - k1;
            let rising = factorial(k1 + k2) / factorial(k1);
            let binom = if k2 == 0 {
                BigUint::one()
            } else if l == 0 {
                BigUint::zero()
            } else {
                binomial(k2 + l - 1, k2)
            };
            (k1, factorial(k1 + 1) * rising * factorial(l + 1) * binom)
        })
        .collect()
}

pub fn closed_form_count(k: usize, l: usize) -> BigUint {
    closed_form_summands(k, l).into_iter().map(|(_, v)| v).sum()
}

fn binomial(n: usize, r: usize) -> BigUint {
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// Rebuilds the unique drawing whose S (or T) half is `part`.
///
/// Places are completed left to right. A crossed place fixes its column
/// kind; an empty place is tried as an x-column first and as a y-column
/// when the remaining x-crosses no longer fit.
pub fn reconstruct(part: &CrossDiagram, side: Side, k: usize, l: usize) -> Result<HookDrawing> {
    match side {
        Side::S => reconstruct_crosses(part, k, l),
        // the family is closed under flip, and flip swaps S and T
        Side::T => Ok(reconstruct_crosses(part, k, l)?.flip()),
    }
}

fn reconstruct_crosses(part: &CrossDiagram, k: usize, l: usize) -> Result<HookDrawing> {
    let found = completions(part, k, l, 2);
    match found.len() {
        0 => Err(Error::NoPreimage),
        1 => Ok(found.into_iter().next().unwrap()),
        c => Err(Error::Ambiguous(c)),
    }
}

/// Up to `cap` drawings whose crossed half equals `part`.
pub(crate) fn completions(part: &CrossDiagram, k: usize, l: usize, cap: usize) -> Vec<HookDrawing> {
    arrangements(part, k, l, cap, true)
}

/// Up to `cap` placements of `part` into a shape, rules ignored, in
/// completion order (x-columns first at empty places).
pub(crate) fn fittings(part: &CrossDiagram, k: usize, l: usize, cap: usize) -> Vec<HookDrawing> {
    arrangements(part, k, l, cap, false)
}

fn arrangements(part: &CrossDiagram, k: usize, l: usize, cap: usize, rules: bool) -> Vec<HookDrawing> {
    let m = k + l;
    let mut out = Vec::new();
    if part.places.len() > m && part.places[m..].iter().any(|&p| p != (0, 0)) {
        return out;
    }
    let mut orders: Vec<(u8, u8)> = part.places.iter().take(m).copied().collect();
    orders.resize(m, (0, 0));
    if orders.iter().any(|&(a, b)| a > 0 && b > 0) {
        return out;
    }
    let mut search = Completion {
        orders: &orders,
        k,
        l,
        cap,
        rules,
        kinds: Vec::with_capacity(m),
        out: &mut out,
    };
    search.run(0, 0);
    out
}

struct Completion<'a> {
    orders: &'a [(u8, u8)],
    k: usize,
    l: usize,
    cap: usize,
    rules: bool,
    kinds: Vec<ColumnKind>,
    out: &'a mut Vec<HookDrawing>,
}

impl Completion<'_> {
    fn run(&mut self, used_y: usize, used_x: usize) {
        if self.out.len() >= self.cap {
            return;
        }
        let i = self.kinds.len();
        if i == self.orders.len() {
            let shape = HookShape {
                k: self.k,
                l: self.l,
                kinds: self.kinds.clone(),
            };
            let crosses: Vec<u8> = self.orders.iter().map(|&(a, b)| a.max(b)).collect();
            if !self.rules || rule_breaks(&shape, &crosses).is_empty() {
                self.out.push(HookDrawing { shape, crosses });
            }
            return;
        }
        let (a, b) = self.orders[i];
        if b == 0 && used_x < self.l && (a as usize) <= self.l - used_x {
            self.kinds.push(ColumnKind::X);
            self.run(used_y, used_x + 1);
            self.kinds.pop();
        }
        if a == 0 && used_y < self.k && (b as usize) <= self.k - used_y {
            self.kinds.push(ColumnKind::Y);
            self.run(used_y + 1, used_x);
            self.kinds.pop();
        }
    }
}
