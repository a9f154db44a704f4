//! Classification of operator diagrams and their rewriting modulo `I_mu`
//! onto drawing operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{all_subsets, subsets_of_size};
use crate::delta::DeltaPolynomial;
use crate::error::{Error, Result};
use crate::hook::{self, rule_breaks, ColumnKind, CrossDiagram, HookDrawing, RuleBreak, Side};
use crate::poly::{complete_homogeneous, Monomial, MonomialOrder, Polynomial};

const ORDER: MonomialOrder = MonomialOrder::VariableChain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AnomalyKind {
    ValidDrawing,
    /// Some index carries both an x and a y.
    NullOperator,
    Case1a,
    Case1b,
    Case1c,
    Case1d,
    Case2a,
    Case2b,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnomalyClass {
    pub kind: AnomalyKind,
    /// The guilty place, 1-based.
    pub place: Option<usize>,
    /// Set when no single place overflows but no shape holds the diagram.
    pub full_column: bool,
}

impl AnomalyClass {
    fn plain(kind: AnomalyKind) -> Self {
        AnomalyClass {
            kind,
            place: None,
            full_column: false,
        }
    }

    fn at(kind: AnomalyKind, place: usize) -> Self {
        AnomalyClass {
            kind,
            place: Some(place + 1),
            full_column: false,
        }
    }

    pub fn is_anomaly(&self) -> bool {
        !matches!(self.kind, AnomalyKind::ValidDrawing | AnomalyKind::NullOperator)
    }
}

impl fmt::Display for AnomalyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.kind)?;
        if let Some(p) = self.place {
            write!(f, " at place {}", p)?;
        }
        if self.full_column {
            write!(f, " (full column)")?;
        }
        Ok(())
    }
}

fn check_n(op: &Monomial, k: usize, l: usize) -> Result<usize> {
    let n = k + l + 1;
    if op.n() != n {
        return Err(Error::AmbientMismatch { left: op.n(), right: n });
    }
    Ok(n)
}

/// The rightmost place whose order alone rules out every shape.
fn overflow(op: &Monomial, k: usize, l: usize) -> Option<AnomalyClass> {
    let n = k + l + 1;
    let (mut ry, mut rx) = (0, 0);
    let mut found = None;
    for j in 0..n {
        let (a, b) = (op.x()[j] as usize, op.y()[j] as usize);
        if b > 0 {
            ry += 1;
            if b + j + 1 > n {
                found = Some(AnomalyClass::at(AnomalyKind::Case1b, j));
            } else if b + ry > k + 1 {
                found = Some(AnomalyClass::at(AnomalyKind::Case1a, j));
            }
        }
        if a > 0 {
            rx += 1;
            if a + j + 1 > n {
                found = Some(AnomalyClass::at(AnomalyKind::Case1d, j));
            } else if a + rx > l + 1 {
                found = Some(AnomalyClass::at(AnomalyKind::Case1c, j));
            }
        }
    }
    found
}

/// Sorts an operator into a drawing, a null operator, or an anomaly case
/// with its rightmost guilty place.
pub fn classify_diagram(op: &Monomial, k: usize, l: usize) -> Result<AnomalyClass> {
    let n = check_n(op, k, l)?;
    if op.has_mixed_index() {
        return Ok(AnomalyClass::plain(AnomalyKind::NullOperator));
    }
    let diag = CrossDiagram::from_monomial(op);
    let fits = hook::fittings(&diag, k, l, usize::MAX);
    if fits.is_empty() {
        if let Some(c) = overflow(op, k, l) {
            return Ok(c);
        }
        let last_x = (0..n).rev().find(|&j| op.x()[j] > 0);
        let last_y = (0..n).rev().find(|&j| op.y()[j] > 0);
        let (kind, place) = match (last_x, last_y) {
            (Some(j), _) => (AnomalyKind::Case1d, j),
            (None, Some(j)) => (AnomalyKind::Case1b, j),
            (None, None) => unreachable!("the empty diagram always fits"),
        };
        return Ok(AnomalyClass {
            kind,
            place: Some(place + 1),
            full_column: true,
        });
    }
    if fits.iter().any(|d| rule_breaks(d.shape(), d.crosses()).is_empty()) {
        return Ok(AnomalyClass::plain(AnomalyKind::ValidDrawing));
    }
    let canonical = &fits[0];
    let brk = *rule_breaks(canonical.shape(), canonical.crosses())
        .last()
        .expect("a fitting that is not a drawing breaks a rule");
    let kind = match brk {
        RuleBreak::White { .. } => AnomalyKind::Case2a,
        RuleBreak::Cross { .. } => AnomalyKind::Case2b,
    };
    Ok(AnomalyClass::at(kind, brk.place()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RewriteSource {
    /// The relation named by the case analysis.
    Prose,
    /// A relation from the precomputed catalog whose leading monomial
    /// divides the operator.
    Catalog,
    /// The operator's bidegree exceeds that of `Delta`.
    ExceedsBidegree,
}

#[derive(Debug, Clone)]
pub struct Rewrite {
    pub class: AnomalyClass,
    pub source: RewriteSource,
    /// The relation used, reduced modulo `x_i y_i`, or zero.
    pub relation: Polynomial,
    pub label: String,
    /// `op` is congruent to `sum c m`; every `m` is smaller than `op`.
    pub terms: Vec<(BigInt, Monomial)>,
}

struct Relation {
    lead: Monomial,
    /// Reduced modulo `x_i y_i`, leading coefficient `+1`.
    poly: Polynomial,
    label: String,
}

impl Relation {
    /// Normalizes `p`; `None` when it vanishes modulo `x_i y_i` or its
    /// leading coefficient is not a unit.
    fn new(p: Polynomial, label: String) -> Option<Relation> {
        let p = p.without_mixed_terms();
        let lead = p.max_monomial_by(ORDER).ok()?.clone();
        let c = p.coeff(&lead);
        if !c.abs().is_one() {
            return None;
        }
        let poly = if c.is_negative() { -&p } else { p };
        Some(Relation { lead, poly, label })
    }

    fn rewrite(&self, op: &Monomial) -> Option<Vec<(BigInt, Monomial)>> {
        let u = self.lead.quotient_of(op)?;
        let mut out: Vec<(BigInt, Monomial)> = self
            .poly
            .terms()
            .filter(|(m, _)| **m != self.lead)
            .map(|(m, c)| (-c, m * &u))
            .filter(|(_, m)| !m.has_mixed_index())
            .collect();
        out.sort_by(|a, b| ORDER.cmp(&b.1, &a.1));
        Some(out)
    }
}

fn bar(n: usize, s: &[usize], x: bool) -> Polynomial {
    Polynomial::from_monomial(if x {
        Monomial::x_product(n, s)
    } else {
        Monomial::y_product(n, s)
    })
}

fn names(alpha: char, s: &[usize]) -> String {
    let v: Vec<String> = s.iter().map(|i| format!("{}{}", alpha, i + 1)).collect();
    format!("{{{}}}", v.join(","))
}

/// Rewriting machinery for one hook; the relation catalog is built on
/// first use.
pub struct Rewriter {
    k: usize,
    l: usize,
    n: usize,
    bound: (usize, usize),
    catalog: OnceLock<Vec<Relation>>,
}

impl Rewriter {
    pub fn new(k: usize, l: usize) -> Self {
        Rewriter {
            k,
            l,
            n: k + l + 1,
            bound: (l * (l + 1) / 2, k * (k + 1) / 2),
            catalog: OnceLock::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Candidate relations read off the case analysis, in preference order.
    fn prose_candidates(&self, op: &Monomial, class: &AnomalyClass) -> Vec<(Polynomial, String)> {
        let (n, k, l) = (self.n, self.k, self.l);
        let h = |s: &[usize], d: usize, x: bool| complete_homogeneous(n, s, d, x);
        let mut out = Vec::new();
        let Some(place) = class.place.map(|p| p - 1) else {
            return out;
        };
        let single = |x: bool| -> Vec<(Polynomial, String)> {
            let (alpha, exps, cap) = if x { ('x', op.x(), l) } else { ('y', op.y(), k) };
            let c = exps[place] as usize;
            let mut v = Vec::new();
            if c + place + 1 > n {
                // h_c(first place+1 variables)
                let s: Vec<usize> = (0..=place).collect();
                v.push((h(&s, c, x), format!("h_{}({})", c, names(alpha, &s))));
            }
            let crossed: Vec<usize> = (0..=place).filter(|&i| exps[i] > 0).collect();
            if c - 1 + crossed.len() > cap {
                if c == 1 {
                    v.push((bar(n, &crossed, x), format!("bar{}", names(alpha, &crossed))));
                } else {
                    let p = &bar(n, &crossed, x) * &h(&crossed, c - 1, x);
                    v.push((p, format!("bar{0} h_{1}({0})", names(alpha, &crossed), c - 1)));
                }
            }
            v
        };
        match class.kind {
            AnomalyKind::Case1a | AnomalyKind::Case1b if !class.full_column => out.extend(single(false)),
            AnomalyKind::Case1c | AnomalyKind::Case1d if !class.full_column => out.extend(single(true)),
            AnomalyKind::Case2b => out.extend(self.cross_break_relation(op, place)),
            AnomalyKind::Case1b | AnomalyKind::Case1d => out.extend(self.full_column_relations(op)),
            _ => {}
        }
        out
    }

    /// A y-column full of crosses facing a full x-column at the first plain
    /// place `p`: `Xbar' h_k(Y) h_l(X)` with `X'` the x-columns strictly
    /// between, `Y` everything up to the y-column plus `X'` and `p`, and `X`
    /// everything up to `p`.
    fn cross_break_relation(&self, op: &Monomial, g: usize) -> Option<(Polynomial, String)> {
        let n = self.n;
        let diag = CrossDiagram::from_monomial(op);
        let fit = hook::fittings(&diag, self.k, self.l, 1).into_iter().next()?;
        let kinds = fit.shape().kinds();
        let sizes = fit.shape().sizes();
        let crosses = fit.crosses();
        let p = (g + 1..kinds.len())
            .find(|&j| kinds[j] == ColumnKind::X && (crosses[j] == 0 || crosses[j] == sizes[j]))?;
        let between: Vec<usize> = (g + 1..p).filter(|&j| kinds[j] == ColumnKind::X).collect();
        let mut ys: Vec<usize> = (0..=g).collect();
        ys.extend(&between);
        ys.push(p);
        let xs: Vec<usize> = (0..=p).collect();
        let (dk, dl) = (op.y()[g] as usize, op.x()[p] as usize);
        if dk == 0 || dl == 0 || dk + dl + ys.len() <= n {
            return None;
        }
        let rel = &(&bar(n, &between, true) * &complete_homogeneous(n, &ys, dk, false))
            * &complete_homogeneous(n, &xs, dl, true);
        let label = format!(
            "bar{} h_{}({}) h_{}({})",
            names('x', &between),
            dk,
            names('y', &ys),
            dl,
            names('x', &xs)
        );
        Some((rel, label))
    }

    /// An x-place with too many crosses and a crossed y-place `p` to its
    /// right: `Ybar' h_k(Y) h_l(X)` with `Y'` the crossed y-places strictly
    /// between, `Y` everything strictly left of `p`, and `X` everything up to
    /// the x-place plus `Y'`.
    fn full_column_relations(&self, op: &Monomial) -> Vec<(Polynomial, String)> {
        let n = self.n;
        let mut out = Vec::new();
        for g in (0..n).rev().filter(|&j| op.x()[j] > 0) {
            for p in (g + 1..n).filter(|&j| op.y()[j] > 0) {
                let between: Vec<usize> = (g + 1..p).filter(|&j| op.y()[j] > 0).collect();
                let mut xs: Vec<usize> = (0..=g).collect();
                xs.extend(&between);
                let ys: Vec<usize> = (0..p).collect();
                let (dk, dl) = (op.y()[p] as usize, op.x()[g] as usize);
                if dk + dl + xs.len() <= n {
                    continue;
                }
                let rel = &(&bar(n, &between, false) * &complete_homogeneous(n, &ys, dk, false))
                    * &complete_homogeneous(n, &xs, dl, true);
                let label = format!(
                    "bar{} h_{}({}) h_{}({})",
                    names('y', &between),
                    dk,
                    names('y', &ys),
                    dl,
                    names('x', &xs)
                );
                out.push((rel, label));
            }
        }
        out
    }

    fn catalog(&self) -> &[Relation] {
        self.catalog.get_or_init(|| self.build_catalog())
    }

    /// Base relations, then both alphabets of the one-set families, then
    /// products of two complete sums with nested sets, alone and times a
    /// square-free monomial on the common indices.
    fn build_catalog(&self) -> Vec<Relation> {
        let (n, k, l) = (self.n, self.k, self.l);
        let (max_x, max_y) = self.bound;
        let mut seen: HashMap<Monomial, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut add = |p: Polynomial, label: String| {
            if let Some(r) = Relation::new(p, label) {
                if seen.insert(r.lead.clone(), ()).is_none() {
                    out.push(r);
                }
            }
        };
        for s in subsets_of_size(n, l + 1) {
            add(bar(n, &s, true), format!("bar{}", names('x', &s)));
        }
        for s in subsets_of_size(n, k + 1) {
            add(bar(n, &s, false), format!("bar{}", names('y', &s)));
        }
        let subsets = all_subsets(n);
        for (x, bound, cap, alpha) in [(false, max_y, k, 'y'), (true, max_x, l, 'x')] {
            for s in &subsets {
                for d in 1..=bound {
                    if d + s.len() > n {
                        add(complete_homogeneous(n, s, d, x), format!("h_{}({})", d, names(alpha, s)));
                    }
                }
            }
            for outer in &subsets {
                for r in 0..=outer.len() {
                    for pick in subsets_of_size(outer.len(), r) {
                        let inner: Vec<usize> = pick.iter().map(|&i| outer[i]).collect();
                        for d in 1..=bound.saturating_sub(inner.len()) {
                            if d + inner.len() > cap {
                                let p = &bar(n, &inner, x) * &complete_homogeneous(n, outer, d, x);
                                add(p, format!("bar{} h_{}({})", names(alpha, &inner), d, names(alpha, outer)));
                            }
                        }
                    }
                }
            }
        }
        for ys in &subsets {
            for xs in &subsets {
                let y_in_x = ys.iter().all(|i| xs.contains(i));
                let x_in_y = xs.iter().all(|i| ys.contains(i));
                let common: Vec<usize> = xs.iter().copied().filter(|i| ys.contains(i)).collect();
                for dy in 1..=max_y {
                    for dx in 1..=max_x {
                        let ok = (y_in_x && dy + dx + ys.len() > n) || (x_in_y && dy + dx + xs.len() > n);
                        if !ok {
                            continue;
                        }
                        let base = &complete_homogeneous(n, ys, dy, false) * &complete_homogeneous(n, xs, dx, true);
                        let label = format!("h_{}({}) h_{}({})", dy, names('y', ys), dx, names('x', xs));
                        add(base.clone(), label.clone());
                        for r in 1..=common.len() {
                            for pick in subsets_of_size(common.len(), r) {
                                let u: Vec<usize> = pick.iter().map(|&i| common[i]).collect();
                                if dx + u.len() <= max_x {
                                    add(&bar(n, &u, true) * &base, format!("bar{} {}", names('x', &u), label));
                                }
                                if dy + u.len() <= max_y {
                                    add(&bar(n, &u, false) * &base, format!("bar{} {}", names('y', &u), label));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn exceeds(&self, op: &Monomial) -> bool {
        let (a, b) = op.bidegree();
        a > self.bound.0 || b > self.bound.1
    }

    pub fn classify(&self, op: &Monomial) -> Result<AnomalyClass> {
        classify_diagram(op, self.k, self.l)
    }

    /// One rewrite of an anomalous operator into smaller monomials.
    pub fn reduce_step(&self, op: &Monomial) -> Result<Rewrite> {
        let class = self.classify(op)?;
        self.reduce_classified(op, class)
    }

    fn reduce_classified(&self, op: &Monomial, class: AnomalyClass) -> Result<Rewrite> {
        if !class.is_anomaly() {
            return Err(Error::NotAnAnomaly(format!("{} is {}", op, class)));
        }
        for (p, label) in self.prose_candidates(op, &class) {
            if let Some(rel) = Relation::new(p, label) {
                if let Some(terms) = rel.rewrite(op) {
                    return Ok(Rewrite {
                        class,
                        source: RewriteSource::Prose,
                        relation: rel.poly,
                        label: rel.label,
                        terms,
                    });
                }
            }
        }
        if self.exceeds(op) {
            return Ok(Rewrite {
                class,
                source: RewriteSource::ExceedsBidegree,
                relation: Polynomial::zero(self.n),
                label: "degree".into(),
                terms: Vec::new(),
            });
        }
        for rel in self.catalog() {
            if let Some(terms) = rel.rewrite(op) {
                return Ok(Rewrite {
                    class,
                    source: RewriteSource::Catalog,
                    relation: rel.poly.clone(),
                    label: rel.label.clone(),
                    terms,
                });
            }
        }
        Err(Error::NoRelation(op.to_string()))
    }

    /// `10 * #{monomials of bidegree at most that of Delta}`.
    pub fn budget(&self) -> usize {
        let count = |d: usize| -> usize {
            // monomials of degree <= d in n variables
            let mut c = 1usize;
            for i in 1..=self.n {
                c = c * (d + i) / i;
            }
            c
        };
        10 * count(self.bound.0) * count(self.bound.1)
    }

    /// Rewrites until only drawing operators remain, always expanding the
    /// largest pending monomial.
    pub fn normal_form(&self, op: &Monomial) -> Result<NormalForm> {
        check_n(op, self.k, self.l)?;
        let budget = self.budget();
        let mut pending: HashMap<Monomial, BigInt> = HashMap::new();
        pending.insert(op.clone(), BigInt::one());
        let mut nf = NormalForm::default();
        while let Some(m) = pending.keys().max_by(|a, b| ORDER.cmp(a, b)).cloned() {
            let c = pending.remove(&m).unwrap();
            nf.steps += 1;
            if nf.steps > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let class = self.classify(&m)?;
            match class.kind {
                AnomalyKind::NullOperator => {}
                AnomalyKind::ValidDrawing => {
                    let d = hook::reconstruct(&CrossDiagram::from_monomial(&m), Side::S, self.k, self.l)?;
                    let e = nf.coefficients.entry(d).or_insert_with(BigInt::zero);
                    *e += c;
                }
                _ => {
                    let rw = self.reduce_classified(&m, class)?;
                    *nf.sources.entry(rw.source).or_insert(0) += 1;
                    for (c2, m2) in rw.terms {
                        debug_assert!(ORDER.less(&m2, &m));
                        let e = pending.entry(m2).or_insert_with(BigInt::zero);
                        *e += &c * c2;
                    }
                    pending.retain(|_, v| !v.is_zero());
                }
            }
        }
        nf.coefficients.retain(|_, v| !v.is_zero());
        Ok(nf)
    }
}

#[derive(Debug, Clone, Default)]
pub struct NormalForm {
    pub coefficients: BTreeMap<HookDrawing, BigInt>,
    /// Monomials expanded.
    pub steps: usize,
    pub sources: HashMap<RewriteSource, usize>,
}

pub fn reduce_step(op: &Monomial, k: usize, l: usize) -> Result<Rewrite> {
    Rewriter::new(k, l).reduce_step(op)
}

/// `op` expressed through drawing operators modulo `I_mu`. `delta` fixes
/// the hook.
pub fn normal_form(op: &Monomial, delta: &DeltaPolynomial) -> Result<NormalForm> {
    let h = delta.mu.hook_params()?;
    Rewriter::new(h.k, h.l).normal_form(op)
}

/// Whether both sides of a rewrite agree on `Delta`.
pub fn certify_rewrite(op: &Monomial, rw: &Rewrite, delta: &DeltaPolynomial) -> bool {
    let mut rhs = Polynomial::zero(delta.n());
    for (c, m) in &rw.terms {
        rhs = &rhs + &delta.derive(m).scale(c);
    }
    delta.derive(op) == rhs
}

/// Whether `op(d) Delta = sum c_D d_D Delta`.
pub fn certify_normal_form(op: &Monomial, nf: &NormalForm, delta: &DeltaPolynomial) -> bool {
    let mut rhs = Polynomial::zero(delta.n());
    for (d, c) in &nf.coefficients {
        rhs = &rhs + &delta.derive(&d.operator()).scale(c);
    }
    delta.derive(op) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::build_delta;
    use crate::poly::parse_monomial;
    use crate::HookParams;

    fn mono(s: &str, n: usize) -> Monomial {
        parse_monomial(s, n).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_diagram(&mono("y1", 3), 1, 1).unwrap().kind, AnomalyKind::ValidDrawing);
        let c = classify_diagram(&mono("y1^2", 3), 1, 1).unwrap();
        assert_eq!(c.kind, AnomalyKind::Case1a);
        assert_eq!(c.place, Some(1));
        assert_eq!(classify_diagram(&mono("x1*y1", 3), 1, 1).unwrap().kind, AnomalyKind::NullOperator);
        assert_eq!(classify_diagram(&mono("x3", 3), 1, 1).unwrap().kind, AnomalyKind::Case1d);
        assert_eq!(classify_diagram(&Monomial::one(3), 1, 1).unwrap().kind, AnomalyKind::ValidDrawing);
        assert!(classify_diagram(&mono("x1", 2), 1, 1).is_err());
    }

    #[test]
    fn cross_break_uses_nested_sets() {
        // y1 x2 x3 with K=1, L=2: fully crossed y-column facing a full x-column
        let op = mono("y1*x2*x3", 4);
        let c = classify_diagram(&op, 1, 2).unwrap();
        assert_eq!((c.kind, c.place), (AnomalyKind::Case2b, Some(1)));
        let rw = reduce_step(&op, 1, 2).unwrap();
        assert_eq!(rw.source, RewriteSource::Prose);
        assert_eq!(rw.label, "bar{x2} h_1({y1,y2,y3}) h_1({x1,x2,x3})");
        let d = build_delta(&HookParams::new(1, 2).partition(), 9).unwrap();
        assert!(certify_rewrite(&op, &rw, &d));
    }

    #[test]
    fn worked_rewrites() {
        let rw = reduce_step(&mono("x3", 3), 1, 1).unwrap();
        let mut terms = rw.terms.clone();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut want = vec![(BigInt::from(-1), mono("x1", 3)), (BigInt::from(-1), mono("x2", 3))];
        want.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(terms, want);
        assert!(reduce_step(&mono("y1^2", 3), 1, 1).unwrap().terms.is_empty());
        assert!(matches!(reduce_step(&mono("y1", 3), 1, 1), Err(Error::NotAnAnomaly(_))));
        assert!(matches!(reduce_step(&mono("x1*y1", 3), 1, 1), Err(Error::NotAnAnomaly(_))));
    }

    #[test]
    fn normal_form_examples() {
        let d = build_delta(&HookParams::new(1, 1).partition(), 9).unwrap();
        let nf = normal_form(&mono("x3", 3), &d).unwrap();
        let got: Vec<(Monomial, BigInt)> = nf.coefficients.iter().map(|(k, v)| (k.operator(), v.clone())).collect();
        assert_eq!(got.len(), 2);
        for (m, c) in &got {
            assert!(*m == mono("x1", 3) || *m == mono("x2", 3));
            assert_eq!(*c, BigInt::from(-1));
        }
        assert!(certify_normal_form(&mono("x3", 3), &nf, &d));
        assert!(normal_form(&mono("x1*y1", 3), &d).unwrap().coefficients.is_empty());
        for dr in hook::enumerate_drawings(1, 1) {
            let nf = normal_form(&dr.operator(), &d).unwrap();
            assert_eq!(nf.coefficients.len(), 1);
            assert_eq!(nf.coefficients[&dr], BigInt::one());
        }
    }

    fn monomials_up_to(n: usize, dx: usize, dy: usize) -> Vec<Monomial> {
        fn vecs(n: usize, d: usize) -> Vec<Vec<u8>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for e in 0..=d {
                for mut rest in vecs(n - 1, d - e) {
                    rest.insert(0, e as u8);
                    out.push(rest);
                }
            }
            out
        }
        let xs = vecs(n, dx);
        let ys = vecs(n, dy);
        xs.iter().flat_map(|x| ys.iter().map(move |y| Monomial::new(x, y))).collect()
    }

    #[test]
    fn rewrites_certify_up_to_four() {
        for n in 1..=4 {
            for h in HookParams::all(n) {
                let d = build_delta(&h.partition(), 9).unwrap();
                let rw = Rewriter::new(h.k, h.l);
                for op in monomials_up_to(n, d.bidegree.0, d.bidegree.1) {
                    let class = rw.classify(&op).unwrap();
                    if class.is_anomaly() {
                        let step = rw.reduce_step(&op).unwrap();
                        assert!(certify_rewrite(&op, &step, &d), "{} {:?} {}", op, h, step.label);
                        assert!(step.terms.iter().all(|(_, m)| ORDER.less(m, &op)));
                    }
                    let nf = rw.normal_form(&op).unwrap();
                    assert!(certify_normal_form(&op, &nf, &d), "{} {:?}", op, h);
                }
            }
        }
    }
}
