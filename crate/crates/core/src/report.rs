//! Verification reports: one function per command, plus the suites.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::annihilator::{self, Rewriter};
use crate::delta::{build_delta, DeltaPolynomial};
use crate::error::Result;
use crate::general;
use crate::hook::{self, reconstruct, Side};
use crate::linalg::{self, GradedTable, SparseIntMatrix};
use crate::partition::{factorial, HookParams, Partition};
use crate::poly::{parse_monomial, Monomial, Polynomial};

/// A count as a JSON number when it fits, else as a decimal string.
pub fn count_value(c: &BigUint) -> Value {
    match c.to_u64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    /// Passes when both sides serialize to the same JSON value.
    pub fn eq(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Check {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn holds(name: impl Into<String>, ok: bool) -> Check {
        Check::eq(name, true, ok)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub runtime_ms: u64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Report {
    fn new(command: &str, ctx: &Context) -> Report {
        Report {
            command: command.into(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            runtime_ms: 0,
            seed: ctx.seed,
            output: None,
        }
    }

    fn param(mut self, key: &str, v: impl Serialize) -> Report {
        self.params.insert(key.into(), serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        if let Some(out) = &self.output {
            let _ = writeln!(s, "{}", out);
        }
        for c in &self.checks {
            let _ = writeln!(
                s,
                "[{}] {}: expected {}, actual {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual
            );
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            s,
            "{} checks, {} failed, {} ms, seed {}",
            self.checks.len(),
            failed,
            self.runtime_ms,
            self.seed
        );
        s
    }
}

/// Settings shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    /// Largest `n` any command may expand.
    pub limit: usize,
    pub seed: u64,
}

impl Default for Context {
    fn default() -> Self {
        Context { limit: 7, seed: 0 }
    }
}

fn timed(mut r: Report, start: Instant) -> Report {
    r.runtime_ms = start.elapsed().as_millis() as u64;
    r
}

fn hook_delta(h: HookParams, ctx: &Context) -> Result<DeltaPolynomial> {
    build_delta(&h.partition(), ctx.limit)
}

fn hook_name(h: HookParams) -> String {
    format!("(K,L)=({},{})", h.k, h.l)
}

pub fn delta_command(mu: &Partition, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = build_delta(mu, ctx.limit)?;
    let mut r = Report::new("delta", ctx).param("partition", mu.to_string());
    let fact = factorial(mu.n());
    r.checks.push(Check::eq("terms", count_value(&fact), d.value.len()));
    r.checks.push(Check::eq("bidegree", d.bidegree, d.value.bidegree()));
    r.output = Some(d.value.to_string());
    Ok(timed(r, start))
}

/// Count and closed form of the hook drawings.
pub fn hooks_enumerate(h: HookParams, list: bool, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    crate::check_size(h.n(), ctx.limit)?;
    let ds = hook::enumerate_drawings(h.k, h.l);
    let mut r = Report::new("hooks enumerate", ctx).param("k", h.k).param("l", h.l);
    r.checks.extend(drawing_count_checks(h, &ds));
    if list {
        let lines: Vec<String> = ds
            .iter()
            .map(|d| format!("{}  {}", serde_json::to_string(d).unwrap(), d.operator()))
            .collect();
        r.output = Some(lines.join("\n"));
    }
    Ok(timed(r, start))
}

fn drawing_count_checks(h: HookParams, ds: &[hook::HookDrawing]) -> Vec<Check> {
    let fact = count_value(&factorial(h.n()));
    vec![
        Check::eq(format!("drawings {}", hook_name(h)), &fact, ds.len()),
        Check::eq(
            format!("closed form {}", hook_name(h)),
            &fact,
            count_value(&hook::closed_form_count(h.k, h.l)),
        ),
    ]
}

pub fn hooks_verify_dim(h: HookParams, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let c = linalg::derivative_closure(&d, ctx.limit)?;
    let mut r = Report::new("hooks verify-dim", ctx).param("k", h.k).param("l", h.l);
    r.checks.push(Check::eq("dim M_mu", count_value(&factorial(h.n())), c.dimension));
    r.output = Some(table_text(&c.table));
    Ok(timed(r, start))
}

fn basis_rank_check(h: HookParams, d: &DeltaPolynomial, ctx: &Context) -> Check {
    let images: Vec<Polynomial> = hook::enumerate_drawings(h.k, h.l)
        .iter()
        .map(|dr| d.derive(&dr.operator()))
        .collect();
    let m = SparseIntMatrix::from_polynomials(&images);
    let cert = linalg::rank_with_prescreen(&m, ctx.seed);
    Check::eq(
        format!("rank of drawing images {}", hook_name(h)),
        count_value(&factorial(h.n())),
        cert.rank,
    )
}

pub fn hooks_verify_basis(h: HookParams, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let ds = hook::enumerate_drawings(h.k, h.l);
    let mut r = Report::new("hooks verify-basis", ctx).param("k", h.k).param("l", h.l);
    r.checks.extend(drawing_count_checks(h, &ds));
    r.checks.push(basis_rank_check(h, &d, ctx));
    Ok(timed(r, start))
}

pub fn hooks_descendants(h: HookParams, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let g = hook::descendant_graph(h.k, h.l, &d, ctx.limit)?;
    let mut r = Report::new("hooks descendants", ctx).param("k", h.k).param("l", h.l);
    r.checks.push(Check::holds(format!("descendant graph acyclic {}", hook_name(h)), g.acyclic));
    r.output = Some(format!("{} drawings, {} son edges", g.drawings.len(), g.edges.len()));
    Ok(timed(r, start))
}

fn generator_check(h: HookParams, d: &DeltaPolynomial) -> Result<Check> {
    let gens = annihilator::generators(h.k, h.l);
    let mut killed = 0;
    for g in &gens.generators {
        if annihilator::annihilates(&g.poly, d)? {
            killed += 1;
        }
    }
    Ok(Check::eq(format!("generators annihilate {}", hook_name(h)), gens.len(), killed))
}

fn proposition_check(h: HookParams, which: u8, d: &DeltaPolynomial, ctx: &Context) -> Result<Check> {
    let inst = annihilator::proposition_instances(h.k, h.l, which, ctx.limit)?;
    let mut killed = 0;
    for i in &inst {
        if i.annihilates(d)? {
            killed += 1;
        }
    }
    Ok(Check::eq(
        format!("proposition {} instances annihilate {}", which, hook_name(h)),
        inst.len(),
        killed,
    ))
}

pub fn ideal_verify(h: HookParams, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let mut r = Report::new("ideal verify", ctx).param("k", h.k).param("l", h.l);
    r.checks.push(generator_check(h, &d)?);
    for which in 1..=4 {
        r.checks.push(proposition_check(h, which, &d, ctx)?);
    }
    Ok(timed(r, start))
}

/// The quotient table re-indexed by polynomial degree, to compare with a
/// derivative closure.
pub fn as_module_degrees(h: HookParams, t: &GradedTable) -> GradedTable {
    let (a, b) = (h.l * (h.l + 1) / 2, h.k * (h.k + 1) / 2);
    t.iter().map(|(&(x, y), &v)| ((a - x, b - y), v)).collect()
}

fn table_text(t: &GradedTable) -> String {
    let cells: Vec<String> = t.iter().map(|((a, b), v)| format!("({},{}):{}", a, b, v)).collect();
    format!("{{{}}}", cells.join(", "))
}

fn table_value(t: &GradedTable) -> Value {
    Value::String(table_text(t))
}

fn quotient_checks(h: HookParams, d: &DeltaPolynomial, ctx: &Context) -> Result<Vec<Check>> {
    let q = annihilator::quotient_hilbert(h.k, h.l, ctx.limit)?;
    let c = linalg::derivative_closure(d, ctx.limit)?;
    Ok(vec![
        Check::eq(format!("quotient total {}", hook_name(h)), count_value(&factorial(h.n())), q.total),
        Check::holds(format!("quotient shell zero {}", hook_name(h)), q.boundary_zero),
        Check::eq(
            format!("quotient table = closure table {}", hook_name(h)),
            table_value(&c.table),
            table_value(&as_module_degrees(h, &q.table)),
        ),
    ])
}

pub fn ideal_quotient_dim(h: HookParams, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let mut r = Report::new("ideal quotient-dim", ctx).param("k", h.k).param("l", h.l);
    let q = annihilator::quotient_hilbert(h.k, h.l, ctx.limit)?;
    r.output = Some(table_text(&q.table));
    r.checks.extend(quotient_checks(h, &d, ctx)?);
    Ok(timed(r, start))
}

pub fn ideal_normal_form(h: HookParams, op: &str, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let d = hook_delta(h, ctx)?;
    let m = parse_monomial(op, h.n())?;
    let rw = Rewriter::new(h.k, h.l);
    let nf = rw.normal_form(&m)?;
    let mut r = Report::new("ideal normal-form", ctx)
        .param("k", h.k)
        .param("l", h.l)
        .param("op", op);
    r.checks.push(Check::holds(
        "op(d) Delta = sum c_D d_D Delta",
        annihilator::certify_normal_form(&m, &nf, &d),
    ));
    let mut terms: Vec<String> = nf
        .coefficients
        .iter()
        .map(|(dr, c)| format!("{} * [{}]", c, dr.operator()))
        .collect();
    if terms.is_empty() {
        terms.push("0".into());
    }
    r.output = Some(terms.join(" + "));
    Ok(timed(r, start))
}

pub fn zerox_count(mu: &Partition, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let c = general::count_check(mu, ctx.limit)?;
    let mut r = Report::new("zerox count", ctx).param("partition", mu.to_string());
    r.checks.push(Check::eq("n!/mu'!", count_value(&c.expected), count_value(&c.count)));
    r.checks.push(Check::holds("corner recursion", general::corner_recursion_check(mu)));
    Ok(timed(r, start))
}

fn zero_x_checks(mu: &Partition, ctx: &Context) -> Result<Vec<Check>> {
    let d = build_delta(mu, ctx.limit)?;
    let t = general::verify_zero_x_basis(mu, &d, ctx.limit)?;
    let e = count_value(&t.expected);
    let tag = format!("mu={}", mu);
    Ok(vec![
        Check::eq(format!("zero x-degree drawings {}", tag), &e, t.count),
        Check::holds(format!("x-degrees 0 and n(mu) {}", tag), t.degrees_ok),
        Check::holds(format!("minimal monomials {}", tag), t.minimal_ok),
        Check::holds(format!("distinct M_T {}", tag), t.distinct_t),
        Check::eq(format!("rank d_S Delta {}", tag), &e, t.rank_s),
        Check::eq(format!("rank d_T Delta {}", tag), &e, t.rank_t),
        Check::eq(format!("dim M_mu^0 {}", tag), &e, t.slice_dim),
        Check::eq(format!("dim M_mu^top {}", tag), &e, t.top_slice_dim),
    ])
}

pub fn zerox_verify(mu: &Partition, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("zerox verify", ctx).param("partition", mu.to_string());
    r.checks.extend(zero_x_checks(mu, ctx)?);
    Ok(timed(r, start))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Smoke,
    Full,
}

/// Largest `n` per family of checks.
#[derive(Debug, Clone, Copy)]
struct Scale {
    counts: usize,
    rank: usize,
    closure: usize,
    rewrite: usize,
    generators: usize,
    propositions: usize,
    quotient: usize,
    reconstruct: usize,
    graph: usize,
    duality: usize,
    flip: usize,
    zerox_count: usize,
    zerox_verify: usize,
    corners: usize,
}

impl Scale {
    fn of(level: Level) -> Scale {
        let full = Scale {
            counts: 7,
            rank: 6,
            closure: 5,
            rewrite: 5,
            generators: 7,
            propositions: 5,
            quotient: 5,
            reconstruct: 6,
            graph: 5,
            duality: 5,
            flip: 7,
            zerox_count: 7,
            zerox_verify: 6,
            corners: 8,
        };
        match level {
            Level::Full => full,
            Level::Smoke => Scale {
                counts: 4,
                rank: 4,
                closure: 4,
                rewrite: 4,
                generators: 4,
                propositions: 4,
                quotient: 4,
                reconstruct: 4,
                graph: 4,
                duality: 4,
                flip: 4,
                zerox_count: 4,
                zerox_verify: 4,
                corners: 4,
            },
        }
    }
}

fn hooks_up_to(n: usize) -> impl Iterator<Item = HookParams> {
    (1..=n).flat_map(HookParams::all)
}

/// Every operator of bidegree at most `(a, b)` in `n` variables.
pub fn operators_up_to(n: usize, a: usize, b: usize) -> Vec<Monomial> {
    fn vecs(n: usize, d: usize) -> Vec<Vec<u8>> {
        if n == 0 {
            return vec![Vec::new()];
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
    let xs = vecs(n, a);
    let ys = vecs(n, b);
    xs.iter().flat_map(|x| ys.iter().map(move |y| Monomial::new(x, y))).collect()
}

/// Normal forms of every operator up to the bidegree of `Delta`, each
/// certified on `Delta`. Returns `(operators, certified)`.
pub fn spanning_check(h: HookParams, d: &DeltaPolynomial) -> Result<(usize, usize)> {
    use rayon::prelude::*;
    let rw = Rewriter::new(h.k, h.l);
    let ds = hook::enumerate_drawings(h.k, h.l);
    let images: BTreeMap<&hook::HookDrawing, Polynomial> = ds.iter().map(|x| (x, d.derive(&x.operator()))).collect();
    let ops = operators_up_to(h.n(), d.bidegree.0, d.bidegree.1);
    let ok: Vec<bool> = ops
        .par_iter()
        .map(|op| -> Result<bool> {
            let nf = rw.normal_form(op)?;
            let mut rhs = Polynomial::zero(h.n());
            for (dr, c) in &nf.coefficients {
                rhs = &rhs + &images[dr].scale(c);
            }
            Ok(d.derive(op) == rhs)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok((ops.len(), ok.iter().filter(|&&b| b).count()))
}

/// Round trips from S and T, flip closure, acyclicity and flip-son duality.
fn independence_checks(h: HookParams, s: &Scale, ctx: &Context) -> Result<Vec<Check>> {
    let n = h.n();
    let ds = hook::enumerate_drawings(h.k, h.l);
    let mut out = Vec::new();
    if n <= s.reconstruct {
        let ok = ds.iter().all(|d| {
            let (sd, td) = d.split();
            reconstruct(&sd, Side::S, h.k, h.l).as_ref() == Ok(d) && reconstruct(&td, Side::T, h.k, h.l).as_ref() == Ok(d)
        });
        out.push(Check::holds(format!("reconstruct from S and T {}", hook_name(h)), ok));
    }
    if n <= s.flip {
        let set: HashSet<&hook::HookDrawing> = ds.iter().collect();
        let ok = ds.iter().all(|d| d.flip().flip() == *d && set.contains(&d.flip()));
        out.push(Check::holds(format!("flip involution on family {}", hook_name(h)), ok));
    }
    if n <= s.graph {
        let d = hook_delta(h, ctx)?;
        let g = hook::descendant_graph(h.k, h.l, &d, ctx.limit)?;
        out.push(Check::holds(format!("descendant graph acyclic {}", hook_name(h)), g.acyclic));
        if n <= s.duality {
            let flips: Vec<hook::HookDrawing> = ds.iter().map(|x| x.flip()).collect();
            let mut ok = true;
            for i in 0..ds.len() {
                for j in 0..ds.len() {
                    if i != j {
                        ok &= hook::is_son(&ds[i], &ds[j], &d)? == hook::is_son(&flips[j], &flips[i], &d)?;
                    }
                }
            }
            out.push(Check::holds(format!("flip-son duality {}", hook_name(h)), ok));
        }
    }
    Ok(out)
}

/// The verification matrix, at smoke or full scale.
pub fn suite(level: Level, ctx: &Context) -> Result<Report> {
    let start = Instant::now();
    let s = Scale::of(level);
    let mut r = Report::new("suite", ctx).param("level", level);
    let top = [s.counts, s.rank, s.generators, s.flip].into_iter().max().unwrap();
    for h in hooks_up_to(top) {
        let n = h.n();
        if n > ctx.limit {
            continue;
        }
        if n <= s.counts {
            r.checks.extend(drawing_count_checks(h, &hook::enumerate_drawings(h.k, h.l)));
        }
        let d = hook_delta(h, ctx)?;
        if n <= s.rank {
            r.checks.push(basis_rank_check(h, &d, ctx));
        }
        if n <= s.closure {
            let c = linalg::derivative_closure(&d, ctx.limit)?;
            r.checks.push(Check::eq(
                format!("dim M_mu {}", hook_name(h)),
                count_value(&factorial(n)),
                c.dimension,
            ));
        }
        if n <= s.rewrite {
            let (total, ok) = spanning_check(h, &d)?;
            r.checks.push(Check::eq(format!("normal forms certified {}", hook_name(h)), total, ok));
        }
        if n <= s.generators {
            r.checks.push(generator_check(h, &d)?);
        }
        if n <= s.propositions {
            for which in 1..=4 {
                r.checks.push(proposition_check(h, which, &d, ctx)?);
            }
        }
        if n <= s.quotient {
            r.checks.extend(quotient_checks(h, &d, ctx)?);
        }
        r.checks.extend(independence_checks(h, &s, ctx)?);
    }
    for n in 1..=s.zerox_count.max(s.corners) {
        for mu in Partition::all(n) {
            if n <= s.zerox_count && n <= ctx.limit {
                let c = general::count_check(&mu, ctx.limit)?;
                r.checks.push(Check::eq(format!("n!/mu'! mu={}", mu), count_value(&c.expected), count_value(&c.count)));
            }
            if n <= s.zerox_verify && n <= ctx.limit {
                r.checks.extend(zero_x_checks(&mu, ctx)?);
            }
            if n <= s.corners {
                r.checks.push(Check::holds(format!("corner recursion mu={}", mu), general::corner_recursion_check(&mu)));
            }
        }
    }
    r.checks.extend(fixture_checks());
    Ok(timed(r, start))
}

/// The worked operator and the literature monomial strings.
pub fn fixture_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let op = "y1^2*x2*x4*x5^2*y6";
    let ok = parse_monomial(op, 8)
        .and_then(|m| {
            let d = reconstruct(&hook::CrossDiagram::from_monomial(&m), Side::S, 3, 4)?;
            Ok(hook::diff_op_of(&d.split().0, 8) == m)
        })
        .unwrap_or(false);
    out.push(Check::holds("worked drawing operator round trip", ok));
    for s in ["x_2y_2x_3^4x_4^3x_6x_7^2x_8", "y_1^3y_2y_5^2y_6y_9"] {
        let back = crate::poly::parse(s)
            .ok()
            .and_then(|p| p.monomials().next().map(|m| m.to_subscript_string()));
        out.push(Check::eq(format!("monomial string {}", s), s, back));
    }
    out
}
