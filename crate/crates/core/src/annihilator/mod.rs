//! The annihilator ideal `I_mu` of a hook: its generators, the relation
//! families that hold modulo `I_mu`, the rewriting of arbitrary operators
//! onto drawing operators, and the graded dimensions of the quotient.

mod quotient;
mod rewrite;

use std::fmt;

use serde::Serialize;

use crate::delta::DeltaPolynomial;
use crate::error::{Error, Result};
use crate::poly::{complete_homogeneous, Monomial, Polynomial};

pub use quotient::{quotient_hilbert, QuotientTable};
pub use rewrite::{
    certify_normal_form, certify_rewrite, classify_diagram, normal_form, reduce_step, AnomalyClass, AnomalyKind,
    NormalForm, Rewrite, RewriteSource, Rewriter,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorFamily {
    /// `h_i(x_1, ..., x_n)`.
    HX(usize),
    /// `h_i(y_1, ..., y_n)`.
    HY(usize),
    /// `x_i y_i`, 1-based.
    XY(usize),
    /// Square-free x-product over the listed 1-based indices.
    XBar(Vec<usize>),
    YBar(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub family: GeneratorFamily,
    pub poly: Polynomial,
}

#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub k: usize,
    pub l: usize,
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets_of_size(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Every subset of `0..n`, by size then lexicographically.
pub(crate) fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|r| subsets_of_size(n, r)).collect()
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

/// The generators of `I_mu` for `mu = (k+1, 1^l)`.
pub fn generators(k: usize, l: usize) -> GeneratorSet {
    let n = k + l + 1;
    let all: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(Generator {
            family: GeneratorFamily::HX(i),
            poly: complete_homogeneous(n, &all, i, true),
        });
    }
    for i in 1..=n {
        gens.push(Generator {
            family: GeneratorFamily::HY(i),
            poly: complete_homogeneous(n, &all, i, false),
        });
    }
    for i in 0..n {
        let mut m = Monomial::one(n);
        m.x_mut()[i] = 1;
        m.y_mut()[i] = 1;
        gens.push(Generator {
            family: GeneratorFamily::XY(i + 1),
            poly: Polynomial::from_monomial(m),
        });
    }
    for s in subsets_of_size(n, l + 1) {
        gens.push(Generator {
            poly: Polynomial::from_monomial(Monomial::x_product(n, &s)),
            family: GeneratorFamily::XBar(one_based(&s)),
        });
    }
    for s in subsets_of_size(n, k + 1) {
        gens.push(Generator {
            poly: Polynomial::from_monomial(Monomial::y_product(n, &s)),
            family: GeneratorFamily::YBar(one_based(&s)),
        });
    }
    GeneratorSet { k, l, generators: gens }
}

/// Whether `P(d) Delta = 0`.
pub fn annihilates(p: &Polynomial, delta: &DeltaPolynomial) -> Result<bool> {
    Ok(p.apply_as_operator(&delta.value)?.is_zero())
}

/// One instance of a relation family: a product of factors that should lie
/// in `I_mu`.
#[derive(Debug, Clone)]
pub struct PropInstance {
    pub proposition: u8,
    pub factors: Vec<Polynomial>,
    pub label: String,
}

impl PropInstance {
    pub fn polynomial(&self) -> Polynomial {
        let n = self.factors[0].n();
        self.factors.iter().fold(Polynomial::one(n), |acc, f| &acc * f)
    }

    /// Applies the factors one at a time.
    pub fn annihilates(&self, delta: &DeltaPolynomial) -> Result<bool> {
        let mut cur = delta.value.clone();
        for f in self.factors.iter().rev() {
            cur = f.apply_as_operator(&cur)?;
            if cur.is_zero() {
                return Ok(true);
            }
        }
        Ok(cur.is_zero())
    }
}

impl fmt::Display for PropInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{} {}", self.proposition, self.label)
    }
}

fn set_label(alpha: char, s: &[usize]) -> String {
    let names: Vec<String> = s.iter().map(|i| format!("{}{}", alpha, i + 1)).collect();
    format!("{{{}}}", names.join(","))
}

/// Every instance of one relation family for the hook `(k+1, 1^l)`, with
/// degrees bounded by the bidegree of `Delta`.
///
/// 1. `h_k(Y)` with `k + |Y| > n`, both alphabets.
/// 2. `Ybar h_k(Y')` with `Y` a subset of `Y'` and `k + |Y| > K`, both
///    alphabets (`L` for x).
/// 3. `h_k(Y) h_l(X)` with nested sets and `k + l + |Y| + |X| >= 2n`.
/// 4. `h_k(Y) h_l(X)` with `Y` in `X` and `k + l + |Y| > n`, or `X` in `Y`
///    and `k + l + |X| > n`.
pub fn proposition_instances(k: usize, l: usize, which: u8, limit: usize) -> Result<Vec<PropInstance>> {
    let n = k + l + 1;
    crate::check_size(n, limit)?;
    let max_y = k * (k + 1) / 2;
    let max_x = l * (l + 1) / 2;
    let subsets = all_subsets(n);
    let h = |s: &[usize], d: usize, x: bool| complete_homogeneous(n, s, d, x);
    let mut out = Vec::new();
    match which {
        1 => {
            for (x, bound, alpha) in [(false, max_y, 'y'), (true, max_x, 'x')] {
                for s in &subsets {
                    for d in 1..=bound {
                        if d + s.len() > n {
                            out.push(PropInstance {
                                proposition: 1,
                                factors: vec![h(s, d, x)],
                                label: format!("h_{}({})", d, set_label(alpha, s)),
                            });
                        }
                    }
                }
            }
        }
        2 => {
            for (x, bound, cap, alpha) in [(false, max_y, k, 'y'), (true, max_x, l, 'x')] {
                for outer in &subsets {
                    for r in 0..=outer.len() {
                        for pick in subsets_of_size(outer.len(), r) {
                            let inner: Vec<usize> = pick.iter().map(|&i| outer[i]).collect();
                            let bar = if x {
                                Monomial::x_product(n, &inner)
                            } else {
                                Monomial::y_product(n, &inner)
                            };
                            for d in 1..=bound {
                                if d + inner.len() > cap {
                                    out.push(PropInstance {
                                        proposition: 2,
                                        factors: vec![Polynomial::from_monomial(bar.clone()), h(outer, d, x)],
                                        label: format!(
                                            "bar{} h_{}({})",
                                            set_label(alpha, &inner),
                                            d,
                                            set_label(alpha, outer)
                                        ),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        3 | 4 => {
            for ys in &subsets {
                for xs in &subsets {
                    let y_in_x = ys.iter().all(|i| xs.contains(i));
                    let x_in_y = xs.iter().all(|i| ys.contains(i));
                    if !y_in_x && !x_in_y {
                        continue;
                    }
                    for dy in 1..=max_y {
                        for dx in 1..=max_x {
                            let ok = if which == 3 {
                                dy + dx + ys.len() + xs.len() >= 2 * n
                            } else {
                                (y_in_x && dy + dx + ys.len() > n) || (x_in_y && dy + dx + xs.len() > n)
                            };
                            if ok {
                                out.push(PropInstance {
                                    proposition: which,
                                    factors: vec![h(ys, dy, false), h(xs, dx, true)],
                                    label: format!(
                                        "h_{}({}) h_{}({})",
                                        dy,
                                        set_label('y', ys),
                                        dx,
                                        set_label('x', xs)
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
        _ => return Err(Error::InvalidDrawing(format!("no relation family {}", which))),
    }
    Ok(out)
}
