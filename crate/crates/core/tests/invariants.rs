//! Exhaustive checks of the structural invariants at desk scale.

mod common;

use ghmodule::annihilator::{classify_diagram, reduce_step, RewriteSource, Rewriter};
use ghmodule::hook;
use ghmodule::linalg;
use ghmodule::poly::mono_less;
use ghmodule::report::operators_up_to;
use ghmodule::{build_delta, HookParams, Monomial, Partition, Polynomial};
use num_bigint::BigInt;
use num_traits::{One, Signed};

use common::*;

fn all_partitions(n_max: usize) -> Vec<Partition> {
    (1..=n_max)
        .flat_map(partitions)
        .map(|p| Partition::new(p).unwrap())
        .collect()
}

#[test]
fn biexponents_and_statistics() {
    for mu in all_partitions(8) {
        let be = mu.biexponents();
        assert_eq!(be.len(), mu.n());
        assert!(be.windows(2).all(|w| (w[0].p, w[0].q) < (w[1].p, w[1].q)), "{}", mu);
        let big_parts = mu.parts().iter().filter(|&&p| p >= 2).count();
        assert_eq!(mu.hook_params().is_ok(), big_parts <= 1, "{}", mu);
    }
    for mu in all_partitions(6) {
        let d = build_delta(&mu, 9).unwrap();
        let (a, b) = d.value.bidegree().unwrap();
        assert_eq!(a, mu.n_stat());
        assert_eq!(a + b, mu.n_stat() + mu.conjugate().n_stat(), "{}", mu);
    }
}

fn swap_places(p: &Polynomial, i: usize, j: usize) -> Polynomial {
    let n = p.n();
    let mut out = Polynomial::zero(n);
    for (m, c) in p.terms() {
        let mut x = m.x().to_vec();
        let mut y = m.y().to_vec();
        x.swap(i, j);
        y.swap(i, j);
        out.add_term(Monomial::new(&x, &y), c.clone());
    }
    out
}

fn swap_alphabets(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.n());
    for (m, c) in p.terms() {
        out.add_term(Monomial::new(m.y(), m.x()), c.clone());
    }
    out
}

#[test]
fn delta_symmetries() {
    for mu in all_partitions(6) {
        let d = build_delta(&mu, 9).unwrap();
        let n = mu.n();
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(swap_places(&d.value, i, j), -&d.value, "{} ({},{})", mu, i, j);
            }
        }
        let dc = build_delta(&mu.conjugate(), 9).unwrap();
        let swapped = swap_alphabets(&d.value);
        assert!(swapped == dc.value || swapped == -&dc.value, "{}", mu);
        assert!(d.value.terms().all(|(_, c)| c.abs().is_one()));
    }
}

#[test]
fn full_shape_monomials_have_unit_coefficients() {
    for (k, l) in hooks(6) {
        let d = build_delta(&HookParams::new(k, l).partition(), 9).unwrap();
        for dr in hook::enumerate_drawings(k, l) {
            let full = &dr.operator() * &dr.white_operator();
            assert!(d.value.coeff(&full).abs().is_one(), "{:?}", dr);
            let c = d.value.apply_diff(&dr.operator()).apply_diff(&dr.white_operator());
            assert!(c.as_constant().is_some_and(|v| v != BigInt::from(0)));
        }
    }
}

#[test]
fn descendant_graphs_acyclic_to_six() {
    for (k, l) in hooks(6) {
        let d = build_delta(&HookParams::new(k, l).partition(), 9).unwrap();
        assert!(hook::descendant_graph(k, l, &d, 9).unwrap().acyclic, "({},{})", k, l);
    }
}

#[test]
fn closure_dimension_to_six() {
    for (k, l) in hooks(6) {
        let d = build_delta(&HookParams::new(k, l).partition(), 9).unwrap();
        let c = linalg::derivative_closure(&d, 9).unwrap();
        assert_eq!(c.dimension as u64, fact(k + l + 1), "({},{})", k, l);
    }
}

#[test]
fn rewriting_descends_in_the_order() {
    for (k, l) in hooks(5) {
        let n = k + l + 1;
        let d = build_delta(&HookParams::new(k, l).partition(), 9).unwrap();
        let rw = Rewriter::new(k, l);
        for op in operators_up_to(n, d.bidegree.0, d.bidegree.1) {
            if !classify_diagram(&op, k, l).unwrap().is_anomaly() {
                continue;
            }
            let r = reduce_step(&op, k, l).unwrap();
            if r.source == RewriteSource::ExceedsBidegree {
                assert!(r.terms.is_empty());
                continue;
            }
            for (_, t) in &r.terms {
                assert!(mono_less(t, &op).unwrap(), "{} -> {} at ({},{})", op, t, k, l);
            }
            let nf = rw.normal_form(&op).unwrap();
            assert!(nf.steps <= rw.budget());
        }
    }
}
