//! The son relation between drawings and the graph it generates.

use num_bigint::BigInt;
use num_traits::Zero;
use petgraph::algo::is_cyclic_directed;
use petgraph::graph::DiGraph;
use rayon::prelude::*;

use super::{enumerate_drawings, HookDrawing};
use crate::delta::DeltaPolynomial;
use crate::error::{Error, Result};

/// `d_T(parent) d_S(candidate) Delta` as an integer, or zero when the result
/// is not a constant.
pub fn son_constant(parent: &HookDrawing, candidate: &HookDrawing, delta: &DeltaPolynomial) -> BigInt {
    let op = &parent.white_operator() * &candidate.operator();
    if op.bidegree() != delta.bidegree {
        return BigInt::zero();
    }
    // a full-degree operator leaves the paired coefficient
    delta.value.coeff(&op) * op.self_pairing()
}

/// Whether `candidate` is a son of `parent`.
pub fn is_son(parent: &HookDrawing, candidate: &HookDrawing, delta: &DeltaPolynomial) -> Result<bool> {
    if parent == candidate {
        return Err(Error::IdenticalDrawings);
    }
    let image = delta.derive(&candidate.operator());
    let image = image.apply_diff(&parent.white_operator());
    Ok(matches!(image.as_constant(), Some(c) if !c.is_zero()))
}

#[derive(Debug, Clone)]
pub struct DescendantGraph {
    pub drawings: Vec<HookDrawing>,
    /// `(parent, son)` as indices into `drawings`.
    pub edges: Vec<(usize, usize)>,
    pub acyclic: bool,
}

pub fn descendant_graph(k: usize, l: usize, delta: &DeltaPolynomial, limit: usize) -> Result<DescendantGraph> {
    crate::check_size(k + l + 1, limit)?;
    if delta.mu != crate::HookParams::new(k, l).partition() {
        return Err(Error::AmbientMismatch {
            left: k + l + 1,
            right: delta.n(),
        });
    }
    let drawings = enumerate_drawings(k, l);
    let edges: Vec<(usize, usize)> = (0..drawings.len())
        .into_par_iter()
        .flat_map_iter(|p| {
            let drawings = &drawings;
            (0..drawings.len())
                .filter(move |&c| c != p && !son_constant(&drawings[p], &drawings[c], delta).is_zero())
                .map(move |c| (p, c))
        })
        .collect();
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = drawings.iter().map(|_| g.add_node(())).collect();
    for &(a, b) in &edges {
        g.add_edge(nodes[a], nodes[b], ());
    }
    let acyclic = !is_cyclic_directed(&g);
    Ok(DescendantGraph {
        drawings,
        edges,
        acyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::build_delta;
    use crate::hook::{reconstruct, CrossDiagram, Side};
    use crate::HookParams;

    fn delta(k: usize, l: usize) -> DeltaPolynomial {
        build_delta(&HookParams::new(k, l).partition(), 9).unwrap()
    }

    #[test]
    fn n3_has_no_sons() {
        let d = delta(1, 1);
        let all = enumerate_drawings(1, 1);
        let parent = reconstruct(&CrossDiagram { places: vec![(0, 1), (0, 0)] }, Side::S, 1, 1).unwrap();
        let cand = reconstruct(&CrossDiagram { places: vec![(0, 0), (0, 1)] }, Side::S, 1, 1).unwrap();
        assert!(!is_son(&parent, &cand, &d).unwrap());
        assert_eq!(is_son(&parent, &parent, &d), Err(Error::IdenticalDrawings));
        let mut pairs = 0;
        for a in &all {
            for b in &all {
                if a != b {
                    pairs += 1;
                    assert!(!is_son(a, b, &d).unwrap());
                }
            }
        }
        assert_eq!(pairs, 30);
        let g = descendant_graph(1, 1, &d, 9).unwrap();
        assert!(g.edges.is_empty() && g.acyclic);
    }

    #[test]
    fn constant_shortcut_matches_definition() {
        for (k, l) in [(2, 1), (1, 2), (3, 0), (2, 2)] {
            let d = delta(k, l);
            let all = enumerate_drawings(k, l);
            for a in all.iter().step_by(3) {
                for b in &all {
                    if a != b {
                        assert_eq!(is_son(a, b, &d).unwrap(), !son_constant(a, b, &d).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn small_graphs_are_acyclic() {
        for n in 1..=4 {
            for h in HookParams::all(n) {
                let g = descendant_graph(h.k, h.l, &delta(h.k, h.l), 9).unwrap();
                assert!(g.acyclic, "{:?}", h);
            }
        }
        assert!(descendant_graph(2, 0, &delta(2, 0), 9).unwrap().acyclic);
    }

    #[test]
    fn graph_rejects_wrong_delta() {
        assert!(descendant_graph(1, 1, &delta(2, 0), 9).is_err());
        assert!(matches!(descendant_graph(5, 4, &delta(1, 1), 7), Err(Error::SizeLimit { .. })));
    }
}
