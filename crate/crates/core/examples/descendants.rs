//! The son relation between hook drawings and the acyclicity of its graph.
//!
//! `cargo run --example descendants -- 2 1`

use ghmodule::hook;
use ghmodule::{build_delta, HookParams};

fn main() -> ghmodule::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("K L"));
    let h = HookParams::new(args.next().unwrap_or(2), args.next().unwrap_or(1));
    let delta = build_delta(&h.partition(), 7)?;
    let g = hook::descendant_graph(h.k, h.l, &delta, 7)?;
    println!(
        "mu = ({}): {} drawings, {} son edges, acyclic: {}",
        h.partition(),
        g.drawings.len(),
        g.edges.len(),
        g.acyclic
    );
    for &(a, b) in g.edges.iter().take(15) {
        let (pa, pb) = (&g.drawings[a], &g.drawings[b]);
        println!(
            "  {:?} -> {:?}   constant {}",
            pa,
            pb,
            hook::son_constant(pa, pb, &delta)
        );
    }
    Ok(())
}
