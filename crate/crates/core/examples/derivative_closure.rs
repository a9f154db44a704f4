//! `dim M_mu` by closing `Delta_mu` under partial derivatives, and the exact
//! rank of the drawing images.
//!
//! `cargo run --release --example derivative_closure -- 3,1`

use ghmodule::hook;
use ghmodule::linalg::{derivative_closure, rank_with_prescreen, replay, SparseIntMatrix};
use ghmodule::{build_delta, Partition, Polynomial};

fn main() -> ghmodule::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1".into());
    let mu: Partition = arg.parse()?;
    let delta = build_delta(&mu, 7)?;
    let c = derivative_closure(&delta, 7)?;
    println!("dim M_({}) = {}", mu, c.dimension);
    for ((a, b), d) in &c.table {
        println!("  degree ({}, {}): {}", a, b, d);
    }
    if let Ok(h) = mu.hook_params() {
        let images: Vec<Polynomial> = hook::enumerate_drawings(h.k, h.l)
            .iter()
            .map(|d| delta.derive(&d.operator()))
            .collect();
        let m = SparseIntMatrix::from_polynomials(&images);
        let cert = rank_with_prescreen(&m, 0);
        println!(
            "drawing images: {} rows, {} columns, rank {} ({:?}, prime {:?}), replays: {}",
            m.n_rows(),
            m.n_cols(),
            cert.rank,
            cert.method,
            cert.prime,
            replay(&m, &cert)
        );
    }
    Ok(())
}
