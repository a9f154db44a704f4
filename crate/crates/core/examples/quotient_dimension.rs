//! Graded dimensions of the quotient by the generator ideal of a hook.
//!
//! `cargo run --example quotient_dimension -- 2 1`

use ghmodule::annihilator::{generators, quotient_hilbert};

fn main() -> ghmodule::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("K L"));
    let (k, l) = (args.next().unwrap_or(2), args.next().unwrap_or(1));
    let gens = generators(k, l);
    println!("{} generators, for example:", gens.len());
    for g in gens.generators.iter().step_by(gens.len().div_ceil(6)) {
        println!("  {:?}: {}", g.family, g.poly);
    }
    let q = quotient_hilbert(k, l, 7)?;
    println!("operator bidegree -> dimension");
    for ((a, b), d) in &q.table {
        println!("  ({}, {}) -> {}", a, b, d);
    }
    println!("total {}, zero outside the box: {}", q.total, q.boundary_zero);
    Ok(())
}
