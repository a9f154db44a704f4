//! Builds `Delta_mu` for a partition and prints it with a few statistics.
//!
//! `cargo run --example delta -- 2,1`

use ghmodule::{build_delta, Partition};

fn main() -> ghmodule::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1".into());
    let mu: Partition = arg.parse()?;
    let d = build_delta(&mu, 7)?;
    println!("mu = ({}), conjugate ({})", mu, mu.conjugate());
    println!("biexponents: {:?}", mu.biexponents().iter().map(|b| (b.p, b.q)).collect::<Vec<_>>());
    println!("bidegree (n(mu), n(mu')) = {:?}", d.bidegree);
    println!("{} terms", d.value.len());
    if d.value.len() <= 24 {
        println!("Delta = {}", d.value);
    }
    Ok(())
}
