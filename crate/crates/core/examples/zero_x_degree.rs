//! Zero x-degree drawings of any partition and the checks on the two bases
//! they give.
//!
//! `cargo run --release --example zero_x_degree -- 2,2`

use ghmodule::general::{enumerate_general, split_general, verify_zero_x_basis};
use ghmodule::{build_delta, Partition};

fn main() -> ghmodule::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,2".into());
    let mu: Partition = arg.parse()?;
    let ds = enumerate_general(&mu, 7)?;
    println!("mu = ({}): {} drawings, n!/mu'! = {}", mu, ds.len(), mu.zero_x_degree_dimension());
    for d in ds.iter().take(20) {
        let (s, t) = split_general(d);
        println!("  M_S = {:<24} M_T = {}", s.to_subscript_string(), t.to_subscript_string());
    }
    let delta = build_delta(&mu, 7)?;
    let r = verify_zero_x_basis(&mu, &delta, 7)?;
    println!("{:#?}", r);
    println!("all checks pass: {}", r.pass());
    Ok(())
}
