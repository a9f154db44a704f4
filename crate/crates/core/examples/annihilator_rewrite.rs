//! Classifies an operator against the hook drawings and rewrites it onto
//! drawing operators modulo the annihilator ideal.
//!
//! `cargo run --example annihilator_rewrite -- 1 2 y1*x2*x3`

use ghmodule::annihilator::{certify_normal_form, Rewriter};
use ghmodule::poly::parse_monomial;
use ghmodule::{build_delta, HookParams};

fn main() -> ghmodule::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k = args.first().map_or(1, |a| a.parse().expect("K"));
    let l = args.get(1).map_or(2, |a| a.parse().expect("L"));
    let op_text = args.get(2).cloned().unwrap_or_else(|| "y1*x2*x3".into());
    let h = HookParams::new(k, l);
    let delta = build_delta(&h.partition(), 7)?;
    let op = parse_monomial(&op_text, h.n())?;
    let rw = Rewriter::new(k, l);

    let class = rw.classify(&op)?;
    println!("{} is {}", op, class);
    if class.is_anomaly() {
        let step = rw.reduce_step(&op)?;
        println!("first step ({:?}): {}", step.source, step.label);
        for (c, m) in &step.terms {
            println!("  {} * {}", c, m);
        }
    }
    let nf = rw.normal_form(&op)?;
    println!("normal form after {} expansions:", nf.steps);
    for (d, c) in &nf.coefficients {
        println!("  {} * d[{}]   {:?}", c, d.operator(), d);
    }
    println!("certified on Delta: {}", certify_normal_form(&op, &nf, &delta));
    Ok(())
}
