//! Lists the drawings of a hook with their operators, S/T halves and flips.
//!
//! `cargo run --example hook_drawings -- 1 1`

use ghmodule::hook::{self, reconstruct, Side};

fn main() -> ghmodule::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("K L"));
    let k = args.next().unwrap_or(1);
    let l = args.next().unwrap_or(1);
    let ds = hook::enumerate_drawings(k, l);
    println!("hook (K,L) = ({},{}): {} drawings", k, l, ds.len());
    for (m, c) in hook::closed_form_summands(k, l) {
        println!("  closed-form summand k1 = {}: {}", m, c);
    }
    println!("  total {}", hook::closed_form_count(k, l));
    for d in ds.iter().take(40) {
        let (s, t) = d.split();
        assert_eq!(reconstruct(&s, Side::S, k, l)?, *d);
        assert_eq!(reconstruct(&t, Side::T, k, l)?, *d);
        println!(
            "{:?}  d_D = {:<16} white = {:<16} flip = {:?}",
            d,
            d.operator().to_string(),
            d.white_operator().to_string(),
            d.flip()
        );
    }
    if ds.len() > 40 {
        println!("... {} more", ds.len() - 40);
    }
    Ok(())
}
