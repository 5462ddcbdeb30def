//! Chromatic polynomials of labeled graphs and their unlabeled counterparts,
//! checked against brute-force orbit counting.
//!
//! `cargo run --example chromatic_polynomials`

use ulcolor::chromatic::{chromatic_polynomial, count_unlabeled_colorings_brute, unlabeled_chromatic_polynomial};
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    for (name, g) in [
        ("P3", Graph::path(3)?),
        ("C4", Graph::cycle(4)?),
        ("K4", Graph::complete(4)?),
        ("empty on 3", Graph::empty(3)?),
    ] {
        let p = chromatic_polynomial(&g);
        let up = unlabeled_chromatic_polynomial(&g);
        println!("{name}");
        match p.factored() {
            Some(f) => println!("  P(G, k)         = {p} = {f}"),
            None => println!("  P(G, k)         = {p}"),
        }
        println!("  unlabeled P(k)  = {up}");
        for k in 1..=4 {
            let by_formula = up.eval_int(k);
            let by_orbits = count_unlabeled_colorings_brute(&g, k as u64)?;
            println!("    k = {k}: {by_formula} (orbit count {by_orbits})");
        }
    }
    Ok(())
}
