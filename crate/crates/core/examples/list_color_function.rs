//! Minimizing over all `k`-assignments through intersection patterns.
//!
//! `cargo run --release --example list_color_function`

use ulcolor::assignment_search::{
    enumerate_patterns, list_color_function, unlabeled_list_color_function, SearchOptions,
};
use ulcolor::chromatic::{chromatic_polynomial, unlabeled_chromatic_polynomial};
use ulcolor::parallel::available_workers;
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    let opts = SearchOptions::with_workers(available_workers());
    println!(
        "patterns of 2-assignments on 3 vertices: {}",
        enumerate_patterns(3, 2, None)?.len()
    );

    for (name, g) in [
        ("P3", Graph::path(3)?),
        ("C4", Graph::cycle(4)?),
        ("empty on 2", Graph::empty(2)?),
    ] {
        for k in 1..=3usize {
            let labeled = list_color_function(&g, k, &opts)?;
            let unlabeled = unlabeled_list_color_function(&g, k, &opts)?;
            println!(
                "{name:<10} k = {k}: labeled {} (P = {}), unlabeled {} (P = {}), {} patterns",
                labeled.value,
                chromatic_polynomial(&g).eval_int(k as i64),
                unlabeled.value,
                unlabeled_chromatic_polynomial(&g).eval_int(k as i64),
                unlabeled.explored
            );
            if let Some(w) = unlabeled.witnesses.first() {
                println!("{:>14} minimizer {w}  ->  {}", "", w.materialize());
            }
        }
    }
    Ok(())
}
