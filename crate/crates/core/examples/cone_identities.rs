//! Joining a graph with two nonadjacent vertices doubles its symmetry and
//! gives a closed form for the unlabeled chromatic polynomial.
//!
//! `cargo run --release --example cone_identities`

use ulcolor::assignment_search::SearchOptions;
use ulcolor::chromatic::unlabeled_chromatic_polynomial;
use ulcolor::symmetry::automorphism_group;
use ulcolor::verifier::{cone_formula, verify_theorem12};
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    for g in [Graph::empty(1)?, Graph::complete(2)?, Graph::complete(3)?] {
        let cone = g.cone_two_nonadjacent()?;
        let aut = automorphism_group(&g).order();
        println!("G = {g}  ->  G' = {cone}");
        println!("  |Aut(G)| = {aut}, |Aut(G')| = {}", automorphism_group(&cone).order());
        println!("  unlabeled P(G') = {}", unlabeled_chromatic_polynomial(&cone));
        println!("  closed form     = {}", cone_formula(&g, aut));
        let report = verify_theorem12(&g, 4, &SearchOptions::default())?;
        println!("  {:?}: {}", report.status, report.note.unwrap_or_default());
    }
    Ok(())
}
