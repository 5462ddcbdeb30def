//! Exploring the unlabeled list color function on edgeless graphs, where it
//! can be compared with the number of multisets of colors.
//!
//! `cargo run --release --example conjecture13`

use ulcolor::assignment_search::SearchOptions;
use ulcolor::verifier::explore_conjecture13;

fn main() -> ulcolor::Result<()> {
    let opts = SearchOptions::default();
    for n in 1..=3 {
        let table = explore_conjecture13(n, 3, &opts)?;
        println!("{}", table.graph);
        for row in &table.rows {
            println!(
                "  k = {}: P_l = {:?}, P = {}",
                row.k, row.list_value, row.polynomial_value
            );
        }
    }
    Ok(())
}
