//! Per-`k` comparison of the unlabeled list color function with the
//! unlabeled chromatic polynomial.
//!
//! `cargo run --release --example threshold`

use ulcolor::assignment_search::{threshold_search, SearchOptions};
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    let opts = SearchOptions::default();
    for g in [Graph::path(4)?, Graph::cycle(4)?, "4: 0-1, 1-2, 0-2, 2-3".parse()?] {
        let table = threshold_search(&g, 3, &opts)?;
        println!("G = {}", table.graph);
        for row in &table.rows {
            match (row.list_value, &row.skipped) {
                (Some(v), _) => println!(
                    "  k = {}: {v} vs {}  equal {:?}",
                    row.k, row.polynomial_value, row.equal
                ),
                (None, Some(why)) => println!("  k = {}: skipped ({why})", row.k),
                (None, None) => println!("  k = {}: no value", row.k),
            }
        }
        println!(
            "  smallest k from which all tested rows agree: {:?} ({})",
            table.empirical_k0, table.note
        );
    }
    Ok(())
}
