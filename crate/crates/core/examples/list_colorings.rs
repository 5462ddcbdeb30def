//! Counting list colorings of one assignment, labeled and up to symmetry.
//!
//! `cargo run --example list_colorings`

use ulcolor::list_coloring::{burnside_lower_bound, coloring_classes, count_list_colorings, ListAssignment};
use ulcolor::symmetry::automorphism_group;
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    let g: Graph = "3: 0-1, 1-2".parse()?;
    for text in ["0:1,2;1:1,2;2:1,2", "0:1,2;1:1,2;2:2,3", "0:1,2;1:3,4;2:5,6"] {
        let lists: ListAssignment = text.parse()?;
        let aut = automorphism_group(&g);
        let classes = coloring_classes(&g, &aut, &lists)?;
        println!("L = {lists}");
        println!("  P(G, L) = {}", count_list_colorings(&g, &lists)?);
        println!(
            "  classes = {}  (averaged fixed points {})",
            classes.class_count,
            burnside_lower_bound(&g, &aut, &lists)?
        );
        for class in classes.classes() {
            println!("    {class:?}");
        }
    }
    Ok(())
}
