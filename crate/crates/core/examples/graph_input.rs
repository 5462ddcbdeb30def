//! Reading graphs from edge lists and graph6, and testing isomorphism through
//! canonical forms.
//!
//! `cargo run --example graph_input`

use ulcolor::canon::canonical_graph;
use ulcolor::graph6::{parse_graph6, to_graph6};
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    let path: Graph = "4: 0-1, 1-2, 2-3".parse()?;
    let relabeled: Graph = "4: 2-0, 0-3, 3-1".parse()?;
    let star: Graph = "4: 0-1, 0-2, 0-3".parse()?;

    println!("path      {path}  graph6 {}", to_graph6(&path));
    println!("relabeled {relabeled}  graph6 {}", to_graph6(&relabeled));
    println!("canonical {}", canonical_graph(&path));
    println!("path ~ relabeled: {}", path.is_isomorphic(&relabeled));
    println!("path ~ star:      {}", path.is_isomorphic(&star));

    let petersen = parse_graph6("IheA@GUAo")?;
    println!(
        "graph6 IheA@GUAo: n = {}, m = {}, degrees {:?}",
        petersen.n(),
        petersen.m(),
        (0..10).map(|v| petersen.degree(v)).collect::<Vec<_>>()
    );
    Ok(())
}
