//! Enumerating unlabeled graphs, filtering by structure, and caching the
//! result on disk.
//!
//! `cargo run --release --example catalog`

use ulcolor::catalog::{enumerate_unlabeled, filter, load_or_build, FlagFilter};

fn main() -> ulcolor::Result<()> {
    for n in 1..=6 {
        let all = enumerate_unlabeled(n)?;
        let connected_pd = FlagFilter {
            connected: Some(true),
            point_determining: Some(true),
            ..FlagFilter::default()
        };
        let factorial: usize = (1..=n).product();
        let labeled: usize = all.iter().map(|e| factorial / e.aut_order).sum();
        println!(
            "n = {n}: {} classes, {} connected and point-determining, {labeled} labeled graphs",
            all.len(),
            filter(&all, &connected_pd).len()
        );
    }

    let dir = std::env::temp_dir().join("ulcolor-catalog-example");
    std::fs::create_dir_all(&dir)?;
    let cached = load_or_build(&dir, 5)?;
    println!("cached {} graphs of order 5 under {}", cached.len(), dir.display());
    for e in cached.iter().filter(|e| e.flags.chordal && e.flags.connected).take(5) {
        println!("  {}  |Aut| = {}", e.graph, e.aut_order);
    }
    Ok(())
}
