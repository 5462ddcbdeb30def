//! Automorphism groups, cycle structure and quotient graphs.
//!
//! `cargo run --example automorphisms`

use ulcolor::symmetry::{automorphism_group, classify};
use ulcolor::Graph;

fn main() -> ulcolor::Result<()> {
    for (name, g) in [
        ("C4", Graph::cycle(4)?),
        ("paw", "4: 0-1, 1-2, 0-2, 2-3".parse()?),
        ("K1,3", "4: 0-1, 0-2, 0-3".parse()?),
    ] {
        let aut = automorphism_group(&g);
        let class = classify(&g, &aut);
        println!("{name}: |Aut| = {}, a = {}, b = {}", aut.order(), class.a, class.b);
        for (pi, c) in aut.iter().zip(&class.per_element) {
            let quotient = g.quotient(pi)?;
            println!(
                "  {pi:<16} cycles {}  independent {:<5}  quotient {quotient}",
                c.cycle_count, c.independent_cycles
            );
        }
    }
    Ok(())
}
