//! Running verification suites and summarizing their reports.
//!
//! `cargo run --release --example verify`

use ulcolor::verifier::suite::{render_summary, run_suite, summarize, Suite, SuiteConfig};

fn main() -> ulcolor::Result<()> {
    let cfg = SuiteConfig {
        max_order: 4,
        k_max: 4,
        ..SuiteConfig::default()
    };
    let mut reports = Vec::new();
    for suite in [
        Suite::Hanlon,
        Suite::Lemma5,
        Suite::Prop2,
        Suite::Lemma11,
        Suite::Theorem12,
        Suite::UpperBound,
    ] {
        reports.extend(run_suite(suite, &cfg)?);
    }
    print!("{}", render_summary(&summarize(&reports)));
    if let Some(r) = reports.iter().find(|r| r.claim == "theorem12") {
        println!("\n{}: {}\n  {}", r.claim, r.instance, r.note.as_deref().unwrap_or(""));
    }
    Ok(())
}
