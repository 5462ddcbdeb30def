//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --release --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ulcolor::verifier::suite::{run_suite, to_json_lines, Suite, SuiteConfig};
use ulcolor::verifier::{Status, VerificationReport};

const WORKERS: usize = 4;

struct Criterion {
    id: usize,
    title: &'static str,
    suite: Suite,
    limit: Option<Duration>,
    /// Extra requirement on the reports beyond "every report passes".
    shape: fn(&[VerificationReport]) -> Result<(), String>,
}

struct Outcome {
    reports: Vec<VerificationReport>,
    elapsed: Duration,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn exactly(expected: usize) -> impl Fn(&[VerificationReport]) -> Result<(), String> {
    move |r| {
        if r.len() == expected {
            Ok(())
        } else {
            Err(format!("{} reports, expected {expected}", r.len()))
        }
    }
}

fn hanlon_shape(r: &[VerificationReport]) -> Result<(), String> {
    exactly(312)(r)?;
    let graphs: BTreeSet<_> = r
        .iter()
        .map(|x| x.instance.split("; k =").next().unwrap_or(""))
        .collect();
    if graphs.len() == 52 {
        Ok(())
    } else {
        Err(format!("{} graphs, expected 52", graphs.len()))
    }
}

fn lemma9_shape(r: &[VerificationReport]) -> Result<(), String> {
    // 52 graphs, list sizes 2 and 3, 20 assignments each
    exactly(52 * 2 * 20)(r)
}

fn lemma5_shape(r: &[VerificationReport]) -> Result<(), String> {
    if r.len() < 5000 {
        return Err(format!("{} instances, need at least 5000", r.len()));
    }
    let constant = r
        .iter()
        .filter(|x| x.note.as_deref() == Some("constant lists: equality required"))
        .count();
    if constant == 0 {
        return Err("no constant-list instance exercised the equality case".into());
    }
    Ok(())
}

fn prop2_shape(r: &[VerificationReport]) -> Result<(), String> {
    let cfg = SuiteConfig::default();
    let lemma5 = run_suite(Suite::Lemma5, &cfg).map_err(|e| e.to_string())?;
    let a: Vec<_> = lemma5.iter().map(|x| &x.instance).collect();
    let b: Vec<_> = r.iter().map(|x| &x.instance).collect();
    if a == b {
        Ok(())
    } else {
        Err("instance set differs from criterion 3".into())
    }
}

fn dong_zhang_shape(r: &[VerificationReport]) -> Result<(), String> {
    let coverage = r
        .iter()
        .find(|x| x.instance == "branch coverage")
        .ok_or("no branch coverage report")?;
    if coverage.status != Status::Pass {
        return Err(format!("branch coverage: {} / {}", coverage.lhs, coverage.rhs));
    }
    if r.len() < 2 {
        return Err("no instances".into());
    }
    Ok(())
}

fn lemma11_shape(r: &[VerificationReport]) -> Result<(), String> {
    exactly(2000)(r)
}

fn prop6_shape(r: &[VerificationReport]) -> Result<(), String> {
    // connected graphs of order <= 3 are K1, K2, P3, K3; pairs with a
    // vertex total of at most 4 all contain K1
    exactly(3)(r)
}

fn prop14_shape(r: &[VerificationReport]) -> Result<(), String> {
    // chordal graphs of order 1..=4: 1 + 2 + 4 + 10
    exactly(17)(r)
}

fn spot_shape(r: &[VerificationReport]) -> Result<(), String> {
    exactly(3 + 9)(r)
}

fn theorem12_shape(r: &[VerificationReport]) -> Result<(), String> {
    exactly(4 + 1)(r)
}

fn catalog_shape(r: &[VerificationReport]) -> Result<(), String> {
    exactly(2 * 6)(r)
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "Hanlon identity sweep",
        suite: Suite::Hanlon,
        limit: secs(60),
        shape: hanlon_shape,
    },
    Criterion {
        id: 2,
        title: "quotient vs filter fixed-point counts",
        suite: Suite::Lemma9,
        limit: secs(120),
        shape: lemma9_shape,
    },
    Criterion {
        id: 3,
        title: "class count vs averaged fixed points",
        suite: Suite::Lemma5,
        limit: secs(120),
        shape: lemma5_shape,
    },
    Criterion {
        id: 4,
        title: "stabilizer coset sizes",
        suite: Suite::Prop2,
        limit: None,
        shape: prop2_shape,
    },
    Criterion {
        id: 5,
        title: "Dong-Zhang inequality",
        suite: Suite::DongZhang,
        limit: secs(180),
        shape: dong_zhang_shape,
    },
    Criterion {
        id: 6,
        title: "path intersection bound",
        suite: Suite::Lemma11,
        limit: None,
        shape: lemma11_shape,
    },
    Criterion {
        id: 7,
        title: "disjoint union product formula",
        suite: Suite::Prop6,
        limit: secs(600),
        shape: prop6_shape,
    },
    Criterion {
        id: 8,
        title: "chordal graphs at k = 2",
        suite: Suite::Prop14,
        limit: None,
        shape: prop14_shape,
    },
    Criterion {
        id: 9,
        title: "list color function spot values",
        suite: Suite::SpotValues,
        limit: None,
        shape: spot_shape,
    },
    Criterion {
        id: 10,
        title: "cone identities",
        suite: Suite::Theorem12,
        limit: None,
        shape: theorem12_shape,
    },
    Criterion {
        id: 11,
        title: "catalog integrity",
        suite: Suite::Catalog,
        limit: secs(120),
        shape: catalog_shape,
    },
];

fn run(suite: Suite, workers: usize) -> Outcome {
    let cfg = SuiteConfig {
        workers,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let reports = run_suite(suite, &cfg).unwrap_or_else(|e| panic!("{suite}: {e}"));
    Outcome {
        reports,
        elapsed: start.elapsed(),
    }
}

fn judge(c: &Criterion, o: &Outcome) -> Result<(), String> {
    let failed: Vec<_> = o.reports.iter().filter(|r| r.status != Status::Pass).collect();
    if let Some(first) = failed.first() {
        return Err(format!(
            "{} of {} not passing; first: {} [{}] {} vs {}",
            failed.len(),
            o.reports.len(),
            first.instance,
            first.note.as_deref().unwrap_or(""),
            first.lhs,
            first.rhs
        ));
    }
    (c.shape)(&o.reports)?;
    if let Some(limit) = c.limit {
        if o.elapsed > limit {
            return Err(format!("took {:.1?}, limit {limit:?}", o.elapsed));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut parallel_json = String::new();
    for c in &CRITERIA {
        let o = run(c.suite, WORKERS);
        let verdict = judge(c, &o);
        all_ok &= verdict.is_ok();
        let detail = match &verdict {
            Ok(()) => format!("{} reports", o.reports.len()),
            Err(e) => e.clone(),
        };
        lines.push(format!(
            "{} criterion {:>2} ({}): {} in {:.2?}",
            if verdict.is_ok() { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            detail,
            o.elapsed
        ));
        parallel_json.push_str(&to_json_lines(&o.reports).unwrap());
    }

    let mut serial_json = String::new();
    for c in &CRITERIA {
        serial_json.push_str(&to_json_lines(&run(c.suite, 1).reports).unwrap());
    }
    let same = serial_json == parallel_json;
    all_ok &= same;
    lines.push(format!(
        "{} criterion 12 (determinism, 1 vs {WORKERS} workers): {} bytes {}",
        if same { "PASS" } else { "FAIL" },
        parallel_json.len(),
        if same { "identical" } else { "differ" }
    ));

    for l in &lines {
        println!("{l}");
    }
    assert!(all_ok, "acceptance failures:\n{}", lines.join("\n"));
}
