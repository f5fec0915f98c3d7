//! Acceptance criteria 1-12, one verdict line per criterion.

use std::time::{Duration, Instant};

use vexil::verify::{run_suite, Report, SuiteOptions};
use vexil::WeylType;

struct Criterion {
    id: u32,
    name: &'static str,
    runs: Vec<(&'static str, SuiteOptions)>,
    budget: Duration,
    blocking: bool,
}

fn opts(n: Option<usize>, ty: Option<WeylType>) -> SuiteOptions {
    SuiteOptions { n, ty, ..Default::default() }
}

fn criteria() -> Vec<Criterion> {
    let plain = || SuiteOptions::default();
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "vexillary census of W_3", runs: vec![("census", opts(Some(3), None))], budget: secs(5), blocking: true },
        Criterion {
            id: 2,
            name: "theorem equivalence on W_3 (and W_4 type C)",
            runs: vec![("theorem-equivalence", opts(Some(3), None)), ("theorem-equivalence", opts(Some(4), Some(WeylType::C)))],
            budget: secs(120),
            blocking: true,
        },
        Criterion { id: 3, name: "well-definedness and stability", runs: vec![("stability", opts(Some(3), None))], budget: secs(600), blocking: true },
        Criterion { id: 4, name: "type-B scaling", runs: vec![("b-scaling", opts(Some(3), None))], budget: secs(600), blocking: true },
        Criterion { id: 5, name: "inverse symmetry", runs: vec![("inverse-swap", opts(Some(3), None))], budget: secs(600), blocking: true },
        Criterion { id: 6, name: "skew-symmetry and redundancy", runs: vec![("redundancy", plain())], budget: secs(600), blocking: true },
        Criterion { id: 7, name: "vanishing of Q_(k,l) under negt", runs: vec![("lemma25", opts(Some(4), None))], budget: secs(600), blocking: true },
        Criterion { id: 8, name: "type-D identities r = p(+)", runs: vec![("identity-2-3", opts(Some(5), None))], budget: secs(600), blocking: true },
        Criterion { id: 9, name: "non-vexillary witness", runs: vec![("census", opts(Some(3), None))], budget: secs(600), blocking: true },
        Criterion { id: 10, name: "type A", runs: vec![("type-a", opts(Some(4), None))], budget: secs(600), blocking: true },
        Criterion { id: 11, name: "appendix", runs: vec![("appendix-a1", plain()), ("appendix-a2", plain())], budget: secs(600), blocking: true },
        Criterion { id: 12, name: "Q-basis positivity on W_3 type C", runs: vec![("positivity", opts(Some(3), None))], budget: secs(600), blocking: false },
    ]
}

/// Criterion 9 is the witness line of the census report.
fn witness_only(r: &Report) -> bool {
    r.lines.iter().filter(|l| l.contains("-3 2 -1")).all(|l| l.starts_with("ok")) && r.lines.iter().any(|l| l.contains("top term"))
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let mut ok = true;
        let mut details = Vec::new();
        for (suite, o) in &c.runs {
            match run_suite(suite, o) {
                Ok(r) => {
                    ok &= if c.id == 9 { witness_only(&r) } else { r.passed };
                    details.push(r.to_string());
                }
                Err(e) => {
                    ok = false;
                    details.push(format!("suite {suite}: error {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        let timely = elapsed <= c.budget;
        let verdict = match (ok && timely, c.blocking) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FINDINGS",
        };
        println!("criterion {}: {verdict} {} ({:.2}s)", c.id, c.name, elapsed.as_secs_f64());
        if !ok || !timely {
            for d in &details {
                print!("{d}");
            }
            if !timely {
                println!("  over the {}s budget", c.budget.as_secs());
            }
            if c.blocking {
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
