use std::time::Instant;

use ringcheck::corpus::{run_corpus, Corpus, DEFAULT_TOML};
use ringcheck::Limits;

fn main() -> ringcheck::Result<()> {
    let start = Instant::now();
    let corpus = Corpus::from_toml(DEFAULT_TOML)?;
    let report = run_corpus(&corpus, &Limits::default(), None)?;
    for t in &report.tallies {
        println!(
            "{:6} instances={:4} met={:4} vacuous={:4} clause1 true={:4} false={:4} inconsistent={}",
            t.theorem,
            t.instances,
            t.hypotheses_met,
            t.vacuous,
            t.first_clause_true,
            t.first_clause_false,
            t.inconsistent
        );
    }
    for f in &report.failures {
        println!("error {}: {}", f.ring, f.error);
    }
    for v in report.inconsistencies() {
        println!(
            "inconsistent {} on {} {}: {}",
            v.verdict.theorem,
            v.ring,
            v.ideal,
            v.verdict.detail.as_deref().unwrap_or("")
        );
    }
    println!(
        "{} rings, {} verdicts in {:.2?}",
        report.rings,
        report.verdicts.len(),
        start.elapsed()
    );
    Ok(())
}
