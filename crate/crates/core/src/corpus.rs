//! Corpus runs: every theorem on every ideal of every ring in a list, plus
//! counterexample search over parametric families.

use std::cmp::Ordering;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::verify_axioms;
use crate::error::{Error, Result};
use crate::expr::{parse_ring_expr, RingExpr};
use crate::predicates::{evaluate, PredicateId, PredicateResult};
use crate::ring::{build, Elem, Limits, RingTable};
use crate::structure::{all_ideals, IdealMask};
use crate::theorems::{verify_in, IdealContext, RingContext, TheoremId, TheoremVerdict};

/// The rings of the built-in corpus, in file order.
pub const DEFAULT_RINGS: &[&str] = &[
    "Z(1)",
    "Z(2)",
    "Z(3)",
    "Z(4)",
    "Z(5)",
    "Z(6)",
    "Z(7)",
    "Z(8)",
    "Z(9)",
    "Z(10)",
    "Z(11)",
    "Z(12)",
    "Zi(2)",
    "Zi(3)",
    "Zi(4)",
    "Zi(5)",
    "Zi(6)",
    "Zi(7)",
    "M(2,Z(2))",
    "M(2,Z(3))",
    "T(2,Z(2))",
    "T(2,Z(3))",
    "T(2,Z(4))",
    "prod(Z(2),Z(3))",
    "prod(Z(2),Z(4))",
    "prod(Z(3),M(2,Z(2)))",
    "quot(T(2,Z(2)),jacobson)",
    "quot(Z(12),gen(4))",
    "quot(M(2,Z(2)),zero)",
    "corner(M(2,Z(2)),[1,0,0,0])",
    "corner(T(2,Z(3)),[1,0,0])",
];

/// Text of the shipped `default.toml`, kept equal to [`DEFAULT_RINGS`].
pub const DEFAULT_TOML: &str = include_str!("../corpus/default.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusFile {
    name: Option<String>,
    rings: Vec<String>,
    #[serde(default)]
    theorems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub name: String,
    pub rings: Vec<RingExpr>,
    pub theorems: Vec<TheoremId>,
}

impl Corpus {
    pub fn builtin() -> Corpus {
        Corpus {
            name: "default".into(),
            rings: DEFAULT_RINGS
                .iter()
                .map(|s| parse_ring_expr(s).expect("default corpus parses"))
                .collect(),
            theorems: TheoremId::PER_IDEAL.to_vec(),
        }
    }

    /// Parses the TOML corpus format: `name`, `rings` (ring expressions) and
    /// an optional `theorems` filter (ids or `"all"`).
    pub fn from_toml(text: &str) -> Result<Corpus> {
        let file: CorpusFile = toml::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
        let rings = file
            .rings
            .iter()
            .map(|s| parse_ring_expr(s).map_err(|e| Error::Corpus(format!("ring `{s}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus {
            name: file.name.unwrap_or_else(|| "corpus".into()),
            rings,
            theorems: parse_theorem_filter(&file.theorems)?,
        })
    }

    /// Loads a corpus file. A missing file named `default` or `default.toml`
    /// resolves to the built-in corpus.
    pub fn load(path: &Path) -> Result<Corpus> {
        match std::fs::read_to_string(path) {
            Ok(text) => Corpus::from_toml(&text),
            Err(e) => {
                let stem = path.file_stem().and_then(|s| s.to_str());
                if stem == Some("default") && path.parent().is_none_or(|p| p.as_os_str().is_empty()) {
                    Ok(Corpus::builtin())
                } else {
                    Err(Error::Corpus(format!("{}: {e}", path.display())))
                }
            }
        }
    }
}

/// `[]` and `["all"]` select every per-ideal theorem.
pub fn parse_theorem_filter(ids: &[String]) -> Result<Vec<TheoremId>> {
    if ids.is_empty() || ids.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(TheoremId::PER_IDEAL.to_vec());
    }
    let mut out = ids.iter().map(|s| s.parse()).collect::<Result<Vec<TheoremId>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// One verdict with the instance it was computed on.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceVerdict {
    pub ring: String,
    pub ideal: String,
    pub ideal_size: usize,
    pub ideal_members: Vec<Elem>,
    #[serde(flatten)]
    pub verdict: TheoremVerdict,
}

/// A ring that never reached the theorem stage, or an instance that errored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingFailure {
    pub ring: String,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub theorem: String,
    pub instances: usize,
    pub hypotheses_met: usize,
    pub vacuous: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub first_clause_true: usize,
    pub first_clause_false: usize,
}

impl Tally {
    /// Tested with a non-vacuous true instance and a clause-false instance.
    pub fn covered(&self) -> bool {
        self.first_clause_true > 0 && self.first_clause_false > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub corpus: String,
    pub rings: usize,
    pub verdicts: Vec<InstanceVerdict>,
    pub failures: Vec<RingFailure>,
    pub tallies: Vec<Tally>,
}

impl CorpusReport {
    pub fn inconsistencies(&self) -> impl Iterator<Item = &InstanceVerdict> {
        self.verdicts.iter().filter(|v| !v.verdict.consistent)
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.inconsistencies().next().is_none()
    }

    pub fn tally(&self, id: TheoremId) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.theorem == id.name())
    }
}

fn instance_order(a: &InstanceVerdict, b: &InstanceVerdict) -> Ordering {
    (&a.ring, a.ideal_size, &a.ideal_members, a.verdict.theorem).cmp(&(
        &b.ring,
        b.ideal_size,
        &b.ideal_members,
        b.verdict.theorem,
    ))
}

fn tallies(verdicts: &[InstanceVerdict], theorems: &[TheoremId]) -> Vec<Tally> {
    theorems
        .iter()
        .map(|&id| {
            let mut t = Tally {
                theorem: id.name().into(),
                ..Tally::default()
            };
            for v in verdicts.iter().map(|v| &v.verdict).filter(|v| v.theorem == id) {
                t.instances += 1;
                if v.hypotheses_hold {
                    t.hypotheses_met += 1;
                    match v.clauses.first().map(|c| c.value) {
                        Some(true) => t.first_clause_true += 1,
                        Some(false) => t.first_clause_false += 1,
                        None => {}
                    }
                } else {
                    t.vacuous += 1;
                }
                if v.consistent {
                    t.consistent += 1;
                } else {
                    t.inconsistent += 1;
                }
            }
            t
        })
        .collect()
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| Error::Corpus(format!("thread pool: {e}")))
}

fn check_ring(ring: &RingTable, limits: &Limits, theorems: &[TheoremId]) -> (Vec<InstanceVerdict>, Vec<RingFailure>) {
    let label = ring.provenance().to_string();
    let fail = |e: Error| RingFailure {
        ring: label.clone(),
        error: e.to_string(),
    };
    let report = verify_axioms(ring);
    if let Some(v) = report.violations.first() {
        let e = Error::AxiomsViolated {
            ring: label.clone(),
            first: report.describe(ring, v),
        };
        return (vec![], vec![fail(e)]);
    }
    let ideals = match all_ideals(ring, limits) {
        Ok(i) => i,
        Err(e) => return (vec![], vec![fail(e)]),
    };
    let rc = RingContext::new(ring, *limits);
    let contexts: Vec<IdealContext> = ideals
        .iter()
        .map(|i| IdealContext::new(&rc, i).expect("ideal of this ring"))
        .collect();
    let jobs: Vec<(usize, TheoremId)> = (0..ideals.len())
        .flat_map(|i| theorems.iter().map(move |&t| (i, t)))
        .collect();
    let results: Vec<Result<InstanceVerdict>> = jobs
        .par_iter()
        .map(|&(i, t)| {
            let verdict = verify_in(&contexts[i], t)?;
            let ideal = &ideals[i];
            Ok(InstanceVerdict {
                ring: label.clone(),
                ideal: ideal.describe(ring).to_string(),
                ideal_size: ideal.len(),
                ideal_members: ideal.iter().collect(),
                verdict,
            })
        })
        .collect();
    let mut verdicts = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(v) => verdicts.push(v),
            Err(e) => failures.push(fail(e)),
        }
    }
    (verdicts, failures)
}

/// Runs the requested theorems on prepared tables. Each table is checked
/// against the ring axioms first; tables that fail are reported and skipped.
pub fn run_tables(
    name: &str,
    rings: &[RingTable],
    theorems: &[TheoremId],
    limits: &Limits,
    threads: Option<usize>,
) -> Result<CorpusReport> {
    let parts: Vec<(Vec<InstanceVerdict>, Vec<RingFailure>)> =
        pool(threads)?.install(|| rings.par_iter().map(|r| check_ring(r, limits, theorems)).collect());
    let mut verdicts = Vec::new();
    let mut failures = Vec::new();
    for (v, f) in parts {
        verdicts.extend(v);
        failures.extend(f);
    }
    Ok(finish(name, rings.len(), verdicts, failures, theorems))
}

fn finish(
    name: &str,
    rings: usize,
    mut verdicts: Vec<InstanceVerdict>,
    mut failures: Vec<RingFailure>,
    theorems: &[TheoremId],
) -> CorpusReport {
    verdicts.sort_by(instance_order);
    failures.sort_by(|a, b| (&a.ring, &a.error).cmp(&(&b.ring, &b.error)));
    failures.dedup();
    let tallies = tallies(&verdicts, theorems);
    CorpusReport {
        corpus: name.into(),
        rings,
        verdicts,
        failures,
        tallies,
    }
}

/// Builds every ring of the corpus and runs its theorem filter. Construction
/// errors are collected in the report.
pub fn run_corpus(corpus: &Corpus, limits: &Limits, threads: Option<usize>) -> Result<CorpusReport> {
    let built: Vec<Result<RingTable>> =
        pool(threads)?.install(|| corpus.rings.par_iter().map(|e| build(e, limits)).collect());
    let mut rings = Vec::new();
    let mut failures = Vec::new();
    for (expr, r) in corpus.rings.iter().zip(built) {
        match r {
            Ok(r) => rings.push(r),
            Err(e) => failures.push(RingFailure {
                ring: expr.to_string(),
                error: e.to_string(),
            }),
        }
    }
    let mut report = run_tables(&corpus.name, &rings, &corpus.theorems, limits, threads)?;
    report.rings = corpus.rings.len();
    failures.append(&mut report.failures);
    Ok(finish(
        &corpus.name,
        corpus.rings.len(),
        report.verdicts,
        failures,
        &corpus.theorems,
    ))
}

/// Substitutes each parameter for `{n}` in a ring template.
pub fn instantiate(template: &str, params: &[u64]) -> Result<Vec<RingExpr>> {
    if !template.contains("{n}") {
        return Err(Error::PreconditionFailed(format!(
            "template `{template}` has no {{n}} placeholder"
        )));
    }
    params
        .iter()
        .map(|p| parse_ring_expr(&template.replace("{n}", &p.to_string())))
        .collect()
}

/// An instance where predicate A holds and predicate B fails.
#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub ring: String,
    pub ideal: String,
    pub ideal_size: usize,
    pub ideal_members: Vec<Elem>,
    pub a: PredicateResult,
    pub b: PredicateResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub template: String,
    pub a: PredicateId,
    pub b: PredicateId,
    pub instances: usize,
    pub hits: Vec<SearchHit>,
    pub failures: Vec<RingFailure>,
}

/// Lists every `(ring, ideal)` of the family with `a` true and `b` false.
pub fn search_counterexamples(
    template: &str,
    params: &[u64],
    a: PredicateId,
    b: PredicateId,
    limits: &Limits,
    threads: Option<usize>,
) -> Result<SearchReport> {
    let exprs = instantiate(template, params)?;
    let per_ring = |e: &RingExpr| -> Result<(usize, Vec<SearchHit>)> {
        let r = build(e, limits)?;
        let ideals = all_ideals(&r, limits)?;
        let mut hits = Vec::new();
        for i in &ideals {
            let ra = evaluate(a, &r, i, limits)?;
            if !ra.holds {
                continue;
            }
            let rb = evaluate(b, &r, i, limits)?;
            if !rb.holds {
                hits.push(hit(&r, i, ra, rb));
            }
        }
        Ok((ideals.len(), hits))
    };
    let results: Vec<Result<(usize, Vec<SearchHit>)>> =
        pool(threads)?.install(|| exprs.par_iter().map(per_ring).collect());
    let mut instances = 0;
    let mut hits = Vec::new();
    let mut failures = Vec::new();
    for (e, r) in exprs.iter().zip(results) {
        match r {
            Ok((n, h)) => {
                instances += n;
                hits.extend(h);
            }
            Err(err) => failures.push(RingFailure {
                ring: e.to_string(),
                error: err.to_string(),
            }),
        }
    }
    Ok(SearchReport {
        template: template.into(),
        a,
        b,
        instances,
        hits,
        failures,
    })
}

fn hit(r: &RingTable, i: &IdealMask, a: PredicateResult, b: PredicateResult) -> SearchHit {
    SearchHit {
        ring: r.provenance().to_string(),
        ideal: i.describe(r).to_string(),
        ideal_size: i.len(),
        ideal_members: i.iter().collect(),
        a,
        b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_cyclic;

    #[test]
    fn shipped_file_matches_builtin() {
        let file = Corpus::from_toml(DEFAULT_TOML).unwrap();
        assert_eq!(file, Corpus::builtin());
        assert!(file.rings.len() >= 25);
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(parse_theorem_filter(&[]).unwrap().len(), 12);
        let f = parse_theorem_filter(&["T42".into(), "L31".into(), "T42".into()]).unwrap();
        assert_eq!(f, vec![TheoremId::L31, TheoremId::T42]);
        assert!(parse_theorem_filter(&["Q1".into()]).is_err());
        assert!(Corpus::from_toml("rings = [\"Z(\"]").is_err());
        assert!(Corpus::from_toml("ringz = []").is_err());
    }

    #[test]
    fn trivial_ring_corpus() {
        let c = Corpus {
            name: "t".into(),
            rings: vec![RingExpr::Cyclic(1)],
            theorems: TheoremId::PER_IDEAL.to_vec(),
        };
        let rep = run_corpus(&c, &Limits::default(), Some(1)).unwrap();
        assert!(rep.is_clean());
        assert_eq!(rep.verdicts.len(), 12);
    }

    #[test]
    fn corrupted_table_stops_before_theorems() {
        let mut raw = make_cyclic(6).to_raw_parts();
        raw.mul[6 + 2] = 3;
        let bad = RingTable::from_raw_parts(raw);
        let rep = run_tables(
            "bad",
            &[bad, make_cyclic(2)],
            &[TheoremId::L31],
            &Limits::default(),
            Some(2),
        )
        .unwrap();
        assert_eq!(rep.failures.len(), 1);
        assert!(rep.failures[0].error.contains("axioms"));
        assert!(rep.verdicts.iter().all(|v| v.ring == "Z(2)"));
    }

    #[test]
    fn build_errors_are_collected() {
        let c = Corpus::from_toml("rings = [\"M(2,Z(9))\", \"Z(2)\"]").unwrap();
        let lim = Limits::with_max_size(100);
        let rep = run_corpus(&c, &lim, Some(1)).unwrap();
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].ring, "M(2,Z(9))");
    }

    #[test]
    fn searches() {
        let lim = Limits::default();
        let ns: Vec<u64> = (2..=12).collect();
        let r = search_counterexamples(
            "Z({n})",
            &ns,
            PredicateId::Exchange,
            PredicateId::SquareStable,
            &lim,
            None,
        )
        .unwrap();
        assert!(r.hits.is_empty() && r.failures.is_empty());

        let r = search_counterexamples(
            "M(2,Z({n}))",
            &[2, 3],
            PredicateId::Regular,
            PredicateId::Reduced,
            &lim,
            None,
        )
        .unwrap();
        let rings: Vec<&str> = r.hits.iter().map(|h| h.ring.as_str()).collect();
        assert_eq!(rings, vec!["M(2,Z(2))", "M(2,Z(3))"]);
        assert!(r.hits.iter().all(|h| h.ideal == "all"));

        let r = search_counterexamples(
            "T(2,Z({n}))",
            &[2, 3, 4],
            PredicateId::InJacobson,
            PredicateId::SquareStable,
            &lim,
            None,
        )
        .unwrap();
        assert!(r.hits.is_empty());
        assert!(instantiate("Z(3)", &[1]).is_err());
    }
}
