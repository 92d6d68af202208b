//! Command-line front end. Every engine operation is a verb; reports go to
//! the supplied writer as a text table or as JSON lines.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::axioms::verify_axioms;
use crate::corpus::{parse_theorem_filter, run_corpus, search_counterexamples, Corpus, CorpusReport, SearchReport};
use crate::element::{classify, classify_all, ElementProfile};
use crate::error::{Error, Result};
use crate::expr::{parse_ideal_spec, parse_ring_expr, IdealSpec, RingExpr};
use crate::predicates::{evaluate, PredicateId, PredicateResult};
use crate::ring::{build, resolve_ideal, Limits, RingTable};
use crate::structure::{all_ideals, idempotents, jacobson_radical, nilpotents, units, IdealMask};
use crate::theorems::{verify_example41, TheoremId};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "ringcheck",
    version,
    about = "Exhaustive checks of ideal properties over finite rings"
)]
pub struct Cli {
    /// Largest ring (number of elements) any constructor may build.
    #[arg(long, global = true, default_value_t = 4096)]
    pub max_size: usize,
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit 1 when a predicate is false or a theorem check is inconsistent.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Check the ring axioms on the tables of a ring.
    Axioms {
        #[arg(long, value_parser = parse_ring_expr)]
        ring: RingExpr,
    },
    /// Size, units, idempotents, radical and ideal count of a ring.
    Describe {
        #[arg(long, value_parser = parse_ring_expr)]
        ring: RingExpr,
    },
    /// Per-element classification with witnesses.
    Classify {
        #[arg(long, value_parser = parse_ring_expr)]
        ring: RingExpr,
        /// Only this element (canonical literal).
        #[arg(long)]
        element: Option<String>,
    },
    /// All two-sided ideals with their main properties.
    Ideals {
        #[arg(long, value_parser = parse_ring_expr)]
        ring: RingExpr,
    },
    /// Evaluate one predicate on one ideal.
    Check {
        predicate: PredicateId,
        #[arg(long, value_parser = parse_ring_expr)]
        ring: RingExpr,
        #[arg(long, value_parser = parse_ideal_spec, default_value = "all")]
        ideal: IdealSpec,
    },
    /// Check theorems on a corpus (default: the built-in one) or on one ring.
    Verify {
        /// `all`, or a comma-separated list of theorem ids.
        theorems: String,
        #[arg(long, conflicts_with = "ring")]
        corpus: Option<PathBuf>,
        #[arg(long, value_parser = parse_ring_expr)]
        ring: Option<RingExpr>,
        /// Restrict a single-ring run to one ideal; default is every ideal.
        #[arg(long, value_parser = parse_ideal_spec, requires = "ring")]
        ideal: Option<IdealSpec>,
    },
    /// Search Zi(n) for a nonzero regular square-stable ideal.
    Example41 {
        #[arg(long)]
        n: u64,
    },
    /// List instances of a family where predicate A holds and B fails.
    Search {
        /// Ring template with an `{n}` placeholder, e.g. `M(2,Z({n}))`.
        #[arg(long)]
        family: String,
        /// `lo..hi` (inclusive) or a comma-separated list.
        #[arg(long)]
        params: ParamRange,
        #[arg(long)]
        a: PredicateId,
        #[arg(long)]
        b: PredicateId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub Vec<u64>);

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("`{s}` is not `lo..hi` or a comma-separated list of integers");
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            return Ok(ParamRange((lo..=hi).collect()));
        }
        s.split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<std::result::Result<_, _>>()
            .map(ParamRange)
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.0;
        if v.len() > 1 && v.windows(2).all(|w| w[1] == w[0] + 1) {
            write!(f, "{}..{}", v[0], v[v.len() - 1])
        } else {
            let parts: Vec<String> = v.iter().map(u64::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl Cli {
    /// Argument vector in canonical form (all global flags spelled out).
    pub fn canonical_args(&self) -> Vec<String> {
        let mut a: Vec<String> = vec!["ringcheck".into(), "--max-size".into(), self.max_size.to_string()];
        if let Some(t) = self.threads {
            a.extend(["--threads".into(), t.to_string()]);
        }
        let fmt = match self.format {
            Format::Text => "text",
            Format::Json => "json",
        };
        a.extend(["--format".into(), fmt.into()]);
        if self.strict {
            a.push("--strict".into());
        }
        let ring = |a: &mut Vec<String>, r: &RingExpr| a.extend(["--ring".into(), r.to_string()]);
        match &self.command {
            Command::Axioms { ring: r } => {
                a.push("axioms".into());
                ring(&mut a, r);
            }
            Command::Describe { ring: r } => {
                a.push("describe".into());
                ring(&mut a, r);
            }
            Command::Classify { ring: r, element } => {
                a.push("classify".into());
                ring(&mut a, r);
                if let Some(e) = element {
                    a.extend(["--element".into(), crate::expr::normalize_literal(e)]);
                }
            }
            Command::Ideals { ring: r } => {
                a.push("ideals".into());
                ring(&mut a, r);
            }
            Command::Check {
                predicate,
                ring: r,
                ideal,
            } => {
                a.extend(["check".into(), predicate.to_string()]);
                ring(&mut a, r);
                a.extend(["--ideal".into(), ideal.to_string()]);
            }
            Command::Verify {
                theorems,
                corpus,
                ring: r,
                ideal,
            } => {
                a.extend(["verify".into(), theorems.clone()]);
                if let Some(c) = corpus {
                    a.extend(["--corpus".into(), c.display().to_string()]);
                }
                if let Some(r) = r {
                    ring(&mut a, r);
                }
                if let Some(i) = ideal {
                    a.extend(["--ideal".into(), i.to_string()]);
                }
            }
            Command::Example41 { n } => a.extend(["example41".into(), "--n".into(), n.to_string()]),
            Command::Search {
                family,
                params,
                a: pa,
                b: pb,
            } => a.extend([
                "search".into(),
                "--family".into(),
                family.clone(),
                "--params".into(),
                params.to_string(),
                "--a".into(),
                pa.to_string(),
                "--b".into(),
                pb.to_string(),
            ]),
        }
        a
    }

    /// The canonical command as one shell-quoted line.
    pub fn canonical(&self) -> String {
        let quote = |s: &String| {
            if s.chars().any(|c| c.is_whitespace() || "(){}[]<>,'\"$&|;*?".contains(c)) {
                format!("'{}'", s.replace('\'', r"'\''"))
            } else {
                s.clone()
            }
        };
        self.canonical_args().iter().map(quote).collect::<Vec<_>>().join(" ")
    }

    fn limits(&self) -> Limits {
        Limits::with_max_size(self.max_size)
    }
}

struct Out<'w> {
    w: &'w mut dyn Write,
    format: Format,
}

impl Out<'_> {
    fn line(&mut self, s: impl fmt::Display) -> Result<()> {
        writeln!(self.w, "{s}").map_err(|e| Error::Corpus(format!("write failed: {e}")))
    }

    fn record(&mut self, kind: &str, body: impl Serialize) -> Result<()> {
        let mut v = serde_json::to_value(body).expect("report types serialize");
        let obj = match v {
            Value::Object(ref mut m) => m,
            _ => unreachable!("records are structs"),
        };
        let mut out = serde_json::Map::new();
        out.insert("record".into(), Value::String(kind.into()));
        out.append(obj);
        self.line(Value::Object(out))
    }

    fn text(&self) -> bool {
        self.format == Format::Text
    }
}

/// Whether a run produced a result that `--strict` turns into exit 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub negative: bool,
    pub inconsistent: bool,
}

impl Outcome {
    pub fn exit_code(self, strict: bool) -> i32 {
        if strict && (self.negative || self.inconsistent) {
            1
        } else {
            0
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(o) => o.exit_code(cli.strict),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

pub fn run(cli: &Cli, w: &mut dyn Write) -> Result<Outcome> {
    let mut out = Out { w, format: cli.format };
    let limits = cli.limits();
    let ok = Outcome {
        negative: false,
        inconsistent: false,
    };
    match &cli.command {
        Command::Axioms { ring } => {
            let r = build(ring, &limits)?;
            let report = verify_axioms(&r);
            if out.text() {
                if report.is_ok() {
                    out.line(format!("{ring}: {} elements, all ring axioms hold", r.n()))?;
                }
                for v in &report.violations {
                    out.line(format!("{ring}: {}", report.describe(&r, v)))?;
                }
            } else {
                out.record("axioms", json!({"ring": ring.to_string(), "size": r.n(), "ok": report.is_ok(), "violations": report.violations}))?;
            }
            Ok(Outcome {
                negative: !report.is_ok(),
                ..ok
            })
        }
        Command::Describe { ring } => {
            let r = build(ring, &limits)?;
            describe(&mut out, &r, &limits)?;
            Ok(ok)
        }
        Command::Classify { ring, element } => {
            let r = build(ring, &limits)?;
            let profiles = match element {
                Some(e) => vec![classify(&r, r.lookup(e)?)],
                None => classify_all(&r),
            };
            if out.text() {
                out.line(format!(
                    "{:<14} {:>4} {:>4} {:>4} {:<14} {:<14} {:<14}",
                    "element", "unit", "idem", "nil", "regular", "unit-regular", "strongly-reg"
                ))?;
            }
            for p in &profiles {
                print_profile(&mut out, &r, p)?;
            }
            Ok(ok)
        }
        Command::Ideals { ring } => {
            let r = build(ring, &limits)?;
            let ideals = all_ideals(&r, &limits)?;
            let cols = [
                PredicateId::SquareStable,
                PredicateId::Exchange,
                PredicateId::Regular,
                PredicateId::Reduced,
                PredicateId::InJacobson,
                PredicateId::StableRangeOne,
            ];
            if out.text() {
                let head: Vec<String> = cols.iter().map(|c| c.to_string()).collect();
                out.line(format!("{ring}: {} ideals; columns {}", ideals.len(), head.join(" ")))?;
            }
            for i in &ideals {
                let flags = cols
                    .iter()
                    .map(|&c| evaluate(c, &r, i, &limits).map(|p| p.holds))
                    .collect::<Result<Vec<_>>>()?;
                if out.text() {
                    let marks: String = flags.iter().map(|&f| if f { 'Y' } else { '.' }).collect();
                    out.line(format!(
                        "  {:<24} {:>5}  {}  {{{}}}",
                        i.describe(&r).to_string(),
                        i.len(),
                        marks,
                        i.member_names(&r).join(", ")
                    ))?;
                } else {
                    let props: serde_json::Map<String, Value> = cols
                        .iter()
                        .zip(&flags)
                        .map(|(c, &f)| (c.to_string(), Value::Bool(f)))
                        .collect();
                    out.record("ideal", json!({"ring": ring.to_string(), "ideal": i.describe(&r).to_string(), "size": i.len(), "members": i.member_names(&r), "properties": props}))?;
                }
            }
            Ok(ok)
        }
        Command::Check { predicate, ring, ideal } => {
            let r = build(ring, &limits)?;
            let i = resolve_ideal(&r, ideal)?;
            let p = evaluate(*predicate, &r, &i, &limits)?;
            print_predicate(&mut out, &r, ideal, &p)?;
            Ok(Outcome {
                negative: !p.holds,
                inconsistent: p.fault.is_some(),
            })
        }
        Command::Verify {
            theorems,
            corpus,
            ring,
            ideal,
        } => {
            let ids: Vec<String> = theorems.split(',').map(|s| s.trim().to_string()).collect();
            let explicit = !ids.iter().any(|s| s.eq_ignore_ascii_case("all"));
            let filter = parse_theorem_filter(&ids)?;
            let report = match ring {
                Some(expr) => {
                    let r = build(expr, &limits)?;
                    let mut c = Corpus {
                        name: expr.to_string(),
                        rings: vec![],
                        theorems: filter,
                    };
                    if let Some(spec) = ideal {
                        return verify_one(&mut out, &r, spec, &c.theorems, &limits);
                    }
                    c.rings.push(expr.clone());
                    crate::corpus::run_tables(&c.name, &[r], &c.theorems, &limits, cli.threads)?
                }
                None => {
                    let mut c = match corpus {
                        Some(path) => Corpus::load(path)?,
                        None => Corpus::builtin(),
                    };
                    if explicit {
                        c.theorems = filter;
                    }
                    run_corpus(&c, &limits, cli.threads)?
                }
            };
            print_corpus(&mut out, &report)?;
            let inconsistent = !report.is_clean();
            Ok(Outcome {
                negative: inconsistent,
                inconsistent,
            })
        }
        Command::Example41 { n } => {
            let ex = verify_example41(*n, &limits)?;
            let witness = ex.witness.as_ref();
            if out.text() {
                let head = format!("Zi({n}): {} elements", ex.ring.n());
                match witness {
                    Some(i) => out.line(format!(
                        "{head}; found nonzero regular square-stable ideal {} of size {}: {{{}}}",
                        i.describe(&ex.ring),
                        i.len(),
                        i.member_names(&ex.ring).join(", ")
                    ))?,
                    None if ex.verdict.hypotheses_hold => {
                        out.line(format!("{head}; no nonzero regular square-stable ideal"))?
                    }
                    None => out.line(format!(
                        "{head}; n has no odd prime factor of multiplicity one, nothing to check"
                    ))?,
                }
            } else {
                out.record(
                    "example41",
                    json!({
                        "n": n,
                        "size": ex.ring.n(),
                        "qualifies": ex.verdict.hypotheses_hold,
                        "found": witness.is_some(),
                        "ideal": witness.map(|i| i.describe(&ex.ring).to_string()),
                        "ideal_size": witness.map(|i| i.len()),
                        "members": witness.map(|i| i.member_names(&ex.ring)),
                        "verdict": ex.verdict,
                    }),
                )?;
            }
            Ok(Outcome {
                negative: witness.is_none(),
                inconsistent: !ex.verdict.consistent,
            })
        }
        Command::Search { family, params, a, b } => {
            let rep = search_counterexamples(family, &params.0, *a, *b, &limits, cli.threads)?;
            print_search(&mut out, &rep)?;
            Ok(Outcome {
                negative: !rep.hits.is_empty(),
                ..ok
            })
        }
    }
}

fn describe(out: &mut Out, r: &RingTable, limits: &Limits) -> Result<()> {
    let names = |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| r.name(x).to_string()).collect::<Vec<_>>();
    let u = names(&mut units(r).mask.iter());
    let e = names(&mut idempotents(r).iter().copied());
    let j = names(&mut jacobson_radical(r).iter());
    let nil = names(&mut nilpotents(r).iter().copied());
    let ideals = all_ideals(r, limits).map(|v| v.len());
    let full = IdealMask::full(r);
    let ssr1 = evaluate(PredicateId::SquareStableRangeOne, r, &full, limits)?.holds;
    let abelian = evaluate(PredicateId::Abelian, r, &full, limits)?.holds;
    if out.text() {
        out.line(format!("ring         {}", r.provenance()))?;
        out.line(format!("size         {}", r.n()))?;
        out.line(format!("commutative  {}", r.is_commutative()))?;
        out.line(format!("abelian      {abelian}"))?;
        out.line(format!("ssr1         {ssr1}"))?;
        out.line(format!("units        {} {{{}}}", u.len(), u.join(", ")))?;
        out.line(format!("idempotents  {} {{{}}}", e.len(), e.join(", ")))?;
        out.line(format!("jacobson     {} {{{}}}", j.len(), j.join(", ")))?;
        out.line(format!("nilpotents   {} {{{}}}", nil.len(), nil.join(", ")))?;
        match ideals {
            Ok(n) => out.line(format!("ideals       {n}")),
            Err(e) => out.line(format!("ideals       ({e})")),
        }
    } else {
        out.record(
            "describe",
            json!({
                "ring": r.provenance().to_string(),
                "size": r.n(),
                "commutative": r.is_commutative(),
                "abelian": abelian,
                "square_stable_range_one": ssr1,
                "units": u,
                "idempotents": e,
                "jacobson": j,
                "nilpotents": nil,
                "ideals": ideals.ok(),
                "elements": r.names(),
            }),
        )
    }
}

fn opt_name(r: &RingTable, x: Option<usize>) -> String {
    x.map(|x| r.name(x).to_string()).unwrap_or_else(|| "-".into())
}

fn print_profile(out: &mut Out, r: &RingTable, p: &ElementProfile) -> Result<()> {
    if out.text() {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let strong = match (p.right_strong_witness, p.left_strong_witness) {
            (Some(x), Some(y)) => format!("{},{}", r.name(x), r.name(y)),
            _ => "-".into(),
        };
        out.line(format!(
            "{:<14} {:>4} {:>4} {:>4} {:<14} {:<14} {:<14}",
            r.name(p.element),
            yn(p.is_unit()),
            yn(p.is_idempotent),
            p.nilpotency_index.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            opt_name(r, p.regular_witness),
            opt_name(r, p.unit_regular_witness),
            strong
        ))
    } else {
        let mut v = serde_json::to_value(p).expect("profile serializes");
        v["name"] = Value::String(r.name(p.element).into());
        v["ring"] = Value::String(r.provenance().to_string());
        out.record("element", v)
    }
}

fn witness_names(r: &RingTable, p: &PredicateResult) -> Vec<String> {
    p.witness
        .iter()
        .map(|w| format!("{}={}", w.role, r.name(w.element)))
        .collect()
}

fn print_predicate(out: &mut Out, r: &RingTable, ideal: &IdealSpec, p: &PredicateResult) -> Result<()> {
    if out.text() {
        let mut s = format!("{} on {} / {}: holds={}", p.predicate, r.provenance(), ideal, p.holds);
        if !p.witness.is_empty() {
            s.push_str(&format!(" counterexample {}", witness_names(r, p).join(", ")));
        }
        for part in &p.parts {
            s.push_str(&format!(" [{}={}]", part.label, part.holds));
        }
        if let Some(f) = &p.fault {
            s.push_str(&format!(" FAULT: {f}"));
        }
        out.line(s)
    } else {
        let mut v = serde_json::to_value(p).expect("result serializes");
        v["ring"] = Value::String(r.provenance().to_string());
        v["ideal"] = Value::String(ideal.to_string());
        v["witness_names"] = json!(witness_names(r, p));
        out.record("predicate", v)
    }
}

fn verify_one(out: &mut Out, r: &RingTable, spec: &IdealSpec, ids: &[TheoremId], limits: &Limits) -> Result<Outcome> {
    let i = resolve_ideal(r, spec)?;
    let mut inconsistent = false;
    for &t in ids {
        let v = crate::theorems::verify(t, r, &i, limits)?;
        inconsistent |= !v.consistent;
        let row = crate::corpus::InstanceVerdict {
            ring: r.provenance().to_string(),
            ideal: spec.to_string(),
            ideal_size: i.len(),
            ideal_members: i.iter().collect(),
            verdict: v,
        };
        print_verdict(out, &row)?;
    }
    Ok(Outcome {
        negative: inconsistent,
        inconsistent,
    })
}

fn print_verdict(out: &mut Out, v: &crate::corpus::InstanceVerdict) -> Result<()> {
    if out.text() {
        let t = &v.verdict;
        let clauses: String = if t.hypotheses_hold {
            t.values().iter().map(|&b| if b { 'T' } else { 'F' }).collect()
        } else {
            "-".into()
        };
        let status = match (t.hypotheses_hold, t.consistent) {
            (false, _) => "vacuous",
            (true, true) => "consistent",
            (true, false) => "INCONSISTENT",
        };
        let mut s = format!(
            "{:<6} {:<30} {:<22} {:>5} {:<5} {}",
            t.theorem, v.ring, v.ideal, v.ideal_size, clauses, status
        );
        if let Some(d) = &t.detail {
            s.push_str(&format!("  {d}"));
        }
        out.line(s)
    } else {
        out.record("verdict", v)
    }
}

fn print_corpus(out: &mut Out, report: &CorpusReport) -> Result<()> {
    for v in &report.verdicts {
        print_verdict(out, v)?;
    }
    for f in &report.failures {
        if out.text() {
            out.line(format!("error  {}: {}", f.ring, f.error))?;
        } else {
            out.record("failure", f)?;
        }
    }
    for t in &report.tallies {
        if out.text() {
            out.line(format!(
                "tally  {:<6} instances {:>5}  met {:>5}  vacuous {:>5}  clause1 true {:>5} false {:>5}  inconsistent {}",
                t.theorem, t.instances, t.hypotheses_met, t.vacuous, t.first_clause_true, t.first_clause_false, t.inconsistent
            ))?;
        } else {
            out.record("tally", t)?;
        }
    }
    let inconsistent = report.inconsistencies().count();
    if out.text() {
        out.line(format!(
            "summary {}: {} rings, {} verdicts, {} inconsistencies, {} errors",
            report.corpus,
            report.rings,
            report.verdicts.len(),
            inconsistent,
            report.failures.len()
        ))
    } else {
        out.record(
            "summary",
            json!({"corpus": report.corpus, "rings": report.rings, "verdicts": report.verdicts.len(), "inconsistencies": inconsistent, "errors": report.failures.len()}),
        )
    }
}

fn print_search(out: &mut Out, rep: &SearchReport) -> Result<()> {
    for h in &rep.hits {
        if out.text() {
            out.line(format!(
                "{:<24} {:<22} {:>5}  {} holds, {} fails",
                h.ring, h.ideal, h.ideal_size, rep.a, rep.b
            ))?;
        } else {
            out.record("hit", h)?;
        }
    }
    for f in &rep.failures {
        if out.text() {
            out.line(format!("error  {}: {}", f.ring, f.error))?;
        } else {
            out.record("failure", f)?;
        }
    }
    if out.text() {
        out.line(format!(
            "summary {}: {} instances, {} with {} and not {}, {} errors",
            rep.template,
            rep.instances,
            rep.hits.len(),
            rep.a,
            rep.b,
            rep.failures.len()
        ))
    } else {
        out.record(
            "summary",
            json!({"template": rep.template, "a": rep.a, "b": rep.b, "instances": rep.instances, "hits": rep.hits.len(), "errors": rep.failures.len()}),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("ringcheck").chain(args.iter().copied())).unwrap()
    }

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let code = main_with_args(std::iter::once("ringcheck").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn canonical_round_trip() {
        let cases: &[&[&str]] = &[
            &["check", "square-stable", "--ring", "M( 2 , Z(2) )"],
            &[
                "--threads",
                "3",
                "--strict",
                "verify",
                "T42,C43",
                "--ring",
                "Z(6)",
                "--ideal",
                "gen(2)",
            ],
            &["verify", "all", "--corpus", "default.toml", "--format", "json"],
            &["example41", "--n", "6"],
            &[
                "search",
                "--family",
                "Z({n})",
                "--params",
                "2..12",
                "--a",
                "exchange",
                "--b",
                "square-stable",
            ],
            &[
                "search",
                "--family",
                "Z({n})",
                "--params",
                "2,5,7",
                "--a",
                "exchange",
                "--b",
                "square-stable",
            ],
            &["classify", "--ring", "Zi(3)", "--element", "1 + 1i"],
            &["axioms", "--ring", "quot(T(2,Z(2)),jacobson)"],
        ];
        for c in cases {
            let cli = parse(c);
            let again = Cli::try_parse_from(cli.canonical_args()).unwrap();
            assert_eq!(cli.canonical_args(), again.canonical_args());
            assert_eq!(again, Cli::try_parse_from(again.canonical_args()).unwrap());
        }
        assert_eq!(
            parse(&["check", "square-stable", "--ring", "M(2, Z(2))"]).canonical(),
            "ringcheck --max-size 4096 --format text check square-stable --ring 'M(2,Z(2))' --ideal all"
        );
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_str(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        let (code, _, err) = run_str(&["check", "square-stable", "--ring", "Zi(3"]);
        assert_eq!(code, 2);
        assert!(err.contains("offset 4"), "{err}");
        let (code, _, _) = run_str(&["check", "square-stable", "--ring", "Z(2)", "--bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn check_exit_codes() {
        let args = ["check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all"];
        let (code, out, _) = run_str(&args);
        assert_eq!(code, 0);
        assert!(
            out.contains("holds=false counterexample a=[0,1,0,0], r=[0,0,1,0]"),
            "{out}"
        );
        let mut strict = vec!["--strict"];
        strict.extend(args);
        assert_eq!(run_str(&strict).0, 1);
        assert_eq!(run_str(&["--strict", "check", "regular", "--ring", "Z(6)"]).0, 0);
        let (code, _, err) = run_str(&["check", "square-stable", "--ring", "M(2,Z(9))", "--max-size", "100"]);
        assert_eq!(code, 2);
        assert!(err.contains("cap"));
    }

    #[test]
    fn json_lines_parse() {
        let (code, out, _) = run_str(&["--format", "json", "verify", "all", "--ring", "Z(4)"]);
        assert_eq!(code, 0);
        let recs: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(recs.last().unwrap()["record"], "summary");
        assert_eq!(recs.last().unwrap()["inconsistencies"], 0);
        let v = recs.iter().find(|r| r["record"] == "verdict").unwrap();
        for field in [
            "theorem",
            "hypotheses_hold",
            "clauses",
            "relation",
            "consistent",
            "detail",
            "ring",
            "ideal",
        ] {
            assert!(v.get(field).is_some(), "{field}");
        }
        let (_, out, _) = run_str(&["--format", "json", "check", "exchange", "--ring", "Z(4)"]);
        let p: Value = serde_json::from_str(out.trim()).unwrap();
        for field in ["predicate", "holds", "witness", "elapsed_us", "pairs_examined"] {
            assert!(p.get(field).is_some(), "{field}");
        }
    }

    #[test]
    fn example41_reports_witness() {
        let (code, out, _) = run_str(&["example41", "--n", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("found") && out.contains("ideal all"), "{out}");
        let (code, out, _) = run_str(&["--strict", "example41", "--n", "4"]);
        assert_eq!(code, 1);
        assert!(out.contains("nothing to check"));
    }

    #[test]
    fn param_ranges() {
        assert_eq!("2..4".parse::<ParamRange>().unwrap().0, vec![2, 3, 4]);
        assert_eq!("5, 7".parse::<ParamRange>().unwrap().0, vec![5, 7]);
        assert!("4..2".parse::<ParamRange>().is_err());
        assert!("x".parse::<ParamRange>().is_err());
    }
}
