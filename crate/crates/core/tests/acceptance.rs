//! Acceptance run: one pass/fail line per criterion, nonzero exit if any fail.

use std::process::Command;
use std::time::{Duration, Instant};

use ringcheck::axioms::verify_axioms;
use ringcheck::corpus::{run_corpus, Corpus};
use ringcheck::element::{classify_all, is_dedekind_finite};
use ringcheck::predicates::{
    exchange, reduced_ideal, regular_ideal, square_stable_def, square_stable_fast, square_stable_matrix,
};
use ringcheck::ring::{build, make_cyclic};
use ringcheck::structure::{all_ideals, jacobson_radical, units, IdealMask};
use ringcheck::theorems::{verify_example41, TheoremId};
use ringcheck::{Limits, RingTable};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn corpus_rings() -> Vec<RingTable> {
    let lim = Limits::default();
    Corpus::builtin()
        .rings
        .iter()
        .map(|e| build(e, &lim).unwrap())
        .collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn phi(n: u64) -> usize {
    if n == 1 {
        return 1;
    }
    (1..n).filter(|&k| gcd(k, n) == 1).count()
}

fn axioms(rings: &[RingTable]) -> Check {
    ensure(rings.len() >= 25, format!("corpus has only {} rings", rings.len()))?;
    for r in rings {
        let rep = verify_axioms(r);
        ensure(rep.is_ok(), format!("{} violates axioms", r.provenance()))?;
    }
    let mut raw = make_cyclic(6).to_raw_parts();
    raw.mul[3 * 6 + 5] = 2;
    let corrupted = RingTable::from_raw_parts(raw);
    ensure(
        !verify_axioms(&corrupted).is_ok(),
        "single-entry corruption not detected",
    )?;
    let mut raw = build(&"M(2,Z(2))".parse().unwrap(), &Limits::default())
        .unwrap()
        .to_raw_parts();
    raw.add[17] ^= 1;
    ensure(
        !verify_axioms(&RingTable::from_raw_parts(raw)).is_ok(),
        "additive corruption not detected",
    )?;
    Ok(format!("{} rings satisfy the axioms; corruption detected", rings.len()))
}

fn structure_facts() -> Check {
    let lim = Limits::default();
    let z4 = make_cyclic(4);
    ensure(jacobson_radical(&z4).members().to_vec() == vec![0, 2], "J(Z4)")?;
    let m2 = build(&"M(2,Z(2))".parse().unwrap(), &lim).unwrap();
    ensure(jacobson_radical(&m2).is_zero(), "J(M2(Z2))")?;
    let t2 = build(&"T(2,Z(2))".parse().unwrap(), &lim).unwrap();
    let j: Vec<&str> = jacobson_radical(&t2).iter().map(|a| t2.name(a)).collect();
    ensure(j == vec!["[0,0,0]", "[0,1,0]"], format!("J(T2(Z2)) = {j:?}"))?;
    for n in 1..=12 {
        let got = units(&make_cyclic(n)).len();
        ensure(got == phi(n), format!("|U(Z{n})| = {got}, expected {}", phi(n)))?;
    }
    let ideals = all_ideals(&make_cyclic(6), &lim).unwrap();
    ensure(ideals.len() == 4, format!("Z6 has {} ideals", ideals.len()))?;
    Ok("radicals, unit counts and Z6 ideal lattice exact".into())
}

fn oracle_agreement(rings: &[RingTable]) -> Check {
    let lim = Limits::default();
    let (mut pairs, mut matrix) = (0, 0);
    for r in rings {
        let matrix_ok = r.is_commutative() && r.n().pow(4) <= lim.max_size;
        for i in all_ideals(r, &lim).unwrap() {
            let fast = square_stable_fast(r, &i).holds;
            let def = square_stable_def(r, &i).holds;
            ensure(
                fast == def,
                format!("def/fast disagree on {} {}", r.provenance(), i.describe(r)),
            )?;
            pairs += 1;
            if matrix_ok {
                let m = square_stable_matrix(r, &i, &lim).map_err(|e| e.to_string())?.holds;
                ensure(
                    m == fast,
                    format!("matrix form disagrees on {} {}", r.provenance(), i.describe(r)),
                )?;
                matrix += 1;
            }
        }
    }
    Ok(format!("{pairs} instances agree; {matrix} also checked through M2"))
}

fn claimed_instances(rings: &[RingTable]) -> Check {
    let lim = Limits::default();
    let mut radical_ideals = 0;
    for r in rings {
        let j = jacobson_radical(r);
        for i in all_ideals(r, &lim).unwrap().iter().filter(|i| i.is_subset(j)) {
            ensure(
                square_stable_fast(r, i).holds,
                format!("{} {} not square stable", r.provenance(), i.describe(r)),
            )?;
            ensure(
                exchange(r, i).holds,
                format!("{} {} not exchange", r.provenance(), i.describe(r)),
            )?;
            radical_ideals += 1;
        }
    }
    let m2 = build(&"M(2,Z(2))".parse().unwrap(), &lim).unwrap();
    let full = IdealMask::full(&m2);
    ensure(regular_ideal(&m2, &full).holds, "M2(Z2) not regular")?;
    ensure(!reduced_ideal(&m2, &full).holds, "M2(Z2) reduced")?;
    let ss = square_stable_fast(&m2, &full);
    ensure(!ss.holds, "M2(Z2) square stable")?;
    let a = ss.role("a").map(|x| m2.name(x));
    let rr = ss.role("r").map(|x| m2.name(x));
    ensure(
        a == Some("[0,1,0,0]") && rr == Some("[0,0,1,0]"),
        format!("counterexample a={a:?} r={rr:?}"),
    )?;
    for n in [3, 5, 6, 7] {
        let ex = verify_example41(n, &lim).map_err(|e| e.to_string())?;
        let w = ex.witness.ok_or(format!("Zi({n}): no witness"))?;
        ensure(!w.is_zero(), format!("Zi({n}): zero witness"))?;
        ensure(
            regular_ideal(&ex.ring, &w).holds && square_stable_fast(&ex.ring, &w).holds,
            format!("Zi({n}): witness fails recheck"),
        )?;
        ensure(ex.verdict.consistent, format!("Zi({n}) inconsistent"))?;
    }
    Ok(format!("{radical_ideals} radical ideals square stable and exchange; M2(Z2) counterexample exact; Zi(3,5,6,7) witnesses found"))
}

fn theorem_consistency() -> Check {
    let rep = run_corpus(&Corpus::builtin(), &Limits::default(), None).map_err(|e| e.to_string())?;
    ensure(rep.failures.is_empty(), format!("{} ring errors", rep.failures.len()))?;
    if let Some(v) = rep.inconsistencies().next() {
        return Err(format!(
            "{} on {} {}: {:?}",
            v.verdict.theorem, v.ring, v.ideal, v.verdict.detail
        ));
    }
    for id in TheoremId::PER_IDEAL {
        let t = rep.tally(id).ok_or(format!("no tally for {id}"))?;
        ensure(
            t.covered(),
            format!("{id} lacks a non-vacuous true or clause-false instance"),
        )?;
    }
    Ok(format!(
        "{} verdicts, 0 inconsistencies, all 12 ids covered",
        rep.verdicts.len()
    ))
}

fn element_chains(rings: &[RingTable]) -> Check {
    let mut elements = 0;
    for r in rings {
        let u = units(r);
        for p in classify_all(r) {
            let a = p.element;
            let reg = r.elements().any(|x| r.mul3(a, x, a) == a);
            let ureg = u.mask.iter().any(|x| r.mul3(a, x, a) == a);
            let a2 = r.square(a);
            let strong = r.elements().any(|x| r.mul(a2, x) == a) && r.elements().any(|y| r.mul(y, a2) == a);
            ensure(
                p.is_regular() == reg && p.is_unit_regular() == ureg && p.is_strongly_regular() == strong,
                format!("profile mismatch at {} in {}", r.name(a), r.provenance()),
            )?;
            ensure(
                !strong || ureg,
                format!("strongly regular not unit-regular: {} in {}", r.name(a), r.provenance()),
            )?;
            ensure(
                reg == ureg,
                format!("regular vs unit-regular at {} in {}", r.name(a), r.provenance()),
            )?;
            ensure(p.witnesses_valid(r), format!("bad witness at {}", r.name(a)))?;
            elements += 1;
        }
    }
    let m2 = build(&"M(2,Z(2))".parse().unwrap(), &Limits::default()).unwrap();
    let e12 = m2.lookup("[0,1,0,0]").unwrap();
    let p = &classify_all(&m2)[e12];
    ensure(p.is_unit_regular() && !p.is_strongly_regular(), "e12 in M2(Z2)")?;
    Ok(format!(
        "{elements} elements obey the regularity chain; e12 unit-regular, not strongly regular"
    ))
}

fn finite_sanity(rings: &[RingTable]) -> Check {
    for r in rings {
        let u = units(r);
        for x in r.elements() {
            for y in r.elements() {
                if r.mul(x, y) == r.one() {
                    ensure(r.mul(y, x) == r.one(), format!("xy=1, yx!=1 in {}", r.provenance()))?;
                    ensure(
                        u.contains(x) && u.contains(y),
                        format!("one-sided inverse in {}", r.provenance()),
                    )?;
                }
            }
        }
        ensure(
            is_dedekind_finite(r).0,
            format!("{} reported not Dedekind-finite", r.provenance()),
        )?;
    }
    Ok(format!(
        "{} rings Dedekind-finite; one-sided inverses are two-sided",
        rings.len()
    ))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_ringcheck");
    let run = |threads: &str| {
        Command::new(bin)
            .args(["--threads", threads, "verify", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run("1")?;
    let b = run("4")?;
    ensure(a.status.success() && b.status.success(), "verify exited nonzero")?;
    ensure(!a.stdout.is_empty(), "empty report")?;
    ensure(a.stdout == b.stdout, "reports differ between thread counts")?;
    Ok(format!("{} bytes identical for 1 and 4 threads", a.stdout.len()))
}

fn main() {
    let rings = corpus_rings();
    let criteria: Vec<Criterion> = vec![
        ("1 axiom suite", Duration::from_secs(10), Box::new(|| axioms(&rings))),
        ("2 structure facts", Duration::from_secs(1), Box::new(structure_facts)),
        (
            "3 square-stable oracle agreement",
            Duration::from_secs(120),
            Box::new(|| oracle_agreement(&rings)),
        ),
        (
            "4 claimed instances",
            Duration::from_secs(60),
            Box::new(|| claimed_instances(&rings)),
        ),
        (
            "5 theorem consistency",
            Duration::from_secs(300),
            Box::new(theorem_consistency),
        ),
        (
            "6 element chains",
            Duration::from_secs(60),
            Box::new(|| element_chains(&rings)),
        ),
        (
            "7 finite-ring sanity",
            Duration::from_secs(60),
            Box::new(|| finite_sanity(&rings)),
        ),
        ("8 determinism", Duration::from_secs(300), Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, limit, check) in &criteria {
        let start = Instant::now();
        let res = check();
        let took = start.elapsed();
        let res = match res {
            Ok(m) if took > *limit => Err(format!("{m}, but took {took:.2?} (limit {limit:?})")),
            other => other,
        };
        match res {
            Ok(m) => println!("PASS criterion {name}: {m} ({took:.2?})"),
            Err(m) => {
                failed += 1;
                println!("FAIL criterion {name}: {m} ({took:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
