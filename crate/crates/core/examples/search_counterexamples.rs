use ringcheck::corpus::search_counterexamples;
use ringcheck::predicates::PredicateId;
use ringcheck::Limits;

fn main() -> ringcheck::Result<()> {
    let lim = Limits::default();
    let runs: [(&str, Vec<u64>, PredicateId, PredicateId); 4] = [
        (
            "Z({n})",
            (2..=12).collect(),
            PredicateId::Exchange,
            PredicateId::SquareStable,
        ),
        ("M(2,Z({n}))", vec![2, 3], PredicateId::Regular, PredicateId::Reduced),
        (
            "T(2,Z({n}))",
            (2..=4).collect(),
            PredicateId::InJacobson,
            PredicateId::SquareStable,
        ),
        (
            "M(2,Z({n}))",
            vec![2, 3],
            PredicateId::Exchange,
            PredicateId::SquareStable,
        ),
    ];
    for (family, params, a, b) in runs {
        let rep = search_counterexamples(family, &params, a, b, &lim, None)?;
        println!(
            "{family}: {a} but not {b}: {} of {} instances",
            rep.hits.len(),
            rep.instances
        );
        for h in &rep.hits {
            println!("  {} ideal {}", h.ring, h.ideal);
        }
    }
    Ok(())
}
