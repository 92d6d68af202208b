//! The square-stable predicate in its three forms, next to its neighbours.

use ringcheck::predicates::{evaluate, PredicateId};
use ringcheck::ring::resolve_ideal;
use ringcheck::{build_str, IdealSpec, Limits};

fn main() -> ringcheck::Result<()> {
    let lim = Limits::default();
    let cases = [
        ("Z(6)", IdealSpec::All),
        ("Z(4)", IdealSpec::Jacobson),
        ("T(2,Z(2))", IdealSpec::Jacobson),
        ("M(2,Z(2))", IdealSpec::All),
    ];
    for (text, spec) in cases {
        let r = build_str(text, &lim)?;
        let i = resolve_ideal(&r, &spec)?;
        for id in [
            PredicateId::SquareStable,
            PredicateId::SquareStableDef,
            PredicateId::SquareStableMatrix,
            PredicateId::Exchange,
            PredicateId::Regular,
            PredicateId::Reduced,
        ] {
            match evaluate(id, &r, &i, &lim) {
                Ok(p) => {
                    let w: Vec<String> = p
                        .witness
                        .iter()
                        .map(|w| format!("{}={}", w.role, r.name(w.element)))
                        .collect();
                    println!("{text:<10} {spec:<9} {id:<21} {:<5} {}", p.holds, w.join(" "));
                }
                Err(e) => println!("{text:<10} {spec:<9} {id:<21} n/a   {e}"),
            }
        }
    }
    Ok(())
}
