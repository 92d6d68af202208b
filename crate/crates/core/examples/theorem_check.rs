use ringcheck::structure::all_ideals;
use ringcheck::theorems::{verify, TheoremId};
use ringcheck::{build_str, Limits};

fn main() -> ringcheck::Result<()> {
    let lim = Limits::default();
    let r = build_str("T(2,Z(4))", &lim)?;
    for i in all_ideals(&r, &lim)? {
        for id in [TheoremId::T33, TheoremId::T42, TheoremId::C45] {
            let v = verify(id, &r, &i, &lim)?;
            let clauses: Vec<String> = v.clauses.iter().map(|c| format!("{}={}", c.label, c.value)).collect();
            println!(
                "{id:<4} {:<10} hypotheses={:<5} consistent={}  {}",
                i.describe(&r).to_string(),
                v.hypotheses_hold,
                v.consistent,
                clauses.join("; ")
            );
        }
    }
    Ok(())
}
