use ringcheck::theorems::verify_example41;
use ringcheck::Limits;

fn main() -> ringcheck::Result<()> {
    for n in 2..=10 {
        let ex = verify_example41(n, &Limits::default())?;
        match &ex.witness {
            Some(i) => println!(
                "Zi({n}): ideal {} with {} of {} elements",
                i.describe(&ex.ring),
                i.len(),
                ex.ring.n()
            ),
            None if ex.verdict.hypotheses_hold => println!("Zi({n}): nothing found"),
            None => println!("Zi({n}): n does not qualify"),
        }
    }
    Ok(())
}
