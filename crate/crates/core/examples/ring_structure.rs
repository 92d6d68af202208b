use ringcheck::structure::{
    all_ideals, enclosing_corner_idempotent, ideal_generated_by, idempotents, is_comaximal, jacobson_radical,
    nilpotents, units, units_lift,
};
use ringcheck::{build_str, Limits};

fn main() -> ringcheck::Result<()> {
    let lim = Limits::default();
    for text in ["Z(12)", "T(2,Z(2))", "M(2,Z(2))", "Zi(6)"] {
        let r = build_str(text, &lim)?;
        let names = |v: Vec<usize>| {
            v.into_iter()
                .map(|a| r.name(a).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("{text}");
        println!("  units       {}", names(units(&r).list()));
        println!("  idempotents {}", names(idempotents(&r).to_vec()));
        println!("  nilpotents  {}", names(nilpotents(&r)));
        println!("  J(R)        {}", names(jacobson_radical(&r).iter().collect()));
        for i in all_ideals(&r, &lim)? {
            let lift = units_lift(&r, &i)?;
            println!(
                "  ideal {:<12} size {:>3}  units lift: {}",
                i.describe(&r).to_string(),
                i.len(),
                lift.holds
            );
        }
    }

    let z6 = build_str("Z(6)", &lim)?;
    println!("2, 3 comaximal in Z(6): {}", is_comaximal(&z6, 2, 3));
    println!("2, 4 comaximal in Z(6): {}", is_comaximal(&z6, 2, 4));
    let i = ideal_generated_by(&z6, &[2]);
    let e = enclosing_corner_idempotent(&z6, &i, &[2, 4])?;
    println!("idempotent of (2) enclosing 2 and 4: {e}");
    Ok(())
}
