use ringcheck::element::{classify, complete_unit_regular};
use ringcheck::{build_str, Limits};

fn main() -> ringcheck::Result<()> {
    let m2 = build_str("M(2,Z(2))", &Limits::default())?;
    let show = |x: Option<usize>| x.map(|x| m2.name(x).to_string()).unwrap_or_else(|| "-".into());
    for a in m2.elements() {
        let p = classify(&m2, a);
        println!(
            "{:<10} unit={:<5} idem={:<5} nil={:<4} regular={:<10} unit-regular={:<10} a=a^2x:{:<10} a=ya^2:{}",
            m2.name(a),
            p.is_unit(),
            p.is_idempotent,
            p.nilpotency_index.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            show(p.regular_witness),
            show(p.unit_regular_witness),
            show(p.right_strong_witness),
            show(p.left_strong_witness),
        );
    }

    let z6 = build_str("Z(6)", &Limits::default())?;
    let y = complete_unit_regular(&z6, 3, 1, 4)?;
    println!(
        "Z(6): 3*1 + 4 = 1, and 3 + 4*{y} = {} is a unit",
        z6.add(3, z6.mul(4, y))
    );
    Ok(())
}
