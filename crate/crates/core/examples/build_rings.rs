//! Build rings from expressions and from constructors directly.

use ringcheck::ring::{make_cyclic, make_matrix, make_product, make_quotient};
use ringcheck::structure::jacobson_radical;
use ringcheck::{build_str, Limits};

fn main() -> ringcheck::Result<()> {
    let lim = Limits::default();

    for text in [
        "Z(6)",
        "Zi(3)",
        "M(2, Z(2))",
        "T(2,Z(3))",
        "prod(Z(2),Z(3))",
        "quot(T(2,Z(2)),jacobson)",
        "corner(M(2,Z(2)),[1,0,0,0])",
    ] {
        let r = build_str(text, &lim)?;
        let shown: Vec<&str> = r.names().iter().take(6).map(String::as_str).collect();
        println!(
            "{:<32} {:>3} elements  commutative={:<5}  first: {}",
            r.provenance(),
            r.n(),
            r.is_commutative(),
            shown.join(" ")
        );
    }

    let m2 = make_matrix(2, &make_cyclic(3), &lim)?;
    let p = make_product(&[make_cyclic(2), make_cyclic(3)], &lim)?;
    println!(
        "{} has {} elements; {} has {}",
        m2.provenance(),
        m2.n(),
        p.provenance(),
        p.n()
    );

    let t2 = build_str("T(2,Z(2))", &lim)?;
    let q = make_quotient(&t2, jacobson_radical(&t2))?;
    for a in t2.elements() {
        println!("  {} -> {}", t2.name(a), q.ring.name(q.projection[a]));
    }

    match build_str("M(2,Z(9))", &Limits::with_max_size(1000)) {
        Err(e) => println!("refused: {e}"),
        Ok(r) => println!("built {}", r.provenance()),
    }
    Ok(())
}
