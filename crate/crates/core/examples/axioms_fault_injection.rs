//! Corrupt one table entry and watch the axiom checker find it.

use ringcheck::axioms::verify_axioms;
use ringcheck::ring::make_cyclic;
use ringcheck::RingTable;

fn main() {
    let z6 = make_cyclic(6);
    println!("Z(6) clean: {}", verify_axioms(&z6).is_ok());

    let mut raw = z6.to_raw_parts();
    raw.mul[2 * 6 + 3] = 1; // 2 * 3 = 1
    let bad = RingTable::from_raw_parts(raw);
    let report = verify_axioms(&bad);
    println!("{} violations after corrupting 2*3:", report.violations.len());
    for v in &report.violations {
        println!("  {}", report.describe(&bad, v));
    }
}
