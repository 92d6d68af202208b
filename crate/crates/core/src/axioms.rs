//! Exhaustive check of the ring axioms on a table.

use std::fmt;

use serde::Serialize;

use crate::ring::{Elem, RingTable};

/// Which axiom a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    TableRange,
    DistinctNames,
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
}

/// One failing instance of an axiom, with the elements involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub elements: Vec<Elem>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at {:?}", self.axiom, self.elements)
    }
}

/// All recorded violations, sorted by axiom and then by element tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Human-readable description of one violation, using element names.
    pub fn describe(&self, r: &RingTable, v: &Violation) -> String {
        let names: Vec<String> = v
            .elements
            .iter()
            .map(|&e| {
                if e < r.n() {
                    r.name(e).to_string()
                } else {
                    format!("#{e}")
                }
            })
            .collect();
        format!("{:?} fails at ({})", v.axiom, names.join(", "))
    }
}

/// Per-axiom cap on recorded instances; checking an axiom stops once reached.
pub const MAX_PER_AXIOM: usize = 8;

struct Collector {
    out: Vec<Violation>,
    count: usize,
}

impl Collector {
    fn push(&mut self, axiom: Axiom, elements: Vec<Elem>) -> bool {
        self.out.push(Violation { axiom, elements });
        self.count += 1;
        self.count >= MAX_PER_AXIOM
    }

    fn next_axiom(&mut self) {
        self.count = 0;
    }
}

/// Checks every ring axiom over all pairs and triples. Returns an empty
/// report for a valid ring. O(n^3).
pub fn verify_axioms(r: &RingTable) -> AxiomReport {
    let raw = r.to_raw_parts();
    let n = raw.n;
    let mut c = Collector {
        out: Vec::new(),
        count: 0,
    };

    let in_range = |v: &[u32]| v.iter().all(|&x| (x as usize) < n);
    if raw.add.len() != n * n
        || raw.mul.len() != n * n
        || raw.neg.len() != n
        || raw.names.len() != n
        || !in_range(&raw.add)
        || !in_range(&raw.mul)
        || !in_range(&raw.neg)
        || raw.zero >= n
        || raw.one >= n
    {
        c.push(Axiom::TableRange, vec![]);
        return AxiomReport { violations: c.out };
    }

    let mut sorted = raw.names.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        for a in 0..n {
            if let Some(b) = (a + 1..n).find(|&b| raw.names[a] == raw.names[b]) {
                if c.push(Axiom::DistinctNames, vec![a, b]) {
                    break;
                }
            }
        }
        c.next_axiom();
    }

    let (add, mul) = (|a, b| r.add(a, b), |a, b| r.mul(a, b));

    for a in 0..n {
        if (add(a, raw.zero) != a || add(raw.zero, a) != a) && c.push(Axiom::AddIdentity, vec![a]) {
            break;
        }
    }
    c.next_axiom();
    for a in 0..n {
        if add(a, r.neg(a)) != raw.zero && c.push(Axiom::AddInverse, vec![a]) {
            break;
        }
    }
    c.next_axiom();
    'comm: for a in 0..n {
        for b in a + 1..n {
            if add(a, b) != add(b, a) && c.push(Axiom::AddCommutative, vec![a, b]) {
                break 'comm;
            }
        }
    }
    c.next_axiom();
    for a in 0..n {
        if (mul(a, raw.one) != a || mul(raw.one, a) != a) && c.push(Axiom::MulIdentity, vec![a]) {
            break;
        }
    }
    c.next_axiom();

    type Check<'a> = (Axiom, Box<dyn Fn(Elem, Elem, Elem) -> bool + 'a>);
    let triples: Vec<Check> = vec![
        (
            Axiom::AddAssociative,
            Box::new(|a, b, d| add(add(a, b), d) == add(a, add(b, d))),
        ),
        (
            Axiom::MulAssociative,
            Box::new(|a, b, d| mul(mul(a, b), d) == mul(a, mul(b, d))),
        ),
        (
            Axiom::LeftDistributive,
            Box::new(|a, b, d| mul(a, add(b, d)) == add(mul(a, b), mul(a, d))),
        ),
        (
            Axiom::RightDistributive,
            Box::new(|a, b, d| mul(add(a, b), d) == add(mul(a, d), mul(b, d))),
        ),
    ];
    for (axiom, holds) in &triples {
        'triple: for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if !holds(a, b, d) && c.push(*axiom, vec![a, b, d]) {
                        break 'triple;
                    }
                }
            }
        }
        c.next_axiom();
    }

    let mut violations = c.out;
    violations.sort_by(|x, y| (x.axiom, &x.elements).cmp(&(y.axiom, &y.elements)));
    AxiomReport { violations }
}
