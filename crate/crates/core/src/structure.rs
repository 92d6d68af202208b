//! Units, idempotents, the Jacobson radical and two-sided ideals.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::expr::IdealSpec;
use crate::ring::{make_quotient, Elem, Limits, RingTable};
use crate::set::{canonical_cmp, ElemSet};

/// A verified two-sided ideal, stored as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealMask {
    members: ElemSet,
}

impl IdealMask {
    /// Checks the ideal axioms exhaustively before wrapping `members`.
    pub fn new(r: &RingTable, members: ElemSet) -> Result<Self> {
        if let Some(why) = ideal_violation(r, &members) {
            return Err(Error::NotAnIdeal(why));
        }
        Ok(IdealMask { members })
    }

    pub(crate) fn new_unchecked(members: ElemSet) -> Self {
        IdealMask { members }
    }

    pub fn zero(r: &RingTable) -> Self {
        IdealMask {
            members: ElemSet::from_indices(r.n(), [r.zero()]),
        }
    }

    pub fn full(r: &RingTable) -> Self {
        IdealMask {
            members: ElemSet::full(r.n()),
        }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.members.universe()
    }

    pub fn is_subset(&self, other: &IdealMask) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The coset `1 + I` as an element list in canonical order.
    pub fn one_plus(&self, r: &RingTable) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.iter().map(|i| r.add(r.one(), i)).collect();
        v.sort_unstable();
        v
    }

    /// Sum `I + K` of two ideals.
    pub fn sum(&self, r: &RingTable, other: &IdealMask) -> IdealMask {
        IdealMask {
            members: sum_set(r, &self.members, &other.members),
        }
    }

    pub fn intersection(&self, other: &IdealMask) -> IdealMask {
        IdealMask {
            members: self.members.intersection(&other.members),
        }
    }

    /// A spec that rebuilds this ideal: `zero`, `all`, `jacobson`, or a
    /// greedy generator list.
    pub fn describe(&self, r: &RingTable) -> IdealSpec {
        if self.is_zero() && self.contains(r.zero()) {
            return IdealSpec::Zero;
        }
        if self.is_full() {
            return IdealSpec::All;
        }
        if jacobson_radical(r) == self {
            return IdealSpec::Jacobson;
        }
        let mut gens = Vec::new();
        let mut span = IdealMask::zero(r);
        for a in self.iter() {
            if !span.contains(a) {
                gens.push(a);
                span = ideal_generated_by(r, &gens);
            }
        }
        IdealSpec::Gen(gens.iter().map(|&g| r.name(g).to_string()).collect())
    }

    /// Member names in canonical order.
    pub fn member_names(&self, r: &RingTable) -> Vec<String> {
        self.iter().map(|a| r.name(a).to_string()).collect()
    }
}

fn ideal_violation(r: &RingTable, s: &ElemSet) -> Option<String> {
    if s.universe() != r.n() {
        return Some(format!("mask over {} elements for a ring of {}", s.universe(), r.n()));
    }
    if !s.contains(r.zero()) {
        return Some("does not contain zero".into());
    }
    for a in s.iter() {
        if !s.contains(r.neg(a)) {
            return Some(format!("not closed under negation at {}", r.name(a)));
        }
        for b in s.iter() {
            if !s.contains(r.add(a, b)) {
                return Some(format!("{} + {} escapes", r.name(a), r.name(b)));
            }
        }
        for x in r.elements() {
            if !s.contains(r.mul(x, a)) || !s.contains(r.mul(a, x)) {
                return Some(format!("not absorbing at {} and {}", r.name(a), r.name(x)));
            }
        }
    }
    None
}

/// Unit group data: membership mask plus two-sided inverses.
#[derive(Clone, Debug)]
pub struct Units {
    pub mask: ElemSet,
    /// `inverse[a]` is the two-sided inverse of `a` when it is a unit.
    pub inverse: Vec<Option<Elem>>,
}

impl Units {
    pub fn contains(&self, a: Elem) -> bool {
        self.mask.contains(a)
    }

    pub fn list(&self) -> Vec<Elem> {
        self.mask.to_vec()
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }
}

/// All two-sided units of `r`, with inverses. Cached on the ring.
pub fn units(r: &RingTable) -> &Units {
    r.memo.units.get_or_init(|| {
        let mut mask = ElemSet::empty(r.n());
        let mut inverse = vec![None; r.n()];
        for a in r.elements() {
            if let Some(b) = r.elements().find(|&b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
                mask.insert(a);
                inverse[a] = Some(b);
            }
        }
        Units { mask, inverse }
    })
}

pub fn is_unit(r: &RingTable, a: Elem) -> bool {
    units(r).contains(a)
}

/// Idempotents of `r` in canonical order. Cached on the ring.
pub fn idempotents(r: &RingTable) -> &[Elem] {
    r.memo
        .idempotents
        .get_or_init(|| r.elements().filter(|&e| r.mul(e, e) == e).collect())
}

/// `J(R) = { a : 1 - r a is a unit for every r }`. Cached on the ring.
pub fn jacobson_radical(r: &RingTable) -> &IdealMask {
    r.memo.jacobson.get_or_init(|| {
        let u = units(r);
        let one = r.one();
        let left = ElemSet::from_indices(
            r.n(),
            r.elements()
                .filter(|&a| r.elements().all(|x| u.contains(r.sub(one, r.mul(x, a))))),
        );
        debug_assert_eq!(
            left,
            ElemSet::from_indices(
                r.n(),
                r.elements()
                    .filter(|&a| r.elements().all(|x| u.contains(r.sub(one, r.mul(a, x))))),
            ),
            "left and right quasi-regular sets differ in {}",
            r.provenance()
        );
        debug_assert!(ideal_violation(r, &left).is_none());
        IdealMask::new_unchecked(left)
    })
}

/// Nilpotent elements in canonical order.
pub fn nilpotents(r: &RingTable) -> Vec<Elem> {
    r.elements().filter(|&a| nilpotency_index(r, a).is_some()).collect()
}

/// Smallest `k >= 1` with `a^k = 0`, searching up to `n`.
pub fn nilpotency_index(r: &RingTable, a: Elem) -> Option<u32> {
    let mut p = a;
    for k in 1..=r.n().max(1) as u32 {
        if p == r.zero() {
            return Some(k);
        }
        p = r.mul(p, a);
    }
    None
}

/// `aR`.
pub fn right_set(r: &RingTable, a: Elem) -> ElemSet {
    ElemSet::from_indices(r.n(), r.elements().map(|x| r.mul(a, x)))
}

/// `Ra`.
pub fn left_set(r: &RingTable, a: Elem) -> ElemSet {
    ElemSet::from_indices(r.n(), r.elements().map(|x| r.mul(x, a)))
}

/// Elementwise sum set `{p + q : p in A, q in B}`.
pub fn sum_set(r: &RingTable, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(r.n());
    for p in a.iter() {
        for q in b.iter() {
            out.insert(r.add(p, q));
        }
    }
    out
}

/// `aR` for every `a`, indexed by element. Cached on the ring.
pub fn right_sets(r: &RingTable) -> &[ElemSet] {
    r.memo
        .right_sets
        .get_or_init(|| r.elements().map(|a| right_set(r, a)).collect())
}

/// `1 ∈ aR + bR` given both principal right ideals.
pub(crate) fn comaximal_with(r: &RingTable, a_right: &ElemSet, b_right: &ElemSet) -> bool {
    a_right.iter().any(|p| b_right.contains(r.sub(r.one(), p)))
}

/// `aR + bR = R`.
pub fn is_comaximal(r: &RingTable, a: Elem, b: Elem) -> bool {
    sum_set(r, &right_set(r, a), &right_set(r, b)).contains(r.one())
}

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_generated_by(r: &RingTable, gens: &[Elem]) -> IdealMask {
    let mut sandwich = ElemSet::empty(r.n());
    for &g in gens {
        for x in r.elements() {
            let xg = r.mul(x, g);
            for y in r.elements() {
                sandwich.insert(r.mul(xg, y));
            }
        }
    }
    let steps = sandwich.to_vec();
    let mut span = ElemSet::from_indices(r.n(), [r.zero()]);
    let mut queue = vec![r.zero()];
    while let Some(s) = queue.pop() {
        for &t in &steps {
            let u = r.add(s, t);
            if span.insert(u) {
                queue.push(u);
            }
        }
    }
    IdealMask::new_unchecked(span)
}

/// Every two-sided ideal, in canonical order (size, then member list).
pub fn all_ideals(r: &RingTable, limits: &Limits) -> Result<Vec<IdealMask>> {
    let mut principal: Vec<IdealMask> = Vec::new();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    for a in r.elements() {
        let p = ideal_generated_by(r, &[a]);
        if seen.insert(p.members.clone()) {
            principal.push(p);
        }
    }
    if seen.len() > limits.max_ideals {
        return Err(Error::TooManyIdeals { cap: limits.max_ideals });
    }
    let mut all = principal.clone();
    let mut work = principal.clone();
    while let Some(i) = work.pop() {
        for p in &principal {
            if p.is_subset(&i) {
                continue;
            }
            let s = i.sum(r, p);
            if seen.insert(s.members.clone()) {
                if seen.len() > limits.max_ideals {
                    return Err(Error::TooManyIdeals { cap: limits.max_ideals });
                }
                all.push(s.clone());
                work.push(s);
            }
        }
    }
    all.sort_by(|a, b| canonical_cmp(&a.members, &b.members));
    Ok(all)
}

/// Outcome of a unit-lifting check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitLifting {
    pub holds: bool,
    /// `(unit of R/I, lifting unit of R)` for every unit that lifts.
    pub lifts: Vec<(Elem, Elem)>,
    /// First unit of `R/I` with no unit preimage.
    pub failure: Option<Elem>,
}

/// Does every unit of `R/I` lift to a unit of `R`?
pub fn units_lift(r: &RingTable, ideal: &IdealMask) -> Result<UnitLifting> {
    let q = make_quotient(r, ideal)?;
    Ok(units_lift_via(r, &q))
}

pub(crate) fn units_lift_via(r: &RingTable, q: &crate::ring::Quotient) -> UnitLifting {
    let ru = units(r);
    let mut lifts = Vec::new();
    let mut failure = None;
    for c in units(&q.ring).list() {
        match r.elements().find(|&u| ru.contains(u) && q.projection[u] == c) {
            Some(u) => lifts.push((c, u)),
            None => {
                failure = Some(c);
                break;
            }
        }
    }
    UnitLifting {
        holds: failure.is_none(),
        lifts,
        failure,
    }
}

/// First idempotent `e ∈ I` with `e x e = x` for all `x` in `xs`.
pub fn enclosing_corner_idempotent(r: &RingTable, ideal: &IdealMask, xs: &[Elem]) -> Result<Elem> {
    if let Some(&x) = xs.iter().find(|&&x| !ideal.contains(x)) {
        return Err(Error::PreconditionFailed(format!("{} is not in the ideal", r.name(x))));
    }
    idempotents(r)
        .iter()
        .copied()
        .filter(|&e| ideal.contains(e))
        .find(|&e| xs.iter().all(|&x| r.mul3(e, x, e) == x))
        .ok_or_else(|| Error::NotFound("no idempotent of the ideal encloses the given elements".into()))
}
