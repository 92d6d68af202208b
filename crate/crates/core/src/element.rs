//! Per-element classification with witnesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{make_quotient, Elem, RingTable};
use crate::structure::{idempotents, nilpotency_index, units, IdealMask};

/// Classification flags for one element. Every stored witness is the first
/// hit in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub element: Elem,
    pub inverse: Option<Elem>,
    pub is_idempotent: bool,
    /// Smallest `k >= 1` with `a^k = 0`.
    pub nilpotency_index: Option<u32>,
    /// `x` with `a = a x a`.
    pub regular_witness: Option<Elem>,
    /// Unit `u` with `a = a u a`.
    pub unit_regular_witness: Option<Elem>,
    /// `x` with `a = a^2 x`.
    pub right_strong_witness: Option<Elem>,
    /// `y` with `a = y a^2`.
    pub left_strong_witness: Option<Elem>,
}

impl ElementProfile {
    pub fn is_unit(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn is_regular(&self) -> bool {
        self.regular_witness.is_some()
    }

    pub fn is_unit_regular(&self) -> bool {
        self.unit_regular_witness.is_some()
    }

    /// `a ∈ a²R ∩ Ra²`.
    pub fn is_strongly_regular(&self) -> bool {
        self.right_strong_witness.is_some() && self.left_strong_witness.is_some()
    }

    /// Re-checks every stored witness against its defining equation.
    pub fn witnesses_valid(&self, r: &RingTable) -> bool {
        let a = self.element;
        let a2 = r.square(a);
        let inv_ok = self
            .inverse
            .is_none_or(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one());
        let reg_ok = self.regular_witness.is_none_or(|x| r.mul3(a, x, a) == a);
        let ureg_ok = self
            .unit_regular_witness
            .is_none_or(|u| units(r).contains(u) && r.mul3(a, u, a) == a);
        let right_ok = self.right_strong_witness.is_none_or(|x| r.mul(a2, x) == a);
        let left_ok = self.left_strong_witness.is_none_or(|y| r.mul(y, a2) == a);
        let nil_ok = self.nilpotency_index.is_none_or(|k| r.pow(a, k) == r.zero());
        inv_ok && reg_ok && ureg_ok && right_ok && left_ok && nil_ok && self.is_idempotent == (a2 == a)
    }
}

/// Classifies `a` by exhaustive witness search.
pub fn classify(r: &RingTable, a: Elem) -> ElementProfile {
    let u = units(r);
    let a2 = r.square(a);
    ElementProfile {
        element: a,
        inverse: u.inverse[a],
        is_idempotent: a2 == a,
        nilpotency_index: nilpotency_index(r, a),
        regular_witness: r.elements().find(|&x| r.mul3(a, x, a) == a),
        unit_regular_witness: u.mask.iter().find(|&x| r.mul3(a, x, a) == a),
        right_strong_witness: r.elements().find(|&x| r.mul(a2, x) == a),
        left_strong_witness: r.elements().find(|&y| r.mul(y, a2) == a),
    }
}

/// Profiles of every element, in index order.
pub fn classify_all(r: &RingTable) -> Vec<ElementProfile> {
    r.elements().map(|a| classify(r, a)).collect()
}

pub fn is_regular(r: &RingTable, a: Elem) -> bool {
    r.elements().any(|x| r.mul3(a, x, a) == a)
}

/// `a ∈ a²R` and `a ∈ Ra²`, tested as two separate memberships.
pub fn is_strongly_regular(r: &RingTable, a: Elem) -> bool {
    let a2 = r.square(a);
    r.elements().any(|x| r.mul(a2, x) == a) && r.elements().any(|y| r.mul(y, a2) == a)
}

/// Every element strongly regular.
pub fn is_strongly_regular_ring(r: &RingTable) -> bool {
    r.elements().all(|a| is_strongly_regular(r, a))
}

/// Every element regular.
pub fn is_regular_ring(r: &RingTable) -> bool {
    r.elements().all(|a| is_regular(r, a))
}

/// Dedekind-finiteness check; the counterexample is `(x, y)` with `xy = 1 != yx`.
pub fn is_dedekind_finite(r: &RingTable) -> (bool, Option<(Elem, Elem)>) {
    for x in r.elements() {
        for y in r.elements() {
            if r.mul(x, y) == r.one() && r.mul(y, x) != r.one() {
                return (false, Some((x, y)));
            }
        }
    }
    (true, None)
}

/// Given `a x + b = 1` with `a` unit-regular, finds the first `y` making
/// `a + b y` a unit.
pub fn complete_unit_regular(r: &RingTable, a: Elem, x: Elem, b: Elem) -> Result<Elem> {
    if r.add(r.mul(a, x), b) != r.one() {
        return Err(Error::PreconditionFailed(format!(
            "{} * {} + {} is not 1",
            r.name(a),
            r.name(x),
            r.name(b)
        )));
    }
    let u = units(r);
    if !u.mask.iter().any(|w| r.mul3(a, w, a) == a) {
        return Err(Error::PreconditionFailed(format!("{} is not unit-regular", r.name(a))));
    }
    r.elements()
        .find(|&y| u.contains(r.add(a, r.mul(b, y))))
        .ok_or_else(|| Error::NotFound(format!("no y makes {} + {} y a unit", r.name(a), r.name(b))))
}

/// Profile of the coset `a + I` inside `R / I`.
pub fn classify_in_quotient(r: &RingTable, ideal: &IdealMask, a: Elem) -> Result<(RingTable, ElementProfile)> {
    let q = make_quotient(r, ideal)?;
    let image = q.projection[a];
    let profile = classify(&q.ring, image);
    Ok((q.ring, profile))
}

/// Whether every idempotent commutes with every element.
pub fn non_central_idempotent(r: &RingTable) -> Option<(Elem, Elem)> {
    idempotents(r)
        .iter()
        .find_map(|&e| r.elements().find(|&x| r.mul(e, x) != r.mul(x, e)).map(|x| (e, x)))
}
