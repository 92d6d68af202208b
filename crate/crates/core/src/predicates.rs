//! Ideal-level and ring-level predicates, each decided exhaustively.
//!
//! Square stability has three deciders:
//!
//! * [`square_stable_def`] scans comaximal pairs `(a, b)` with `a ∈ I` and
//!   looks for `y` with `a² + b y` a unit;
//! * [`square_stable_fast`] scans `(a, r)` and looks for `x` with
//!   `a² + (1 - a r) x` a unit, which avoids the comaximality test;
//! * [`square_stable_matrix`] (commutative rings only) looks for `Y ∈ M_2(R)`
//!   with `a I₂ + b Y` invertible.
//!
//! Reducedness is decided from square-zero elements only: if `x ∈ I` is
//! nilpotent of minimal index `k >= 2`, then `x^(k-1)` is a nonzero element of
//! `I` whose square is zero.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::element::{is_dedekind_finite, non_central_idempotent};
use crate::error::{Error, Result};
use crate::expr::RingExpr;
use crate::ring::{Elem, Limits, RingTable};
use crate::structure::{comaximal_with, idempotents, jacobson_radical, nilpotency_index, right_sets, units, IdealMask};

/// Every predicate the engine can decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredicateId {
    SquareStable,
    SquareStableDef,
    SquareStableMatrix,
    StableRangeOne,
    Exchange,
    Regular,
    Reduced,
    InJacobson,
    Nil,
    SquareStableRangeOne,
    Abelian,
    DedekindFinite,
}

impl PredicateId {
    pub const ALL: [PredicateId; 12] = [
        PredicateId::SquareStable,
        PredicateId::SquareStableDef,
        PredicateId::SquareStableMatrix,
        PredicateId::StableRangeOne,
        PredicateId::Exchange,
        PredicateId::Regular,
        PredicateId::Reduced,
        PredicateId::InJacobson,
        PredicateId::Nil,
        PredicateId::SquareStableRangeOne,
        PredicateId::Abelian,
        PredicateId::DedekindFinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredicateId::SquareStable => "square-stable",
            PredicateId::SquareStableDef => "square-stable-def",
            PredicateId::SquareStableMatrix => "square-stable-matrix",
            PredicateId::StableRangeOne => "stable-range-one",
            PredicateId::Exchange => "exchange",
            PredicateId::Regular => "regular",
            PredicateId::Reduced => "reduced",
            PredicateId::InJacobson => "in-jacobson",
            PredicateId::Nil => "nil",
            PredicateId::SquareStableRangeOne => "square-stable-range-one",
            PredicateId::Abelian => "abelian",
            PredicateId::DedekindFinite => "dedekind-finite",
        }
    }

    /// Ring-level predicates ignore the ideal argument.
    pub fn is_ring_level(self) -> bool {
        matches!(
            self,
            PredicateId::SquareStableRangeOne | PredicateId::Abelian | PredicateId::DedekindFinite
        )
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for PredicateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PredicateId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::PreconditionFailed(format!("unknown predicate `{s}`")))
    }
}

/// An element with the role it plays in a witness or counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Role {
    pub role: &'static str,
    pub element: Elem,
}

/// Sub-verdict for predicates decided in more than one way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub label: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub predicate: PredicateId,
    pub holds: bool,
    /// Counterexample when `holds` is false; empty otherwise.
    pub witness: Vec<Role>,
    pub parts: Vec<Part>,
    /// Set when two characterizations of the same property disagree.
    pub fault: Option<String>,
    pub pairs_examined: u64,
    pub elapsed_us: u64,
}

impl PredicateResult {
    pub fn role(&self, name: &str) -> Option<Elem> {
        self.witness.iter().find(|r| r.role == name).map(|r| r.element)
    }
}

struct Scan {
    holds: bool,
    witness: Vec<Role>,
    pairs: u64,
}

impl Scan {
    fn pass(pairs: u64) -> Self {
        Scan {
            holds: true,
            witness: vec![],
            pairs,
        }
    }

    fn fail(pairs: u64, roles: &[(&'static str, Elem)]) -> Self {
        Scan {
            holds: false,
            witness: roles.iter().map(|&(role, element)| Role { role, element }).collect(),
            pairs,
        }
    }
}

fn finish(predicate: PredicateId, start: Instant, scan: Scan) -> PredicateResult {
    PredicateResult {
        predicate,
        holds: scan.holds,
        witness: scan.witness,
        parts: vec![],
        fault: None,
        pairs_examined: scan.pairs,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn has_unit_completion(r: &RingTable, base: Elem, b: Elem) -> bool {
    let u = units(r);
    r.elements().any(|y| u.contains(r.add(base, r.mul(b, y))))
}

/// Square stability straight from the definition.
pub fn square_stable_def(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    let start = Instant::now();
    let rights = right_sets(r);
    let mut pairs = 0;
    for a in ideal.iter() {
        let a2 = r.square(a);
        for b in r.elements() {
            if !comaximal_with(r, &rights[a], &rights[b]) {
                continue;
            }
            pairs += 1;
            if !has_unit_completion(r, a2, b) {
                return finish(
                    PredicateId::SquareStableDef,
                    start,
                    Scan::fail(pairs, &[("a", a), ("b", b)]),
                );
            }
        }
    }
    finish(PredicateId::SquareStableDef, start, Scan::pass(pairs))
}

/// Square stability via `a² + (1 - a r) x ∈ U(R)`; the default decider.
pub fn square_stable_fast(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    let start = Instant::now();
    let mut pairs = 0;
    for a in ideal.iter() {
        let a2 = r.square(a);
        for s in r.elements() {
            pairs += 1;
            let c = r.sub(r.one(), r.mul(a, s));
            if !has_unit_completion(r, a2, c) {
                return finish(
                    PredicateId::SquareStable,
                    start,
                    Scan::fail(pairs, &[("a", a), ("r", s)]),
                );
            }
        }
    }
    finish(PredicateId::SquareStable, start, Scan::pass(pairs))
}

/// Square stability via invertibility of `a I₂ + b Y` in `M_2(R)`, for
/// commutative `R` with `|R|^4` within the size cap.
///
/// Over a commutative ring a 2x2 matrix is invertible exactly when its
/// determinant is a unit; the adjugate inverse is multiplied back in both
/// orders before a matrix is accepted.
pub fn square_stable_matrix(r: &RingTable, ideal: &IdealMask, limits: &Limits) -> Result<PredicateResult> {
    let start = Instant::now();
    if !r.is_commutative() {
        return Err(Error::NotCommutative(r.provenance().to_string()));
    }
    let m2 = RingExpr::Matrix(2, Box::new(r.provenance().clone()));
    limits.check(&m2, (r.n() as u128).pow(4))?;
    let u = units(r);
    let mul2 = |x: [Elem; 4], y: [Elem; 4]| {
        [
            r.add(r.mul(x[0], y[0]), r.mul(x[1], y[2])),
            r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3])),
            r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2])),
            r.add(r.mul(x[2], y[1]), r.mul(x[3], y[3])),
        ]
    };
    let id = [r.one(), r.zero(), r.zero(), r.one()];
    let invertible = |m: [Elem; 4]| {
        let det = r.sub(r.mul(m[0], m[3]), r.mul(m[1], m[2]));
        let Some(d) = u.inverse[det] else {
            return false;
        };
        let inv = [
            r.mul(d, m[3]),
            r.neg(r.mul(d, m[1])),
            r.neg(r.mul(d, m[2])),
            r.mul(d, m[0]),
        ];
        mul2(m, inv) == id && mul2(inv, m) == id
    };
    let n = r.n();
    let rights = right_sets(r);
    let mut pairs = 0;
    for a in ideal.iter() {
        for b in r.elements() {
            if !comaximal_with(r, &rights[a], &rights[b]) {
                continue;
            }
            pairs += 1;
            let by: Vec<Elem> = r.elements().map(|y| r.mul(b, y)).collect();
            let mut found = false;
            'search: for y11 in 0..n {
                for y12 in 0..n {
                    for y21 in 0..n {
                        for y22 in 0..n {
                            if invertible([r.add(a, by[y11]), by[y12], by[y21], r.add(a, by[y22])]) {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                }
            }
            if !found {
                return Ok(finish(
                    PredicateId::SquareStableMatrix,
                    start,
                    Scan::fail(pairs, &[("a", a), ("b", b)]),
                ));
            }
        }
    }
    Ok(finish(PredicateId::SquareStableMatrix, start, Scan::pass(pairs)))
}

/// Stable range one for the ideal: comaximal `(a, b)` with `a ∈ 1 + I`
/// admits `y` with `a + b y` a unit.
pub fn stable_range_one(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    let start = Instant::now();
    let rights = right_sets(r);
    let mut pairs = 0;
    for a in ideal.one_plus(r) {
        for b in r.elements() {
            if !comaximal_with(r, &rights[a], &rights[b]) {
                continue;
            }
            pairs += 1;
            if !has_unit_completion(r, a, b) {
                return finish(
                    PredicateId::StableRangeOne,
                    start,
                    Scan::fail(pairs, &[("a", a), ("b", b)]),
                );
            }
        }
    }
    finish(PredicateId::StableRangeOne, start, Scan::pass(pairs))
}

/// `∃` idempotent `e ∈ I` and `x, y ∈ I` with `e = a x = a + y - a y`.
fn exchange_by_definition(r: &RingTable, ideal: &IdealMask, a: Elem) -> bool {
    idempotents(r)
        .iter()
        .filter(|&&e| ideal.contains(e))
        .any(|&e| ideal.iter().any(|x| r.mul(a, x) == e) && ideal.iter().any(|y| r.sub(r.add(a, y), r.mul(a, y)) == e))
}

/// `∃` idempotent `e ∈ R` with `e ∈ aR` and `1 - e ∈ (1 - a)R`.
fn exchange_by_characterization(r: &RingTable, a: Elem) -> bool {
    let rights = right_sets(r);
    let co = r.sub(r.one(), a);
    idempotents(r)
        .iter()
        .any(|&e| rights[a].contains(e) && rights[co].contains(r.sub(r.one(), e)))
}

/// Exchange ideal, decided by both the definition and the idempotent
/// characterization. Disagreement is reported in `fault`.
pub fn exchange(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    let start = Instant::now();
    let mut def_fail = None;
    let mut char_fail = None;
    let mut disagreement = None;
    let mut pairs = 0;
    for a in ideal.iter() {
        pairs += 1;
        let d = exchange_by_definition(r, ideal, a);
        let c = exchange_by_characterization(r, a);
        if !d && def_fail.is_none() {
            def_fail = Some(a);
        }
        if !c && char_fail.is_none() {
            char_fail = Some(a);
        }
        if d != c && disagreement.is_none() {
            disagreement = Some(a);
        }
    }
    let mut witness = Vec::new();
    if let Some(a) = def_fail.or(char_fail) {
        witness.push(Role { role: "a", element: a });
    }
    PredicateResult {
        predicate: PredicateId::Exchange,
        holds: def_fail.is_none() && char_fail.is_none(),
        witness,
        parts: vec![
            Part {
                label: "definition",
                holds: def_fail.is_none(),
            },
            Part {
                label: "characterization",
                holds: char_fail.is_none(),
            },
        ],
        fault: disagreement.map(|a| format!("exchange characterizations disagree at a = {}", r.name(a))),
        pairs_examined: pairs,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn every_member(
    id: PredicateId,
    r: &RingTable,
    members: impl IntoIterator<Item = Elem>,
    role: &'static str,
    pred: impl Fn(Elem) -> bool,
) -> PredicateResult {
    let start = Instant::now();
    let mut pairs = 0;
    for a in members {
        pairs += 1;
        if !pred(a) {
            return finish(id, start, Scan::fail(pairs, &[(role, a)]));
        }
    }
    let _ = r;
    finish(id, start, Scan::pass(pairs))
}

/// Every element of `I` is von Neumann regular.
pub fn regular_ideal(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    every_member(PredicateId::Regular, r, ideal.iter(), "a", |a| {
        r.elements().any(|x| r.mul3(a, x, a) == a)
    })
}

/// No nonzero element of `I` squares to zero.
pub fn reduced_ideal(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    every_member(PredicateId::Reduced, r, ideal.iter(), "x", |x| {
        x == r.zero() || r.square(x) != r.zero()
    })
}

/// `I ⊆ J(R)`.
pub fn in_jacobson(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    let j = jacobson_radical(r);
    every_member(PredicateId::InJacobson, r, ideal.iter(), "a", |a| j.contains(a))
}

/// Every element of `I` is nilpotent.
pub fn nil_ideal(r: &RingTable, ideal: &IdealMask) -> PredicateResult {
    every_member(PredicateId::Nil, r, ideal.iter(), "a", |a| {
        nilpotency_index(r, a).is_some()
    })
}

/// Square stable range one of the whole ring.
pub fn ring_square_stable_range_one(r: &RingTable) -> PredicateResult {
    let mut res = square_stable_fast(r, &IdealMask::full(r));
    res.predicate = PredicateId::SquareStableRangeOne;
    res
}

/// All idempotents central; counterexample `(e, x)` with `e x != x e`.
pub fn abelian_ring(r: &RingTable) -> PredicateResult {
    let start = Instant::now();
    let pairs = (idempotents(r).len() * r.n()) as u64;
    let scan = match non_central_idempotent(r) {
        None => Scan::pass(pairs),
        Some((e, x)) => Scan::fail(pairs, &[("e", e), ("x", x)]),
    };
    finish(PredicateId::Abelian, start, scan)
}

pub fn dedekind_finite(r: &RingTable) -> PredicateResult {
    let start = Instant::now();
    let pairs = (r.n() * r.n()) as u64;
    let scan = match is_dedekind_finite(r) {
        (true, _) => Scan::pass(pairs),
        (false, Some((x, y))) => Scan::fail(pairs, &[("x", x), ("y", y)]),
        (false, None) => Scan::fail(pairs, &[]),
    };
    finish(PredicateId::DedekindFinite, start, scan)
}

/// Dispatches on the predicate id.
pub fn evaluate(id: PredicateId, r: &RingTable, ideal: &IdealMask, limits: &Limits) -> Result<PredicateResult> {
    Ok(match id {
        PredicateId::SquareStable => square_stable_fast(r, ideal),
        PredicateId::SquareStableDef => square_stable_def(r, ideal),
        PredicateId::SquareStableMatrix => square_stable_matrix(r, ideal, limits)?,
        PredicateId::StableRangeOne => stable_range_one(r, ideal),
        PredicateId::Exchange => exchange(r, ideal),
        PredicateId::Regular => regular_ideal(r, ideal),
        PredicateId::Reduced => reduced_ideal(r, ideal),
        PredicateId::InJacobson => in_jacobson(r, ideal),
        PredicateId::Nil => nil_ideal(r, ideal),
        PredicateId::SquareStableRangeOne => ring_square_stable_range_one(r),
        PredicateId::Abelian => abelian_ring(r),
        PredicateId::DedekindFinite => dedekind_finite(r),
    })
}
