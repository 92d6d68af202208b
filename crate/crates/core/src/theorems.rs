//! Clause-by-clause checking of the square-stable ideal results.
//!
//! Each result is a list of clauses about a `(ring, ideal)` instance plus the
//! logical relation the result claims between them. Every clause is evaluated
//! on its own (no clause is inferred from another), and the verdict is
//! consistent when the computed truth values satisfy the claimed relation.
//! Instances whose hypotheses fail are recorded as vacuous.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::element::{classify_all, is_dedekind_finite, is_strongly_regular, is_strongly_regular_ring, ElementProfile};
use crate::error::{Error, Result};
use crate::predicates::{exchange, reduced_ideal, regular_ideal, square_stable_fast, PredicateResult};
use crate::ring::{build, make_corner, make_quotient, Elem, Limits, Quotient, RingTable};
use crate::structure::{
    all_ideals, comaximal_with, idempotents, jacobson_radical, right_sets, units, units_lift_via, IdealMask,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    L31,
    L32,
    T33,
    C34,
    T35,
    C36,
    T37,
    T42,
    C43,
    C44sr,
    T44,
    C45,
    X41,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::L31,
        TheoremId::L32,
        TheoremId::T33,
        TheoremId::C34,
        TheoremId::T35,
        TheoremId::C36,
        TheoremId::T37,
        TheoremId::T42,
        TheoremId::C43,
        TheoremId::C44sr,
        TheoremId::T44,
        TheoremId::C45,
        TheoremId::X41,
    ];

    /// The ids checked per `(ring, ideal)` instance; `X41` is ring-level.
    pub const PER_IDEAL: [TheoremId; 12] = [
        TheoremId::L31,
        TheoremId::L32,
        TheoremId::T33,
        TheoremId::C34,
        TheoremId::T35,
        TheoremId::C36,
        TheoremId::T37,
        TheoremId::T42,
        TheoremId::C43,
        TheoremId::C44sr,
        TheoremId::T44,
        TheoremId::C45,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::L31 => "L31",
            TheoremId::L32 => "L32",
            TheoremId::T33 => "T33",
            TheoremId::C34 => "C34",
            TheoremId::T35 => "T35",
            TheoremId::C36 => "C36",
            TheoremId::T37 => "T37",
            TheoremId::T42 => "T42",
            TheoremId::C43 => "C43",
            TheoremId::C44sr => "C44sr",
            TheoremId::T44 => "T44",
            TheoremId::C45 => "C45",
            TheoremId::X41 => "X41",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::PreconditionFailed(format!("unknown theorem id `{s}`")))
    }
}

/// The logical shape a result claims for its clause values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// clause 1 implies clause 2
    Implies,
    /// all clauses agree
    Equivalent,
    /// the last clause holds outright; earlier clauses are informational
    Holds,
    /// clause 1 agrees with the conjunction of the remaining clauses
    IffConjunction,
}

impl Relation {
    pub fn satisfied(self, values: &[bool]) -> bool {
        match self {
            Relation::Implies => !values[0] || values[1],
            Relation::Equivalent => values.windows(2).all(|w| w[0] == w[1]),
            Relation::Holds => *values.last().unwrap_or(&true),
            Relation::IffConjunction => values[0] == values[1..].iter().all(|&v| v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub label: &'static str,
    pub value: bool,
    /// Where the clause fails, when it does.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub hypotheses: &'static str,
    pub hypotheses_hold: bool,
    /// Empty when the hypotheses fail.
    pub clauses: Vec<Clause>,
    pub relation: Relation,
    pub consistent: bool,
    /// Explanation of an inconsistency; `None` iff consistent.
    pub detail: Option<String>,
}

impl TheoremVerdict {
    pub fn values(&self) -> Vec<bool> {
        self.clauses.iter().map(|c| c.value).collect()
    }

    pub fn is_vacuous(&self) -> bool {
        !self.hypotheses_hold
    }

    fn new(theorem: TheoremId, hypotheses: &'static str, relation: Relation, hold: bool, clauses: Vec<Clause>) -> Self {
        if !hold {
            return TheoremVerdict {
                theorem,
                hypotheses,
                hypotheses_hold: false,
                clauses: vec![],
                relation,
                consistent: true,
                detail: None,
            };
        }
        let values: Vec<bool> = clauses.iter().map(|c| c.value).collect();
        let consistent = relation.satisfied(&values);
        let detail = (!consistent).then(|| {
            let shown: Vec<String> = clauses
                .iter()
                .map(|c| match &c.counterexample {
                    Some(cx) => format!("{}={} [{}]", c.label, c.value, cx),
                    None => format!("{}={}", c.label, c.value),
                })
                .collect();
            format!("{:?} violated: {}", relation, shown.join("; "))
        });
        TheoremVerdict {
            theorem,
            hypotheses,
            hypotheses_hold: true,
            clauses,
            relation,
            consistent,
            detail,
        }
    }
}

fn clause(label: &'static str, failure: Option<String>) -> Clause {
    Clause {
        label,
        value: failure.is_none(),
        counterexample: failure,
    }
}

fn from_predicate(label: &'static str, r: &RingTable, p: &PredicateResult) -> Clause {
    let cx = (!p.holds).then(|| {
        p.witness
            .iter()
            .map(|w| format!("{}={}", w.role, r.name(w.element)))
            .collect::<Vec<_>>()
            .join(", ")
    });
    clause(label, cx)
}

/// Lazily computed ring-wide data shared by all ideals of one ring.
pub struct RingContext<'r> {
    pub ring: &'r RingTable,
    pub limits: Limits,
    profiles: OnceLock<Vec<ElementProfile>>,
    radical_quotient: OnceLock<Quotient>,
    radical_quotient_strong: OnceLock<Vec<bool>>,
    corner_strong: Vec<OnceLock<bool>>,
    corner_dedekind: Vec<OnceLock<bool>>,
    strongly_regular_ring: OnceLock<bool>,
    regular_ring: OnceLock<bool>,
    whole_ss: OnceLock<PredicateResult>,
    whole_exchange: OnceLock<PredicateResult>,
}

impl<'r> RingContext<'r> {
    pub fn new(ring: &'r RingTable, limits: Limits) -> Self {
        RingContext {
            ring,
            limits,
            profiles: OnceLock::new(),
            radical_quotient: OnceLock::new(),
            radical_quotient_strong: OnceLock::new(),
            corner_strong: (0..ring.n()).map(|_| OnceLock::new()).collect(),
            corner_dedekind: (0..ring.n()).map(|_| OnceLock::new()).collect(),
            strongly_regular_ring: OnceLock::new(),
            regular_ring: OnceLock::new(),
            whole_ss: OnceLock::new(),
            whole_exchange: OnceLock::new(),
        }
    }

    pub fn profiles(&self) -> &[ElementProfile] {
        self.profiles.get_or_init(|| classify_all(self.ring))
    }

    fn radical_quotient(&self) -> &Quotient {
        self.radical_quotient.get_or_init(|| {
            make_quotient(self.ring, jacobson_radical(self.ring)).expect("radical is an ideal of its own ring")
        })
    }

    /// Strong regularity of each coset of `R/J(R)`.
    fn radical_quotient_strong(&self) -> &[bool] {
        self.radical_quotient_strong.get_or_init(|| {
            let q = &self.radical_quotient().ring;
            q.elements().map(|c| is_strongly_regular(q, c)).collect()
        })
    }

    /// Every element of the corner ring `eRe` strongly regular in `eRe`.
    fn corner_strongly_regular(&self, e: Elem) -> bool {
        *self.corner_strong[e].get_or_init(|| {
            let c = make_corner(self.ring, e).expect("caller passes idempotents");
            is_strongly_regular_ring(&c.ring)
        })
    }

    fn corner_dedekind_finite(&self, e: Elem) -> bool {
        *self.corner_dedekind[e].get_or_init(|| {
            let c = make_corner(self.ring, e).expect("caller passes idempotents");
            is_dedekind_finite(&c.ring).0
        })
    }

    fn regular_ring(&self) -> bool {
        *self
            .regular_ring
            .get_or_init(|| self.profiles().iter().all(|p| p.is_regular()))
    }

    fn strongly_regular_ring(&self) -> bool {
        *self
            .strongly_regular_ring
            .get_or_init(|| self.profiles().iter().all(|p| p.is_strongly_regular()))
    }

    fn whole_ss(&self) -> &PredicateResult {
        self.whole_ss
            .get_or_init(|| square_stable_fast(self.ring, &IdealMask::full(self.ring)))
    }

    fn whole_exchange(&self) -> &PredicateResult {
        self.whole_exchange
            .get_or_init(|| exchange(self.ring, &IdealMask::full(self.ring)))
    }
}

/// Lazily computed data for one ideal.
pub struct IdealContext<'c, 'r> {
    pub ring: &'c RingContext<'r>,
    pub ideal: &'c IdealMask,
    square_stable: OnceLock<PredicateResult>,
    exchange: OnceLock<PredicateResult>,
    regular: OnceLock<PredicateResult>,
}

impl<'c, 'r> IdealContext<'c, 'r> {
    pub fn new(ring: &'c RingContext<'r>, ideal: &'c IdealMask) -> Result<Self> {
        if ideal.members().universe() != ring.ring.n() {
            return Err(Error::NotAnIdeal(format!(
                "mask does not belong to {}",
                ring.ring.provenance()
            )));
        }
        Ok(IdealContext {
            ring,
            ideal,
            square_stable: OnceLock::new(),
            exchange: OnceLock::new(),
            regular: OnceLock::new(),
        })
    }

    fn r(&self) -> &'r RingTable {
        self.ring.ring
    }

    pub fn square_stable(&self) -> &PredicateResult {
        self.square_stable
            .get_or_init(|| square_stable_fast(self.r(), self.ideal))
    }

    pub fn exchange(&self) -> &PredicateResult {
        self.exchange.get_or_init(|| exchange(self.r(), self.ideal))
    }

    pub fn regular(&self) -> &PredicateResult {
        self.regular.get_or_init(|| regular_ideal(self.r(), self.ideal))
    }

    fn ss_clause(&self) -> Clause {
        from_predicate("square stable", self.r(), self.square_stable())
    }

    fn first_failure(&self, it: impl IntoIterator<Item = Elem>, ok: impl Fn(Elem) -> bool) -> Option<String> {
        it.into_iter()
            .find(|&a| !ok(a))
            .map(|a| format!("a={}", self.r().name(a)))
    }

    /// `∀ a ∈ I: a² ∈ J ⟹ a ∈ J`.
    fn jacobson_condition(&self) -> Clause {
        let r = self.r();
        let j = jacobson_radical(r);
        clause(
            "a^2 in J implies a in J",
            self.first_failure(self.ideal.iter(), |a| !j.contains(r.square(a)) || j.contains(a)),
        )
    }

    /// `∀ a ∈ I, e = e²: ae - ea ∈ J`.
    fn commutes_mod_radical(&self) -> Clause {
        let r = self.r();
        let j = jacobson_radical(r);
        let cx = self.ideal.iter().find_map(|a| {
            idempotents(r)
                .iter()
                .find(|&&e| !j.contains(r.sub(r.mul(a, e), r.mul(e, a))))
                .map(|&e| format!("a={}, e={}", r.name(a), r.name(e)))
        });
        clause("ae - ea in J for all idempotents e", cx)
    }

    fn regular_members(&self) -> impl Iterator<Item = Elem> + '_ {
        let profiles = self.ring.profiles();
        self.ideal.iter().filter(move |&a| profiles[a].is_regular())
    }

    /// `∀` regular `a ∈ I`: `ā` strongly regular in `R/J(R)`.
    fn strongly_regular_mod_radical(&self) -> Clause {
        let q = self.ring.radical_quotient();
        let strong = self.ring.radical_quotient_strong();
        clause(
            "regular a has strongly regular image in R/J",
            self.first_failure(self.regular_members(), |a| strong[q.projection[a]]),
        )
    }

    /// `∀` regular `a ∈ I`: `a ∈ a²R` and `eRe` Dedekind-finite for `e = a x`.
    fn right_strong_and_dedekind(&self) -> Clause {
        let r = self.r();
        let profiles = self.ring.profiles();
        clause(
            "regular a lies in a^2R with aR Dedekind-finite",
            self.first_failure(self.regular_members(), |a| {
                let p = &profiles[a];
                let x = p.regular_witness.expect("regular member");
                p.right_strong_witness.is_some() && self.ring.corner_dedekind_finite(r.mul(a, x))
            }),
        )
    }

    fn regular_are_strongly_regular(&self) -> Clause {
        let profiles = self.ring.profiles();
        clause(
            "every regular element of I is strongly regular",
            self.first_failure(self.regular_members(), |a| profiles[a].is_strongly_regular()),
        )
    }

    /// `∀` idempotent `e ∈ I`: `eRe` strongly regular.
    fn corners_strongly_regular(&self) -> Clause {
        let r = self.r();
        let cx = idempotents(r)
            .iter()
            .copied()
            .filter(|&e| self.ideal.contains(e))
            .find(|&e| !self.ring.corner_strongly_regular(e))
            .map(|e| format!("e={}", r.name(e)));
        clause("eRe strongly regular for idempotents e in I", cx)
    }

    /// Comaximal `(a, b)` with `a ∈ 1 + I` admits `y` with `a² + b y` a unit.
    fn square_completion_on_one_plus(&self) -> Clause {
        let r = self.r();
        let u = units(r);
        let rights = right_sets(r);
        let cx = self.ideal.one_plus(r).into_iter().find_map(|a| {
            let a2 = r.square(a);
            r.elements()
                .filter(|&b| comaximal_with(r, &rights[a], &rights[b]))
                .find(|&b| !r.elements().any(|y| u.contains(r.add(a2, r.mul(b, y)))))
                .map(|b| format!("a={}, b={}", r.name(a), r.name(b)))
        });
        clause("a in 1+I, aR+bR=R gives a unit a^2+by", cx)
    }

    fn members_strongly_regular(&self, label: &'static str, members: Vec<Elem>) -> Clause {
        let profiles = self.ring.profiles();
        clause(
            label,
            self.first_failure(members, |a| profiles[a].is_strongly_regular()),
        )
    }

    /// Every unit-regular `a ∈ I` with `ax + b = 1` completes to a unit `a + by`.
    fn unit_regular_completion(&self) -> (Clause, Clause) {
        let r = self.r();
        let u = units(r);
        let profiles = self.ring.profiles();
        let all_ur = self.first_failure(self.ideal.iter(), |a| profiles[a].is_unit_regular());
        let cx = self
            .ideal
            .iter()
            .filter(|&a| profiles[a].is_unit_regular())
            .find_map(|a| {
                r.elements()
                    .find(|&x| {
                        let b = r.sub(r.one(), r.mul(a, x));
                        !r.elements().any(|y| u.contains(r.add(a, r.mul(b, y))))
                    })
                    .map(|x| format!("a={}, x={}", r.name(a), r.name(x)))
            });
        (
            clause("every element of I is unit-regular", all_ur),
            clause("unit-regular a with ax+b=1 gives a unit a+by", cx),
        )
    }
}

fn qualifies_for_example41(n: u64) -> bool {
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            if p % 2 == 1 && k == 1 {
                return true;
            }
        }
        p += 1;
    }
    m > 2
}

/// Checks one result on one instance.
pub fn verify_in(ctx: &IdealContext<'_, '_>, id: TheoremId) -> Result<TheoremVerdict> {
    use Relation::*;
    use TheoremId::*;
    let r = ctx.r();
    let ideal = ctx.ideal;
    const EXCHANGE: &str = "I is an exchange ideal";
    const REGULAR: &str = "I is a regular ideal";
    Ok(match id {
        L31 => TheoremVerdict::new(
            id,
            "none",
            Implies,
            true,
            vec![ctx.ss_clause(), ctx.jacobson_condition()],
        ),
        L32 => {
            let (all_ur, completes) = ctx.unit_regular_completion();
            TheoremVerdict::new(id, "none", Holds, true, vec![all_ur, completes])
        }
        T33 | C34 | T35 | T37 => {
            let hold = ctx.exchange().holds;
            let clauses = if !hold {
                vec![]
            } else {
                match id {
                    T33 => vec![ctx.ss_clause(), ctx.jacobson_condition()],
                    C34 => vec![ctx.ss_clause(), ctx.commutes_mod_radical()],
                    T35 => vec![ctx.ss_clause(), ctx.strongly_regular_mod_radical()],
                    _ => vec![
                        ctx.ss_clause(),
                        ctx.right_strong_and_dedekind(),
                        ctx.regular_are_strongly_regular(),
                    ],
                }
            };
            TheoremVerdict::new(id, EXCHANGE, Equivalent, hold, clauses)
        }
        C36 => {
            let hold = ideal.is_full() && ctx.ring.whole_exchange().holds;
            let clauses = if hold {
                vec![
                    from_predicate("R has square stable range one", r, ctx.ring.whole_ss()),
                    ctx.strongly_regular_mod_radical(),
                ]
            } else {
                vec![]
            };
            TheoremVerdict::new(id, "I = R and R is an exchange ring", Equivalent, hold, clauses)
        }
        T42 | C43 | T44 | C45 => {
            let hold = ctx.regular().holds;
            let clauses = if !hold {
                vec![]
            } else {
                match id {
                    T42 => vec![ctx.ss_clause(), ctx.corners_strongly_regular()],
                    C43 => vec![
                        ctx.ss_clause(),
                        from_predicate("I is reduced", r, &reduced_ideal(r, ideal)),
                    ],
                    T44 => vec![ctx.ss_clause(), ctx.square_completion_on_one_plus()],
                    _ => vec![
                        ctx.ss_clause(),
                        ctx.members_strongly_regular("every element of I is strongly regular", ideal.iter().collect()),
                        ctx.members_strongly_regular("every element of 1+I is strongly regular", ideal.one_plus(r)),
                    ],
                }
            };
            TheoremVerdict::new(id, REGULAR, Equivalent, hold, clauses)
        }
        C44sr => {
            let hold = ctx.ring.regular_ring();
            let clauses = if hold {
                let q = make_quotient(r, ideal)?;
                let lift = units_lift_via(r, &q);
                let quotient_cx = q
                    .ring
                    .elements()
                    .find(|&c| !is_strongly_regular(&q.ring, c))
                    .map(|c| format!("coset={}", q.ring.name(c)));
                vec![
                    clause(
                        "R is strongly regular",
                        (!ctx.ring.strongly_regular_ring()).then(|| {
                            let a = ctx
                                .ring
                                .profiles()
                                .iter()
                                .find(|p| !p.is_strongly_regular())
                                .map(|p| p.element);
                            format!("a={}", a.map(|a| r.name(a)).unwrap_or("?"))
                        }),
                    ),
                    ctx.ss_clause(),
                    clause("R/I is strongly regular", quotient_cx),
                    clause(
                        "units of R/I lift to units of R",
                        lift.failure.map(|c| format!("unit={}", q.ring.name(c))),
                    ),
                ]
            } else {
                vec![]
            };
            TheoremVerdict::new(id, "R is a regular ring", IffConjunction, hold, clauses)
        }
        X41 => {
            let n = match r.provenance() {
                crate::expr::RingExpr::Gaussian(n) if ideal.is_full() => Some(*n),
                _ => None,
            };
            let hold = n.is_some_and(qualifies_for_example41);
            let clauses = if hold {
                let found = example41_witness(r, &ctx.ring.limits)?;
                vec![clause(
                    "some nonzero ideal is regular and square stable",
                    found.is_none().then(|| "no such ideal".to_string()),
                )]
            } else {
                vec![]
            };
            TheoremVerdict::new(
                id,
                "R = Zi(n) with a simple odd prime factor, I = R",
                Holds,
                hold,
                clauses,
            )
        }
    })
}

/// Checks one result on a single `(ring, ideal)` pair.
pub fn verify(id: TheoremId, r: &RingTable, ideal: &IdealMask, limits: &Limits) -> Result<TheoremVerdict> {
    let rc = RingContext::new(r, *limits);
    let ic = IdealContext::new(&rc, ideal)?;
    verify_in(&ic, id)
}

/// Largest nonzero ideal (largest size first, then canonical order) that is
/// both regular and square stable.
fn example41_witness(r: &RingTable, limits: &Limits) -> Result<Option<IdealMask>> {
    let mut ideals = all_ideals(r, limits)?;
    ideals.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.members().iter().cmp(b.members().iter()))
    });
    Ok(ideals
        .into_iter()
        .filter(|i| !i.is_zero())
        .find(|i| regular_ideal(r, i).holds && square_stable_fast(r, i).holds))
}

#[derive(Clone, Debug)]
pub struct Example41 {
    pub n: u64,
    pub ring: RingTable,
    pub verdict: TheoremVerdict,
    pub witness: Option<IdealMask>,
}

/// Builds `Zi(n)` and searches its ideals for a nonzero regular square-stable one.
pub fn verify_example41(n: u64, limits: &Limits) -> Result<Example41> {
    let ring = build(&crate::expr::RingExpr::Gaussian(n), limits)?;
    let witness = if qualifies_for_example41(n) {
        example41_witness(&ring, limits)?
    } else {
        None
    };
    let verdict = verify(TheoremId::X41, &ring, &IdealMask::full(&ring), limits)?;
    Ok(Example41 {
        n,
        ring,
        verdict,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_str, make_cyclic};

    fn ring(s: &str) -> RingTable {
        build_str(s, &Limits::default()).unwrap()
    }

    #[test]
    fn relations() {
        assert!(Relation::Implies.satisfied(&[false, false]));
        assert!(!Relation::Implies.satisfied(&[true, false]));
        assert!(Relation::Equivalent.satisfied(&[true, true, true]));
        assert!(!Relation::Equivalent.satisfied(&[true, false, true]));
        assert!(Relation::IffConjunction.satisfied(&[false, true, false, true]));
        assert!(!Relation::IffConjunction.satisfied(&[false, true, true, true]));
        assert!(Relation::Holds.satisfied(&[false, true]));
    }

    #[test]
    fn t42_on_m2z2() {
        let m2 = ring("M(2,Z(2))");
        let v = verify(TheoremId::T42, &m2, &IdealMask::full(&m2), &Limits::default()).unwrap();
        assert!(v.hypotheses_hold);
        assert_eq!(v.values(), vec![false, false]);
        assert!(v.consistent && v.detail.is_none());
    }

    #[test]
    fn c43_on_z6() {
        let z6 = make_cyclic(6);
        let v = verify(TheoremId::C43, &z6, &IdealMask::full(&z6), &Limits::default()).unwrap();
        assert_eq!(v.values(), vec![true, true]);
        assert!(v.consistent);
    }

    #[test]
    fn t33_on_radical_of_z4() {
        let z4 = make_cyclic(4);
        let v = verify(TheoremId::T33, &z4, jacobson_radical(&z4), &Limits::default()).unwrap();
        assert_eq!(v.values(), vec![true, true]);
        assert!(v.consistent);
    }

    #[test]
    fn regular_hypothesis_fails_on_radical() {
        let z4 = make_cyclic(4);
        let v = verify(TheoremId::T42, &z4, jacobson_radical(&z4), &Limits::default()).unwrap();
        assert!(v.is_vacuous() && v.consistent && v.clauses.is_empty());
    }

    #[test]
    fn inconsistency_is_explained() {
        let v = TheoremVerdict::new(
            TheoremId::T33,
            "test",
            Relation::Equivalent,
            true,
            vec![clause("p", None), clause("q", Some("a=1".into()))],
        );
        assert!(!v.consistent);
        assert!(v.detail.as_deref().unwrap().contains("a=1"));
    }

    #[test]
    fn example41_qualification() {
        let q: Vec<u64> = (1..=15).filter(|&n| qualifies_for_example41(n)).collect();
        assert_eq!(q, vec![3, 5, 6, 7, 10, 11, 12, 13, 14, 15]);
    }

    #[test]
    fn example41_small_cases() {
        let lim = Limits::default();
        let e3 = verify_example41(3, &lim).unwrap();
        assert!(e3.verdict.consistent && e3.verdict.hypotheses_hold);
        assert!(e3.witness.unwrap().is_full());
        let e6 = verify_example41(6, &lim).unwrap();
        assert_eq!(e6.witness.unwrap().len(), 9);
        let e5 = verify_example41(5, &lim).unwrap();
        assert!(e5.witness.unwrap().is_full());
        let e4 = verify_example41(4, &lim).unwrap();
        assert!(!e4.verdict.hypotheses_hold && e4.witness.is_none());
    }

    #[test]
    fn ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T99".parse::<TheoremId>().is_err());
    }
}
