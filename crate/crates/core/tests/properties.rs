use proptest::prelude::*;

use ringcheck::axioms::verify_axioms;
use ringcheck::expr::{parse_ring_expr, IdealSpec, RingExpr};
use ringcheck::predicates::{square_stable_def, square_stable_fast};
use ringcheck::ring::{build, make_corner, make_quotient};
use ringcheck::structure::{all_ideals, idempotents, jacobson_radical, IdealMask};
use ringcheck::{Limits, RingTable};

fn leaf() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        (1u64..=9).prop_map(RingExpr::Cyclic),
        (1u64..=4).prop_map(RingExpr::Gaussian)
    ]
}

fn expr() -> impl Strategy<Value = RingExpr> {
    let small = (1u64..=3).prop_map(RingExpr::Cyclic);
    let spec = prop_oneof![Just(IdealSpec::Zero), Just(IdealSpec::All), Just(IdealSpec::Jacobson)];
    prop_oneof![
        3 => leaf(),
        1 => small.clone().prop_map(|b| RingExpr::Matrix(2, Box::new(b))),
        1 => (1u64..=4).prop_map(|n| RingExpr::Triangular(2, Box::new(RingExpr::Cyclic(n)))),
        2 => prop::collection::vec(leaf(), 1..=3).prop_map(RingExpr::Product),
        2 => (leaf(), spec.clone()).prop_map(|(r, i)| RingExpr::Quotient(Box::new(r), i)),
        1 => ((1u64..=4), spec).prop_map(|(n, i)| {
            RingExpr::Quotient(Box::new(RingExpr::Triangular(2, Box::new(RingExpr::Cyclic(n)))), i)
        }),
    ]
}

fn small_ring(e: &RingExpr) -> Option<RingTable> {
    build(e, &Limits::with_max_size(128)).ok()
}

fn spaced(s: &str) -> String {
    let mut out = String::from(" ");
    for c in s.chars() {
        if "(),".contains(c) {
            out.push_str(&format!(" {c}\t"));
        } else {
            out.push(c);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_round_trip(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_ring_expr(&text).unwrap(), e.clone());
        prop_assert_eq!(parse_ring_expr(&spaced(&text)).unwrap(), e);
    }

    #[test]
    fn constructors_satisfy_axioms(e in expr()) {
        if let Some(r) = small_ring(&e) {
            let rep = verify_axioms(&r);
            prop_assert!(rep.is_ok(), "{}: {:?}", e, rep.violations.first());
        }
    }

    #[test]
    fn projection_is_a_surjective_homomorphism(e in expr(), pick in any::<prop::sample::Index>()) {
        let Some(r) = small_ring(&e) else { return Ok(()) };
        let ideals = all_ideals(&r, &Limits::default()).unwrap();
        let i = pick.get(&ideals);
        let q = make_quotient(&r, i).unwrap();
        let p = &q.projection;
        for a in r.elements() {
            for b in r.elements() {
                prop_assert_eq!(q.ring.add(p[a], p[b]), p[r.add(a, b)]);
                prop_assert_eq!(q.ring.mul(p[a], p[b]), p[r.mul(a, b)]);
            }
        }
        let mut hit = vec![false; q.ring.n()];
        for &c in p {
            hit[c] = true;
        }
        prop_assert!(hit.iter().all(|&h| h));
        prop_assert_eq!(q.ring.n() * i.len(), r.n());
        prop_assert_eq!(p[r.one()], q.ring.one());
    }

    #[test]
    fn quotient_by_zero_is_a_relabeling(e in expr()) {
        let Some(r) = small_ring(&e) else { return Ok(()) };
        let q = make_quotient(&r, &IdealMask::zero(&r)).unwrap();
        let p = &q.projection;
        prop_assert_eq!(q.ring.n(), r.n());
        for a in r.elements() {
            for b in r.elements() {
                prop_assert_eq!(p[r.add(a, b)], q.ring.add(p[a], p[b]));
                prop_assert_eq!(p[r.mul(a, b)], q.ring.mul(p[a], p[b]));
            }
        }
        let qq = make_quotient(&q.ring, &IdealMask::zero(&q.ring)).unwrap();
        prop_assert_eq!(qq.ring.to_raw_parts().mul, q.ring.to_raw_parts().mul);
    }

    #[test]
    fn corner_embedding(e in expr(), pick in any::<prop::sample::Index>()) {
        let Some(r) = small_ring(&e) else { return Ok(()) };
        let idem = idempotents(&r);
        let f = *pick.get(idem);
        let c = make_corner(&r, f).unwrap();
        let img = &c.embedding;
        prop_assert_eq!(img[c.ring.one()], f);
        for x in c.ring.elements() {
            prop_assert_eq!(r.mul3(f, img[x], f), img[x]);
            for y in c.ring.elements() {
                prop_assert_eq!(img[c.ring.add(x, y)], r.add(img[x], img[y]));
                prop_assert_eq!(img[c.ring.mul(x, y)], r.mul(img[x], img[y]));
            }
        }
        let image: std::collections::BTreeSet<_> = img.iter().copied().collect();
        let expected: std::collections::BTreeSet<_> = r.elements().map(|x| r.mul3(f, x, f)).collect();
        prop_assert_eq!(image, expected);
    }

    #[test]
    fn definition_and_fast_forms_agree(e in expr(), pick in any::<prop::sample::Index>()) {
        let Some(r) = small_ring(&e) else { return Ok(()) };
        let ideals = all_ideals(&r, &Limits::default()).unwrap();
        let i = pick.get(&ideals);
        prop_assert_eq!(square_stable_def(&r, i).holds, square_stable_fast(&r, i).holds);
    }

    #[test]
    fn radical_of_radical_quotient_is_zero(e in expr()) {
        let Some(r) = small_ring(&e) else { return Ok(()) };
        let q = make_quotient(&r, jacobson_radical(&r)).unwrap();
        prop_assert!(jacobson_radical(&q.ring).is_zero());
    }
}
