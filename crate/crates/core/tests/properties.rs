//! Engine against oracle on generated small KBs, and hitting sets against
//! brute force.

use std::collections::BTreeSet;

use abduce_core::oracle::Oracle;
use abduce_core::repair::{self, minimal_hitting_sets, Semantics};
use abduce_core::{Assertion, AssertionSet, Axiom, Biq, Concept, Dialect, KnowledgeBase, RoleExpr};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["A", "B", "C", "D"];
const INDS: [&str; 2] = ["a", "b"];

fn lite_basic() -> impl Strategy<Value = Concept> {
    prop_oneof![
        3 => (0..4usize).prop_map(|i| Concept::name(NAMES[i])),
        1 => any::<bool>().prop_map(|inv| Concept::exists(if inv { RoleExpr::inverse_of("r") } else { RoleExpr::named("r") })),
    ]
}

fn lite_axiom() -> impl Strategy<Value = Axiom> {
    (lite_basic(), lite_basic(), any::<bool>())
        .prop_map(|(l, r, neg)| Axiom::sub(l, if neg { Concept::not(r) } else { r }))
}

fn el_axiom() -> impl Strategy<Value = Axiom> {
    let n = || (0..4usize).prop_map(|i| Concept::name(NAMES[i]));
    prop_oneof![
        (n(), n()).prop_map(|(a, b)| Axiom::sub(a, b)),
        (n(), n()).prop_map(|(a, b)| Axiom::sub(Concept::and([a, b]), Concept::Bot)),
        (n(), n(), n()).prop_map(|(a, b, c)| Axiom::sub(Concept::and([a, b]), c)),
        (n(), n()).prop_map(|(a, b)| Axiom::sub(a, Concept::some(RoleExpr::named("r"), b))),
        (n(), n()).prop_map(|(a, b)| Axiom::sub(Concept::some(RoleExpr::named("r"), a), b)),
    ]
}

fn assertion() -> impl Strategy<Value = Assertion> {
    prop_oneof![
        3 => (0..4usize, 0..2usize).prop_map(|(c, i)| Assertion::concept(NAMES[c], INDS[i])),
        1 => (0..2usize, 0..2usize).prop_map(|(i, j)| Assertion::role("r", INDS[i], INDS[j])),
    ]
}

fn kb() -> impl Strategy<Value = KnowledgeBase> {
    let abox = || proptest::collection::btree_set(assertion(), 1..8);
    prop_oneof![
        (proptest::collection::vec(lite_axiom(), 1..5), abox())
            .prop_map(|(t, a)| KnowledgeBase::new(Dialect::DlLiteCore, t, a).unwrap()),
        (proptest::collection::vec(el_axiom(), 1..5), abox())
            .prop_map(|(t, a)| KnowledgeBase::new(Dialect::ElBot, t, a).unwrap()),
    ]
    .prop_filter("coherent", |k| repair::conflicts(k).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn engine_matches_oracle(k in kb(), c in 0..4usize, i in 0..2usize) {
        let o = Oracle::default();
        prop_assert_eq!(repair::conflicts(&k).unwrap(), o.conflicts(&k).unwrap());
        prop_assert_eq!(repair::repairs(&k, 1000).unwrap(), o.repairs(&k).unwrap());
        let q = Biq::atomic(NAMES[c], INDS[i]);
        for sem in [Semantics::Brave, Semantics::Ar] {
            prop_assert_eq!(repair::entails(&k, &q, sem).unwrap().holds, o.entails(&k, &q, sem).unwrap());
        }
    }

    #[test]
    fn hitting_sets_match_brute_force(edges in proptest::collection::vec(proptest::collection::btree_set(0u8..6, 1..4), 0..6)) {
        let mut got = minimal_hitting_sets(&edges, 1000).unwrap();
        got.sort();
        let hits = |s: &BTreeSet<u8>| edges.iter().all(|e| !e.is_disjoint(s));
        let all: Vec<BTreeSet<u8>> = (0u32..64).map(|m| (0u8..6).filter(|i| m >> i & 1 == 1).collect()).collect();
        let mut want: Vec<BTreeSet<u8>> = all
            .iter()
            .filter(|s| hits(s) && !all.iter().any(|o| o.len() < s.len() && o.is_subset(s) && hits(o)))
            .cloned()
            .collect();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn witnesses_are_repairs(k in kb(), c in 0..4usize, i in 0..2usize) {
        let reps: Vec<AssertionSet> = repair::repairs(&k, 1000).unwrap();
        let q = Biq::atomic(NAMES[c], INDS[i]);
        for sem in [Semantics::Brave, Semantics::Ar] {
            let r = repair::entails(&k, &q, sem).unwrap();
            if let Some(w) = r.witness {
                prop_assert!(reps.contains(&w));
            }
        }
    }
}
