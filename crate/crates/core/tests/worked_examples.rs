//! The non-convexity KB and small reduction-shaped KBs, checked against the
//! engines and the brute-force oracle. Expected values were computed by the
//! oracle and frozen here.

use abduce_core::abduction::{make_problem, CandidateSpace, MinimalityCriterion, MinimalityKind};
use abduce_core::format::{parse_abox, parse_kb, serialize_kb};
use abduce_core::oracle::{model_search_consistent, Oracle};
use abduce_core::reasoner::{entails_biq, is_consistent, normalize};
use abduce_core::repair::{self, confinement, Semantics};
use abduce_core::{AssertionSet, Biq, Dialect, KnowledgeBase};

const T: &str = "(tbox (sub (and B1 B2) Bot) (sub (and C1 C2) Bot) (sub (and B1 C1) D) (sub (and B2 C1) D) (sub E D))";
const A1: &str = "(abox (inst B1 a) (inst B2 a) (inst C1 a))";
const A2: &str = "(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a))";
const A3: &str = "(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a) (inst E a))";

fn kb(abox: &str) -> KnowledgeBase {
    parse_kb(&format!("(dialect elbot){T}{abox}")).unwrap()
}

/// The same TBox plus an unrelated conflict, with an otherwise empty ABox.
fn base() -> KnowledgeBase {
    parse_kb("(dialect elbot)(tbox (sub (and B1 B2) Bot) (sub (and C1 C2) Bot) (sub (and B1 C1) D) (sub (and B2 C1) D) (sub E D) (sub (and X1 X2) Bot))(abox (inst X1 b) (inst X2 b))").unwrap()
}

fn set(text: &str) -> AssertionSet {
    parse_abox(text).unwrap()
}

fn sets(texts: &[&str]) -> Vec<AssertionSet> {
    let mut v: Vec<AssertionSet> = texts.iter().map(|t| set(t)).collect();
    v.sort();
    v
}

fn d() -> Biq {
    Biq::atomic("D", "a")
}

#[test]
fn parse_sizes_and_signature() {
    let k = kb(A3);
    assert_eq!((k.tbox.len(), k.abox.len()), (5, 5));
    let sig = kb(A1).signature();
    assert_eq!(
        sig.concepts.iter().map(String::as_str).collect::<Vec<_>>(),
        ["B1", "B2", "C1", "C2", "D", "E"]
    );
    assert!(sig.roles.is_empty());
    assert_eq!(
        sig.individuals
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>(),
        ["a"]
    );
    let text = serialize_kb(&k);
    assert_eq!(serialize_kb(&parse_kb(&text).unwrap()), text);
}

#[test]
fn consistency_and_classical_entailment() {
    let pair =
        parse_kb("(dialect elbot)(tbox (sub (and B1 B2) Bot))(abox (inst B1 a) (inst B2 a))")
            .unwrap();
    for (k, want) in [
        (pair, false),
        (kb(A2), false),
        (kb("(abox (inst B1 a) (inst C1 a))"), true),
    ] {
        assert_eq!(is_consistent(&k), want);
        assert_eq!(model_search_consistent(&k, 8), Some(want));
    }
    let o = Oracle::default();
    for (abox, want) in [
        ("(abox (inst B1 a) (inst C1 a))", true),
        ("(abox (inst B1 a) (inst C2 a))", false),
    ] {
        let k = kb(abox);
        assert_eq!(entails_biq(&k, &d()).unwrap().holds, want);
        assert_eq!(o.entails(&k, &d(), Semantics::Classical).unwrap(), want);
    }
}

#[test]
fn normal_form_preserves_entailment() {
    let k = kb(A1);
    let n = normalize(&k.tbox, Dialect::ElBot);
    assert_eq!(n.el_rules().unwrap().len(), 5);
    let k = kb("(abox (inst B1 a) (inst C1 a))");
    assert!(entails_biq(&k, &d()).unwrap().holds);
}

#[test]
fn conflicts_and_repairs() {
    let o = Oracle::default();
    let cases = [
        (
            A1,
            vec!["(abox (inst B1 a) (inst B2 a))"],
            vec![
                "(abox (inst B1 a) (inst C1 a))",
                "(abox (inst B2 a) (inst C1 a))",
            ],
        ),
        (
            A2,
            vec![
                "(abox (inst B1 a) (inst B2 a))",
                "(abox (inst C1 a) (inst C2 a))",
            ],
            vec![
                "(abox (inst B1 a) (inst C1 a))",
                "(abox (inst B1 a) (inst C2 a))",
                "(abox (inst B2 a) (inst C1 a))",
                "(abox (inst B2 a) (inst C2 a))",
            ],
        ),
    ];
    for (abox, conf, reps) in cases {
        let k = kb(abox);
        assert_eq!(repair::conflicts(&k).unwrap(), sets(&conf));
        assert_eq!(o.conflicts(&k).unwrap(), sets(&conf));
        assert_eq!(repair::repairs(&k, 100).unwrap(), sets(&reps));
        assert_eq!(o.repairs(&k).unwrap(), sets(&reps));
    }
}

#[test]
fn repair_semantics() {
    let o = Oracle::default();
    let cases = [
        (A1, Semantics::Ar, true),
        (A2, Semantics::Ar, false),
        (A3, Semantics::Ar, true),
        (A2, Semantics::Brave, true),
    ];
    for (abox, sem, want) in cases {
        let k = kb(abox);
        assert_eq!(
            repair::entails(&k, &d(), sem).unwrap().holds,
            want,
            "{abox} {sem}"
        );
        assert_eq!(o.entails(&k, &d(), sem).unwrap(), want, "{abox} {sem}");
    }
}

#[test]
fn confinement_examples() {
    let o = Oracle::default();
    let k = kb(A2);
    let h = set("(abox (inst D a))");
    assert!(repair::is_conflict_confining(&k, &h).unwrap());
    assert!(o.is_conflict_confining(&k, &h).unwrap());

    let k = parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst C a))")
        .unwrap();
    let h = set("(abox (inst B a))");
    let t = normalize(&k.tbox, k.dialect);
    let c = confinement(&t, &k.abox, &h).unwrap();
    assert!(!c.conf_equal);
    assert_eq!(c.new_conflict, Some(set("(abox (inst A a) (inst B a))")));
    assert!(!o.is_conflict_confining(&k, &h).unwrap());
}

#[test]
fn problem_validation() {
    assert!(make_problem(kb(A2), d(), Semantics::Ar).is_ok());
    assert!(make_problem(kb(A1), d(), Semantics::Ar).is_err());
}

#[test]
fn hypotheses_over_a2() {
    let o = Oracle::default();
    let k = kb(A2);
    let p = make_problem(k.clone(), d(), Semantics::Ar).unwrap();
    for h in ["(abox (inst E a))", "(abox (inst D a))"] {
        assert!(p.is_hypothesis(&set(h)).unwrap());
        assert!(o.is_hypothesis(&k, &d(), Semantics::Ar, &set(h)).unwrap());
    }
    let e = p.exists_hypothesis().unwrap();
    assert_eq!(e.witness, Some(set("(abox (inst D a))")));
}

#[test]
fn ar_existence_fails_when_negation_is_brave() {
    let k = parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst B a))")
        .unwrap();
    let q = Biq::atomic("B", "a");
    let p = make_problem(k.clone(), q.clone(), Semantics::Ar).unwrap();
    assert!(!p.exists_hypothesis().unwrap().exists);
    assert!(!Oracle::default()
        .is_hypothesis(&k, &q, Semantics::Ar, &set("(abox (inst B a))"))
        .unwrap());
    let p = make_problem(k, Biq::atomic("B", "b"), Semantics::Ar).unwrap();
    assert!(p.exists_hypothesis().unwrap().exists);
}

#[test]
fn brave_existence_is_alpha() {
    let k = parse_kb(
        "(dialect dllite-core)(tbox (sub A (not B)) (sub C D))(abox (inst A a) (inst B a))",
    )
    .unwrap();
    let p = make_problem(k, d(), Semantics::Brave).unwrap();
    assert_eq!(
        p.exists_hypothesis().unwrap().witness,
        Some(set("(abox (inst D a))"))
    );
}

#[test]
fn non_convexity_verdicts() {
    let o = Oracle::default();
    let k = base();
    let p = make_problem(k.clone(), d(), Semantics::Ar).unwrap();
    let subset = MinimalityCriterion::new(MinimalityKind::Subset);
    let want = [(A1, true, false), (A2, false, false), (A3, true, false)];
    for (h, is_h, minimal) in want {
        let h = set(h);
        let v = p.verify(&h, subset, None).unwrap();
        assert_eq!(
            (v.is_hypothesis, v.is_hypothesis && v.minimal["subset"]),
            (is_h, minimal)
        );
        assert_eq!(
            o.verify_subset(&k, &d(), Semantics::Ar, &h).unwrap(),
            (is_h, minimal)
        );
    }
    let v = p.verify(&set(A1), subset, None).unwrap();
    assert_eq!(
        v.counterexample,
        Some(set("(abox (inst B1 a) (inst C1 a))"))
    );
}

#[test]
fn cardinality_minimal_over_a3_and_alpha() {
    let o = Oracle::default();
    let k = base();
    let mut items: Vec<_> = set(A3).into_iter().collect();
    items.push(abduce_core::Assertion::concept("D", "a"));
    let space = CandidateSpace::from_assertions(items, None);
    let crit = MinimalityCriterion::new(MinimalityKind::Cardinality);
    let want = sets(&["(abox (inst D a))", "(abox (inst E a))"]);
    assert_eq!(
        o.minimal_hypotheses(&k, &d(), Semantics::Ar, &space, crit)
            .unwrap(),
        want
    );
    let p = make_problem(k, d(), Semantics::Ar).unwrap();
    let found: Vec<AssertionSet> = p
        .enumerate_hypotheses(&space)
        .unwrap()
        .map(Result::unwrap)
        .filter(|(_, v)| v.minimal["cardinality"])
        .map(|(h, _)| h)
        .collect();
    assert_eq!(found, want);
}

#[test]
fn bounded_enumeration_over_a3() {
    let p = make_problem(base(), d(), Semantics::Ar).unwrap();
    let space = CandidateSpace::from_assertions(set(A3), Some(2));
    let found: Vec<AssertionSet> = p
        .enumerate_hypotheses(&space)
        .unwrap()
        .map(|r| r.unwrap().0)
        .collect();
    for h in [
        "(abox (inst B1 a) (inst C1 a))",
        "(abox (inst B2 a) (inst C1 a))",
        "(abox (inst E a))",
    ] {
        assert!(found.contains(&set(h)), "{h}");
    }
    assert!(found.iter().all(|h| h.len() <= 2));
}
