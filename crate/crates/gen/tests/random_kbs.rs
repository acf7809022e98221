use abduce_core::format::{parse_kb, serialize_kb};
use abduce_core::reasoner::is_consistent;
use abduce_core::Dialect;
use abduce_gen::{gen_random_kb, gen_random_kb_with, RandomParams, Requirement};

/// Inconsistent KBs among seeds 1..=100 with default parameters, measured
/// once and pinned.
const INCONSISTENT_DEFAULT_SWEEP: usize = 56;

#[test]
fn default_sweep_inconsistency_count() {
    let p = RandomParams::default();
    let n = (1..=100)
        .filter(|&s| !is_consistent(&gen_random_kb(&p, s).unwrap()))
        .count();
    assert!(n >= 30, "only {n} inconsistent KBs");
    assert_eq!(n, INCONSISTENT_DEFAULT_SWEEP);
}

#[test]
fn seed_one_is_pinned() {
    let kb = gen_random_kb(&RandomParams::default(), 1).unwrap();
    assert_eq!(
        serialize_kb(&kb),
        "(dialect elbot)(tbox (sub A2 A2) (sub (and A5 A4) Bot) (sub A5 A4) (sub A2 (some r1 A3)) (sub (and A1 A4) A5))\
         (abox (inst A1 a1) (inst A2 a1) (inst A4 a1) (rel r1 a1 a1) (rel r1 a1 a2) (rel r1 a2 a1))"
    );
}

#[test]
fn output_round_trips_and_respects_dialect() {
    for dialect in [Dialect::ElBot, Dialect::DlLiteCore, Dialect::DlLiteR] {
        let p = RandomParams {
            dialect,
            n_roles: 2,
            ..RandomParams::default()
        };
        for seed in 0..50 {
            let kb = gen_random_kb_with(&p, seed, Requirement::Inconsistent).unwrap();
            assert_eq!(kb.dialect, dialect);
            assert_eq!(parse_kb(&serialize_kb(&kb)).unwrap(), kb);
            assert!(!is_consistent(&kb));
        }
    }
}
