//! Definition-level brute force over subsets, used as ground truth.
//!
//! The only thing shared with the engines is the classical consistency
//! check. Classical entailment is reduced to it with a fresh name, and
//! consistency itself is cross-checked by [`model_search_consistent`] on
//! KBs without existentials.

use std::collections::BTreeSet;

use crate::abduction::{CandidateSpace, MinimalityCriterion, MinimalityKind};
use crate::error::{Error, Result};
use crate::model::{
    Assertion, AssertionSet, Axiom, Biq, Concept, Dialect, KnowledgeBase, RoleExpr,
};
use crate::reasoner::NormalizedTBox;
use crate::repair::{fresh_concept_name, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_abox: usize,
    pub max_candidates: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_abox: 12,
            max_candidates: 16,
        }
    }
}

#[derive(Default)]
pub struct Oracle {
    pub budget: OracleBudget,
}

fn pick(items: &[Assertion], mask: u64) -> AssertionSet {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, x)| x.clone())
        .collect()
}

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, x)| x.clone())
            .collect()
    })
}

impl Oracle {
    pub fn new(budget: OracleBudget) -> Self {
        Oracle { budget }
    }

    fn check_abox(&self, n: usize) -> Result<()> {
        if n > self.budget.max_abox {
            return Err(Error::Budget {
                what: "oracle ABox size",
                needed: n as u128,
                cap: self.budget.max_abox as u128,
            });
        }
        Ok(())
    }

    fn check_candidates(&self, n: usize) -> Result<()> {
        if n > self.budget.max_candidates {
            return Err(Error::Budget {
                what: "oracle candidate space",
                needed: n as u128,
                cap: self.budget.max_candidates as u128,
            });
        }
        Ok(())
    }

    /// The ABox items and, per subset mask, whether it is consistent.
    fn lattice(&self, kb: &KnowledgeBase) -> Result<(Vec<Assertion>, Vec<bool>)> {
        let items: Vec<Assertion> = kb.abox.iter().cloned().collect();
        self.check_abox(items.len())?;
        let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
        if !t.is_consistent(std::iter::empty()) {
            return Err(Error::IncoherentTbox);
        }
        let consistent = (0u64..1 << items.len())
            .map(|m| t.is_consistent(&pick(&items, m)))
            .collect();
        Ok((items, consistent))
    }

    /// Consistent subsets with no consistent one-element extension.
    pub fn repairs(&self, kb: &KnowledgeBase) -> Result<Vec<AssertionSet>> {
        let (items, cons) = self.lattice(kb)?;
        let n = items.len();
        let mut out: Vec<AssertionSet> = (0usize..1 << n)
            .filter(|&m| cons[m] && (0..n).all(|i| m >> i & 1 == 1 || !cons[m | 1 << i]))
            .map(|m| pick(&items, m as u64))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Inconsistent subsets whose one-element removals are all consistent.
    pub fn conflicts(&self, kb: &KnowledgeBase) -> Result<Vec<AssertionSet>> {
        let (items, cons) = self.lattice(kb)?;
        let n = items.len();
        let mut out: Vec<AssertionSet> = (0usize..1 << n)
            .filter(|&m| !cons[m] && (0..n).all(|i| m >> i & 1 == 0 || cons[m & !(1 << i)]))
            .map(|m| pick(&items, m as u64))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `⟨T, S⟩ ⊨ A(a)` for consistent `S`, via inconsistency of
    /// `S ∪ {A′(a)}` with a fresh `A′` disjoint from `A`.
    fn classically_entails(&self, kb: &KnowledgeBase, s: &AssertionSet, q: &Biq) -> Result<bool> {
        let Some(name) = q.concept.as_name() else {
            return Err(Error::NonAtomicObservation);
        };
        let fresh = fresh_concept_name(kb, &format!("{name}_dis"));
        let mut tbox = kb.tbox.clone();
        tbox.push(if kb.dialect.is_dllite() {
            Axiom::sub(
                Concept::name(name),
                Concept::not(Concept::name(fresh.clone())),
            )
        } else {
            Axiom::sub(
                Concept::and([Concept::name(name), Concept::name(fresh.clone())]),
                Concept::Bot,
            )
        });
        let t = NormalizedTBox::new(&tbox, kb.dialect);
        let probe = Assertion::concept(fresh, q.individual.clone());
        Ok(!t.is_consistent(s.iter().chain([&probe])))
    }

    pub fn entails(&self, kb: &KnowledgeBase, q: &Biq, sem: Semantics) -> Result<bool> {
        match sem {
            Semantics::Classical => {
                let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
                if !t.is_consistent(&kb.abox) {
                    return Ok(true);
                }
                self.classically_entails(kb, &kb.abox, q)
            }
            Semantics::Brave => {
                for r in self.repairs(kb)? {
                    if self.classically_entails(kb, &r, q)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Semantics::Ar => {
                for r in self.repairs(kb)? {
                    if !self.classically_entails(kb, &r, q)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    fn extend(kb: &KnowledgeBase, h: &AssertionSet) -> KnowledgeBase {
        let mut abox = kb.abox.clone();
        abox.extend(h.iter().cloned());
        kb.with_abox(abox)
    }

    pub fn is_hypothesis(
        &self,
        kb: &KnowledgeBase,
        q: &Biq,
        sem: Semantics,
        h: &AssertionSet,
    ) -> Result<bool> {
        self.entails(&Self::extend(kb, h), q, sem)
    }

    pub fn is_conflict_confining(&self, kb: &KnowledgeBase, h: &AssertionSet) -> Result<bool> {
        Ok(self.conflicts(&Self::extend(kb, h))? == self.conflicts(kb)?)
    }

    /// `⟨T, R ∪ H⟩` consistent for every repair `R`.
    pub fn is_repair_compatible(&self, kb: &KnowledgeBase, h: &AssertionSet) -> Result<bool> {
        let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
        Ok(self
            .repairs(kb)?
            .iter()
            .all(|r| t.is_consistent(r.iter().chain(h))))
    }

    /// `(is_hypothesis, subset_minimal)` with minimality checked over all
    /// proper subsets of `H`.
    pub fn verify_subset(
        &self,
        kb: &KnowledgeBase,
        q: &Biq,
        sem: Semantics,
        h: &AssertionSet,
    ) -> Result<(bool, bool)> {
        let items: Vec<Assertion> = h.iter().cloned().collect();
        self.check_candidates(items.len())?;
        if !self.is_hypothesis(kb, q, sem, h)? {
            return Ok((false, false));
        }
        for s in subsets(&items) {
            if s.len() < items.len() && self.is_hypothesis(kb, q, sem, &s.into_iter().collect())? {
                return Ok((true, false));
            }
        }
        Ok((true, true))
    }

    /// Every `H ⊆ space` that is a hypothesis and minimal under `crit`, with
    /// competitors ranging over all subsets of the space. The size bound of
    /// the space is ignored.
    pub fn minimal_hypotheses(
        &self,
        kb: &KnowledgeBase,
        q: &Biq,
        sem: Semantics,
        space: &CandidateSpace,
        crit: MinimalityCriterion,
    ) -> Result<Vec<AssertionSet>> {
        self.check_candidates(space.assertions.len())?;
        self.check_abox(kb.abox.len() + space.assertions.len())?;
        let base_conf = self.conflicts(kb)?;
        let mut hyps: Vec<(AssertionSet, Vec<AssertionSet>)> = Vec::new();
        for s in subsets(&space.assertions) {
            let h: AssertionSet = s.into_iter().collect();
            if !self.is_hypothesis(kb, q, sem, &h)? {
                continue;
            }
            let conf = self.conflicts(&Self::extend(kb, &h))?;
            if crit.require_conflict_confining && conf != base_conf {
                continue;
            }
            hyps.push((h, conf));
        }
        let beaten = |h: &AssertionSet, conf: &Vec<AssertionSet>| {
            hyps.iter().any(|(o, oc)| match crit.kind {
                MinimalityKind::None => false,
                MinimalityKind::Subset => o.len() < h.len() && o.is_subset(h),
                MinimalityKind::Cardinality => o.len() < h.len(),
                MinimalityKind::ConflictSubset => {
                    oc.len() < conf.len() && oc.iter().all(|c| conf.contains(c))
                }
                MinimalityKind::ConflictCardinality => oc.len() < conf.len(),
            })
        };
        let mut out: Vec<AssertionSet> = hyps
            .iter()
            .filter(|(h, c)| !beaten(h, c))
            .map(|(h, _)| h.clone())
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Consistency by exhaustive search over per-element types.
///
/// Only for KBs whose TBox has no existentials and no role inclusions: then
/// axioms constrain each element separately, role assertions are
/// irrelevant, and a model exists iff every individual (and, for the
/// non-empty domain, at least one element) has a type satisfying all axioms.
/// Returns `None` outside that fragment or beyond `max_names` names.
pub fn model_search_consistent(kb: &KnowledgeBase, max_names: usize) -> Option<bool> {
    let mut names = BTreeSet::new();
    for ax in &kb.tbox {
        match ax {
            Axiom::ConceptInclusion(l, r) => {
                if has_exists(l) || has_exists(r) {
                    return None;
                }
                collect(l, &mut names);
                collect(r, &mut names);
            }
            Axiom::RoleInclusion(..) => return None,
        }
    }
    for a in &kb.abox {
        if let Assertion::Concept { concept, .. } = a {
            names.insert(concept.clone());
        }
    }
    if names.len() > max_names {
        return None;
    }
    let names: Vec<String> = names.into_iter().collect();
    let satisfies = |mask: u64| {
        let has = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .is_some_and(|i| mask >> i & 1 == 1)
        };
        kb.tbox.iter().all(|ax| match ax {
            Axiom::ConceptInclusion(l, r) => !eval(l, &has) || eval(r, &has),
            Axiom::RoleInclusion(..) => unreachable!(),
        })
    };
    let types: Vec<u64> = (0u64..1 << names.len()).filter(|&m| satisfies(m)).collect();
    if types.is_empty() {
        return Some(false);
    }
    let mut individuals: BTreeSet<&str> = BTreeSet::new();
    for a in &kb.abox {
        individuals.extend(a.individuals());
    }
    Some(individuals.into_iter().all(|ind| {
        let told: u64 = kb
            .abox
            .iter()
            .filter_map(|a| match a {
                Assertion::Concept {
                    concept,
                    individual,
                } if individual == ind => names.iter().position(|x| x == concept),
                _ => None,
            })
            .fold(0, |m, i| m | 1 << i);
        types.iter().any(|&t| t & told == told)
    }))
}

fn has_exists(c: &Concept) -> bool {
    match c {
        Concept::Exists(..) => true,
        Concept::And(parts) => parts.iter().any(has_exists),
        Concept::Not(inner) => has_exists(inner),
        _ => false,
    }
}

fn collect(c: &Concept, out: &mut BTreeSet<String>) {
    match c {
        Concept::Name(n) => {
            out.insert(n.clone());
        }
        Concept::And(parts) => parts.iter().for_each(|p| collect(p, out)),
        Concept::Not(inner) => collect(inner, out),
        _ => {}
    }
}

fn eval(c: &Concept, has: &impl Fn(&str) -> bool) -> bool {
    match c {
        Concept::Top => true,
        Concept::Bot => false,
        Concept::Name(n) => has(n),
        Concept::And(parts) => parts.iter().all(|p| eval(p, has)),
        Concept::Not(inner) => !eval(inner, has),
        Concept::Exists(..) => unreachable!("filtered out"),
    }
}

/// EL⊥ rendering of a DL-Lite KB without inverse roles and role
/// inclusions: `∃r` becomes `∃r.⊤` and `B1 ⊑ ¬B2` becomes `B1 ⊓ B2 ⊑ ⊥`.
pub fn translate_lite_to_el(kb: &KnowledgeBase) -> Option<KnowledgeBase> {
    if !kb.dialect.is_dllite() {
        return None;
    }
    let plain = |c: &Concept| match c {
        Concept::Exists(r, _) if r.inverse => None,
        Concept::Exists(r, _) => Some(Concept::exists(RoleExpr::named(r.name.clone()))),
        other => Some(other.clone()),
    };
    let mut tbox = Vec::new();
    for ax in &kb.tbox {
        match ax {
            Axiom::ConceptInclusion(l, Concept::Not(r)) => tbox.push(Axiom::sub(
                Concept::and([plain(l)?, plain(r)?]),
                Concept::Bot,
            )),
            Axiom::ConceptInclusion(l, r) => tbox.push(Axiom::sub(plain(l)?, plain(r)?)),
            Axiom::RoleInclusion(..) => return None,
        }
    }
    KnowledgeBase::new(Dialect::ElBot, tbox, kb.abox.iter().cloned()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_abox, parse_kb};

    const T: &str = "(tbox (sub (and B1 B2) Bot) (sub (and C1 C2) Bot) (sub (and B1 C1) D) (sub (and B2 C1) D) (sub E D))";

    #[test]
    fn nonconvex_repairs_and_entailment() {
        let o = Oracle::default();
        let a1 = parse_kb(&format!(
            "(dialect elbot){T}(abox (inst B1 a) (inst B2 a) (inst C1 a))"
        ))
        .unwrap();
        let a2 = parse_kb(&format!(
            "(dialect elbot){T}(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a))"
        ))
        .unwrap();
        assert_eq!(o.repairs(&a1).unwrap().len(), 2);
        assert_eq!(o.repairs(&a2).unwrap().len(), 4);
        assert_eq!(o.conflicts(&a2).unwrap().len(), 2);
        let q = Biq::atomic("D", "a");
        assert!(o.entails(&a1, &q, Semantics::Ar).unwrap());
        assert!(!o.entails(&a2, &q, Semantics::Ar).unwrap());
        assert!(o.entails(&a2, &q, Semantics::Brave).unwrap());
    }

    #[test]
    fn two_singleton_repairs() {
        let kb =
            parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst B a))")
                .unwrap();
        let r = Oracle::default().repairs(&kb).unwrap();
        assert_eq!(
            r,
            vec![
                parse_abox("(abox (inst A a))").unwrap(),
                parse_abox("(abox (inst B a))").unwrap()
            ]
        );
    }

    #[test]
    fn budget_enforced() {
        let o = Oracle::new(OracleBudget {
            max_abox: 1,
            max_candidates: 1,
        });
        let kb = parse_kb("(dialect elbot)(tbox)(abox (inst A a) (inst B a))").unwrap();
        assert!(matches!(o.repairs(&kb), Err(Error::Budget { .. })));
    }

    #[test]
    fn model_search_matches_reasoner() {
        let kb = parse_kb(&format!("(dialect elbot){T}(abox (inst B1 a) (inst B2 a))")).unwrap();
        assert_eq!(model_search_consistent(&kb, 8), Some(false));
        let kb = parse_kb(&format!("(dialect elbot){T}(abox (inst B1 a) (inst B2 b))")).unwrap();
        assert_eq!(model_search_consistent(&kb, 8), Some(true));
        let kb = parse_kb("(dialect elbot)(tbox (sub A (some r B)))(abox)").unwrap();
        assert_eq!(model_search_consistent(&kb, 8), None);
    }

    #[test]
    fn translation_keeps_consistency() {
        let kb = parse_kb("(dialect dllite-core)(tbox (sub A (some r)) (sub (some r) (not B)))(abox (inst A a) (inst B a))").unwrap();
        let el = translate_lite_to_el(&kb).unwrap();
        let t1 = NormalizedTBox::new(&kb.tbox, kb.dialect);
        let t2 = NormalizedTBox::new(&el.tbox, el.dialect);
        assert!(!t1.is_consistent(&kb.abox));
        assert!(!t2.is_consistent(&el.abox));
    }
}
