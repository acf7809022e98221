//! Conflicts, repairs and inconsistency-tolerant entailment.
//!
//! A [`RepairEngine`] fixes a normalized TBox and an ABox and computes the
//! conflict hypergraph once. Every other question (consistency of subsets,
//! repairs, brave and AR entailment) is answered against that hypergraph:
//! a subset of the ABox is consistent iff it contains no conflict.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{check_query, Assertion, AssertionSet, Axiom, Biq, Concept, KnowledgeBase};
use crate::reasoner::NormalizedTBox;

pub const DEFAULT_MAX_REPAIRS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    Classical,
    Brave,
    Ar,
}

impl Semantics {
    pub fn tag(self) -> &'static str {
        match self {
            Semantics::Classical => "classical",
            Semantics::Brave => "brave",
            Semantics::Ar => "ar",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Semantics> {
        match tag {
            "classical" => Some(Semantics::Classical),
            "brave" => Some(Semantics::Brave),
            "ar" => Some(Semantics::Ar),
            _ => None,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How AR entailment is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArStrategy {
    /// Search for a repair that does not entail the query.
    #[default]
    Counterexample,
    /// Enumerate every repair (bounded by the repair cap).
    Enumerate,
}

/// Answer of [`RepairEngine::entails`].
///
/// The witness is a repair: one entailing the query for brave, one not
/// entailing it for a failed AR check. Otherwise `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailResult {
    pub holds: bool,
    pub witness: Option<AssertionSet>,
}

pub struct RepairEngine<'t> {
    tbox: &'t NormalizedTBox,
    abox: Vec<Assertion>,
    /// Sorted index lists, canonically ordered.
    conflicts: Vec<Vec<usize>>,
    /// Conflicts containing each assertion.
    by_member: Vec<Vec<usize>>,
    max_repairs: usize,
}

impl<'t> RepairEngine<'t> {
    pub fn new(tbox: &'t NormalizedTBox, abox: &AssertionSet) -> Result<Self> {
        if !tbox.is_coherent() {
            return Err(Error::IncoherentTbox);
        }
        let abox: Vec<Assertion> = abox.iter().cloned().collect();
        let mut conflicts = if tbox.dialect().is_dllite() {
            lite_conflicts(tbox, &abox)
        } else {
            el_conflicts(tbox, &abox)
        };
        conflicts.sort();
        let mut by_member = vec![Vec::new(); abox.len()];
        for (ci, c) in conflicts.iter().enumerate() {
            for &x in c {
                by_member[x].push(ci);
            }
        }
        Ok(RepairEngine {
            tbox,
            abox,
            conflicts,
            by_member,
            max_repairs: DEFAULT_MAX_REPAIRS,
        })
    }

    pub fn with_max_repairs(mut self, cap: usize) -> Self {
        self.max_repairs = cap;
        self
    }

    pub fn tbox(&self) -> &NormalizedTBox {
        self.tbox
    }

    pub fn abox(&self) -> &[Assertion] {
        &self.abox
    }

    pub fn is_consistent(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn conflicts(&self) -> Vec<AssertionSet> {
        self.conflicts.iter().map(|c| self.to_set(c)).collect()
    }

    /// Assertions occurring in at least one conflict.
    pub fn conflicting(&self) -> AssertionSet {
        self.by_member
            .iter()
            .enumerate()
            .filter(|(_, cs)| !cs.is_empty())
            .map(|(i, _)| self.abox[i].clone())
            .collect()
    }

    /// All repairs, as complements of the minimal hitting sets of the
    /// conflicts, canonically sorted.
    pub fn repairs(&self) -> Result<Vec<AssertionSet>> {
        let edges: Vec<BTreeSet<usize>> = self
            .conflicts
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        let hitting = minimal_hitting_sets(&edges, self.max_repairs)?;
        let mut out: Vec<AssertionSet> = hitting
            .iter()
            .map(|h| {
                (0..self.abox.len())
                    .filter(|i| !h.contains(i))
                    .map(|i| self.abox[i].clone())
                    .collect()
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Consistency of an arbitrary subset of the ABox, decided on the
    /// conflict hypergraph.
    pub fn is_consistent_subset(&self, subset: &AssertionSet) -> bool {
        let idx: HashSet<usize> = self.indices(subset);
        !self
            .conflicts
            .iter()
            .any(|c| c.iter().all(|x| idx.contains(x)))
    }

    pub fn entails(&self, q: &Biq, sem: Semantics) -> Result<EntailResult> {
        self.entails_with(q, sem, ArStrategy::default())
    }

    pub fn entails_with(
        &self,
        q: &Biq,
        sem: Semantics,
        strategy: ArStrategy,
    ) -> Result<EntailResult> {
        check_query(self.tbox.dialect(), q)?;
        match sem {
            Semantics::Classical => {
                let e = self.tbox.entails(&self.abox, q)?;
                Ok(EntailResult {
                    holds: e.holds,
                    witness: None,
                })
            }
            _ if !q.is_atomic() => Err(Error::NonAtomicObservation),
            Semantics::Brave => Ok(self.brave(q)),
            Semantics::Ar => match strategy {
                ArStrategy::Counterexample => Ok(self.ar_search(q)),
                ArStrategy::Enumerate => self.ar_enumerate(q),
            },
        }
    }

    fn to_set(&self, idx: &[usize]) -> AssertionSet {
        idx.iter().map(|&i| self.abox[i].clone()).collect()
    }

    fn indices(&self, subset: &AssertionSet) -> HashSet<usize> {
        self.abox
            .iter()
            .enumerate()
            .filter(|(_, a)| subset.contains(a))
            .map(|(i, _)| i)
            .collect()
    }

    fn relaxed(&self, chosen: &[bool], q: &Biq) -> bool {
        let sel = self
            .abox
            .iter()
            .zip(chosen)
            .filter(|(_, &c)| c)
            .map(|(a, _)| a);
        self.tbox.entails_relaxed(sel, q)
    }

    /// Would adding `x` to `chosen` complete a conflict?
    fn closes_conflict(&self, chosen: &[bool], x: usize) -> bool {
        self.by_member[x]
            .iter()
            .any(|&ci| self.conflicts[ci].iter().all(|&y| y == x || chosen[y]))
    }

    /// Greedy extension of a consistent set to a repair, in index order.
    fn extend_to_repair(&self, chosen: &mut [bool]) {
        for x in 0..self.abox.len() {
            if !chosen[x] && !self.closes_conflict(chosen, x) {
                chosen[x] = true;
            }
        }
    }

    fn witness_of(&self, chosen: &[bool]) -> AssertionSet {
        chosen
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| self.abox[i].clone())
            .collect()
    }

    /// Brave: search for a consistent support, include-first, pruning
    /// branches whose optimistic completion cannot entail the query.
    fn brave(&self, q: &Biq) -> EntailResult {
        let n = self.abox.len();
        let candidates: Vec<usize> = (0..n)
            .filter(|&i| {
                !self.by_member[i]
                    .iter()
                    .any(|&ci| self.conflicts[ci].len() == 1)
            })
            .collect();
        let mut chosen = vec![false; n];
        let found = if self.tbox.dialect().is_dllite() {
            // Minimal supports are single assertions.
            candidates
                .iter()
                .find(|&&i| self.tbox.entails_relaxed([&self.abox[i]], q))
                .map(|&i| {
                    chosen[i] = true;
                })
        } else {
            let mut optimistic = vec![false; n];
            for &i in &candidates {
                optimistic[i] = true;
            }
            self.brave_dfs(q, &candidates, 0, &mut chosen, &mut optimistic)
                .then_some(())
        };
        match found {
            Some(()) => {
                self.extend_to_repair(&mut chosen);
                EntailResult {
                    holds: true,
                    witness: Some(self.witness_of(&chosen)),
                }
            }
            None => EntailResult {
                holds: false,
                witness: None,
            },
        }
    }

    /// `optimistic` is `chosen` plus every undecided candidate.
    fn brave_dfs(
        &self,
        q: &Biq,
        cand: &[usize],
        pos: usize,
        chosen: &mut [bool],
        optimistic: &mut [bool],
    ) -> bool {
        if !self.relaxed(optimistic, q) {
            return false;
        }
        if self.relaxed(chosen, q) {
            return true;
        }
        if pos == cand.len() {
            return false;
        }
        let x = cand[pos];
        if !self.closes_conflict(chosen, x) {
            chosen[x] = true;
            if self.brave_dfs(q, cand, pos + 1, chosen, optimistic) {
                return true;
            }
            chosen[x] = false;
        }
        optimistic[x] = false;
        let res = self.brave_dfs(q, cand, pos + 1, chosen, optimistic);
        optimistic[x] = true;
        res
    }

    /// AR: search for a repair not entailing the query. Assertions outside
    /// every conflict belong to all repairs and are fixed up front.
    fn ar_search(&self, q: &Biq) -> EntailResult {
        let n = self.abox.len();
        let mut chosen: Vec<bool> = self.by_member.iter().map(|cs| cs.is_empty()).collect();
        let involved: Vec<usize> = (0..n).filter(|&i| !chosen[i]).collect();
        let mut excluded = vec![false; n];
        if self.ar_dfs(q, &involved, 0, &mut chosen, &mut excluded) {
            EntailResult {
                holds: false,
                witness: Some(self.witness_of(&chosen)),
            }
        } else {
            EntailResult {
                holds: true,
                witness: None,
            }
        }
    }

    fn ar_dfs(
        &self,
        q: &Biq,
        inv: &[usize],
        pos: usize,
        chosen: &mut [bool],
        excluded: &mut [bool],
    ) -> bool {
        if self.relaxed(chosen, q) {
            return false;
        }
        if pos == inv.len() {
            return self.is_maximal(chosen, excluded);
        }
        let x = inv[pos];
        if !self.closes_conflict(chosen, x) {
            chosen[x] = true;
            if self.ar_dfs(q, inv, pos + 1, chosen, excluded) {
                return true;
            }
            chosen[x] = false;
        }
        // Excluding x is only maximal if some conflict through x can still
        // be completed by included assertions. Checked again at the end.
        let can_justify = |chosen: &[bool], excluded: &[bool]| {
            self.by_member[x].iter().any(|&ci| {
                self.conflicts[ci]
                    .iter()
                    .all(|&y| y == x || chosen[y] || !excluded[y] && y > x)
            })
        };
        if !can_justify(chosen, excluded) {
            return false;
        }
        excluded[x] = true;
        let res = self.ar_dfs(q, inv, pos + 1, chosen, excluded);
        if !res {
            excluded[x] = false;
        }
        res
    }

    fn is_maximal(&self, chosen: &[bool], excluded: &[bool]) -> bool {
        (0..self.abox.len())
            .filter(|&x| excluded[x])
            .all(|x| self.closes_conflict(chosen, x))
    }

    fn ar_enumerate(&self, q: &Biq) -> Result<EntailResult> {
        for r in self.repairs()? {
            if !self.tbox.entails_relaxed(&r, q) {
                return Ok(EntailResult {
                    holds: false,
                    witness: Some(r),
                });
            }
        }
        Ok(EntailResult {
            holds: true,
            witness: None,
        })
    }
}

/// DL-Lite conflicts have at most two members, and two assertions can only
/// clash when they share an individual.
fn lite_conflicts(tbox: &NormalizedTBox, abox: &[Assertion]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let single_ok: Vec<bool> = abox.iter().map(|a| tbox.is_consistent([a])).collect();
    for (i, ok) in single_ok.iter().enumerate() {
        if !ok {
            out.push(vec![i]);
        }
    }
    let mut by_ind: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, a) in abox.iter().enumerate() {
        if !single_ok[i] {
            continue;
        }
        let inds: BTreeSet<&str> = a.individuals().collect();
        for ind in inds {
            by_ind.entry(ind).or_default().push(i);
        }
    }
    let mut pairs = BTreeSet::new();
    for members in by_ind.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (i, j) = (i.min(j), i.max(j));
                if !pairs.contains(&(i, j)) && !tbox.is_consistent([&abox[i], &abox[j]]) {
                    pairs.insert((i, j));
                }
            }
        }
    }
    out.extend(pairs.into_iter().map(|(i, j)| vec![i, j]));
    out
}

/// EL⊥ conflicts by a hitting-set tree: each node removes a set of
/// assertions; its label is a conflict disjoint from that set (reused when
/// already known, otherwise extracted by deletion), and children remove
/// one more element of the label.
fn el_conflicts(tbox: &NormalizedTBox, abox: &[Assertion]) -> Vec<Vec<usize>> {
    let n = abox.len();
    let consistent = |keep: &[bool]| {
        tbox.is_consistent(abox.iter().zip(keep).filter(|(_, &k)| k).map(|(a, _)| a))
    };
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut closed: Vec<Vec<usize>> = Vec::new();
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    visited.insert(Vec::new());
    while let Some(removed) = stack.pop() {
        let label = match found
            .iter()
            .find(|c| c.iter().all(|x| removed.binary_search(x).is_err()))
        {
            Some(c) => c.clone(),
            None => {
                if closed
                    .iter()
                    .any(|cl| cl.iter().all(|x| removed.binary_search(x).is_ok()))
                {
                    continue;
                }
                let mut keep = vec![true; n];
                for &x in &removed {
                    keep[x] = false;
                }
                if consistent(&keep) {
                    closed.push(removed);
                    continue;
                }
                for x in 0..n {
                    if keep[x] {
                        keep[x] = false;
                        if consistent(&keep) {
                            keep[x] = true;
                        }
                    }
                }
                let c: Vec<usize> = (0..n).filter(|&x| keep[x]).collect();
                found.push(c.clone());
                c
            }
        };
        for &x in &label {
            let mut child = removed.clone();
            let pos = child.binary_search(&x).unwrap_err();
            child.insert(pos, x);
            if visited.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    found
}

/// All subset-minimal hitting sets of `edges` (Berge's algorithm). Fails
/// with [`Error::RepairOverflow`] as soon as an intermediate family exceeds
/// `cap`.
pub fn minimal_hitting_sets<T: Ord + Clone>(
    edges: &[BTreeSet<T>],
    cap: usize,
) -> Result<Vec<BTreeSet<T>>> {
    let mut family: Vec<BTreeSet<T>> = vec![BTreeSet::new()];
    for edge in edges {
        let (kept, missed): (Vec<_>, Vec<_>) =
            family.into_iter().partition(|h| !h.is_disjoint(edge));
        let mut extended: BTreeSet<BTreeSet<T>> = BTreeSet::new();
        for h in &missed {
            for x in edge {
                let mut e = h.clone();
                e.insert(x.clone());
                if !kept.iter().any(|k| k.is_subset(&e)) {
                    extended.insert(e);
                }
            }
        }
        family = kept;
        family.extend(extended);
        if family.len() > cap {
            return Err(Error::RepairOverflow { cap });
        }
    }
    family.sort();
    Ok(family)
}

pub fn conflicts(kb: &KnowledgeBase) -> Result<Vec<AssertionSet>> {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    Ok(RepairEngine::new(&t, &kb.abox)?.conflicts())
}

pub fn repairs(kb: &KnowledgeBase, max_repairs: usize) -> Result<Vec<AssertionSet>> {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    RepairEngine::new(&t, &kb.abox)?
        .with_max_repairs(max_repairs)
        .repairs()
}

pub fn entails(kb: &KnowledgeBase, q: &Biq, sem: Semantics) -> Result<EntailResult> {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    RepairEngine::new(&t, &kb.abox)?.entails(q, sem)
}

/// `Conf(⟨T, A ∪ H⟩) = Conf(⟨T, A⟩)`.
pub fn is_conflict_confining(kb: &KnowledgeBase, h: &AssertionSet) -> Result<bool> {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    confinement(&t, &kb.abox, h).map(|c| c.conf_equal)
}

/// `⟨T, R ∪ H⟩` is consistent for every repair `R` of `K`.
///
/// Some repair `R` has `R ∪ H` inconsistent iff some conflict of
/// `⟨T, A ∪ H⟩` meets `H`. This coincides with conflict-confinement when
/// `H ∩ A = ∅` and is strictly stronger otherwise.
pub fn is_repair_compatible(kb: &KnowledgeBase, h: &AssertionSet) -> Result<bool> {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    confinement(&t, &kb.abox, h).map(|c| c.repair_compatible)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confinement {
    pub conf_equal: bool,
    pub repair_compatible: bool,
    /// A conflict of `⟨T, A ∪ H⟩` that is not a conflict of `K`, if any.
    pub new_conflict: Option<AssertionSet>,
}

/// Both confinement tests at once, from the conflicts of `A ∪ H`.
pub fn confinement(
    tbox: &NormalizedTBox,
    abox: &AssertionSet,
    h: &AssertionSet,
) -> Result<Confinement> {
    let mut union = abox.clone();
    union.extend(h.iter().cloned());
    let engine = RepairEngine::new(tbox, &union)?;
    let mut new_conflict = None;
    let mut repair_compatible = true;
    for c in engine.conflicts() {
        if c.iter().any(|a| h.contains(a)) {
            repair_compatible = false;
        }
        if new_conflict.is_none() && c.iter().any(|a| !abox.contains(a)) {
            new_conflict = Some(c);
        }
    }
    Ok(Confinement {
        conf_equal: new_conflict.is_none(),
        repair_compatible,
        new_conflict,
    })
}

/// Name not occurring in `kb`, used for one-off gadgets.
pub(crate) fn fresh_concept_name(kb: &KnowledgeBase, stem: &str) -> String {
    let sig = kb.signature();
    (0..)
        .map(|i| format!("{stem}{i}"))
        .find(|n| !sig.concepts.contains(n))
        .expect("unbounded")
}

/// `K ⊨brave ¬A(a)`: some repair is inconsistent with `A(a)`.
///
/// Decided with a fresh name `A′` and `T′ = T ∪ {A′ ⊑ A}`: the claim holds
/// iff `{A′(a)}` is not conflict-confining for `⟨T′, A⟩`.
pub fn brave_entails_negation(kb: &KnowledgeBase, q: &Biq) -> Result<bool> {
    let Some(name) = q.concept.as_name() else {
        return Err(Error::NonAtomicObservation);
    };
    let fresh = fresh_concept_name(kb, &format!("{name}_neg"));
    let mut tbox = kb.tbox.clone();
    tbox.push(Axiom::sub(
        Concept::name(fresh.clone()),
        Concept::name(name),
    ));
    let t = NormalizedTBox::new(&tbox, kb.dialect);
    let h: AssertionSet = [Assertion::concept(fresh, q.individual.clone())].into();
    Ok(!confinement(&t, &kb.abox, &h)?.conf_equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_abox, parse_kb};

    const T: &str = "(tbox (sub (and B1 B2) Bot) (sub (and C1 C2) Bot) (sub (and B1 C1) D) (sub (and B2 C1) D) (sub E D))";

    fn nonconvex_kb(abox: &str) -> KnowledgeBase {
        parse_kb(&format!("(dialect elbot){T}{abox}")).unwrap()
    }

    fn set(text: &str) -> AssertionSet {
        parse_abox(text).unwrap()
    }

    #[test]
    fn two_conflicts_four_repairs() {
        let kb = nonconvex_kb("(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a))");
        let c = conflicts(&kb).unwrap();
        assert_eq!(
            c,
            vec![
                set("(abox (inst B1 a) (inst B2 a))"),
                set("(abox (inst C1 a) (inst C2 a))")
            ]
        );
        assert_eq!(repairs(&kb, 10).unwrap().len(), 4);
        assert!(matches!(
            repairs(&kb, 3),
            Err(Error::RepairOverflow { cap: 3 })
        ));
    }

    #[test]
    fn ar_non_convexity() {
        let q = Biq::atomic("D", "a");
        let a1 = nonconvex_kb("(abox (inst B1 a) (inst B2 a) (inst C1 a))");
        let a2 = nonconvex_kb("(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a))");
        let a3 = nonconvex_kb("(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a) (inst E a))");
        assert!(entails(&a1, &q, Semantics::Ar).unwrap().holds);
        let r2 = entails(&a2, &q, Semantics::Ar).unwrap();
        assert!(!r2.holds);
        assert!(r2.witness.unwrap().contains(&Assertion::concept("C2", "a")));
        assert!(entails(&a3, &q, Semantics::Ar).unwrap().holds);
        assert!(entails(&a2, &q, Semantics::Brave).unwrap().holds);
    }

    #[test]
    fn strategies_agree_on_nonconvex_kbs() {
        let q = Biq::atomic("D", "a");
        for abox in [
            "(abox (inst B1 a) (inst B2 a) (inst C1 a))",
            "(abox (inst B1 a) (inst B2 a) (inst C1 a) (inst C2 a))",
        ] {
            let kb = nonconvex_kb(abox);
            let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
            let e = RepairEngine::new(&t, &kb.abox).unwrap();
            let a = e
                .entails_with(&q, Semantics::Ar, ArStrategy::Counterexample)
                .unwrap();
            let b = e
                .entails_with(&q, Semantics::Ar, ArStrategy::Enumerate)
                .unwrap();
            assert_eq!(a.holds, b.holds);
        }
    }

    #[test]
    fn hitting_sets_of_disjoint_pairs() {
        let edges: Vec<BTreeSet<u8>> = vec![[1, 2].into(), [3, 4].into()];
        let hs = minimal_hitting_sets(&edges, 100).unwrap();
        assert_eq!(hs.len(), 4);
        let edges: Vec<BTreeSet<u8>> = vec![[1, 2].into(), [1, 3].into()];
        let hs = minimal_hitting_sets(&edges, 100).unwrap();
        assert_eq!(hs, vec![BTreeSet::from([1]), BTreeSet::from([2, 3])]);
        assert_eq!(
            minimal_hitting_sets::<u8>(&[], 1).unwrap(),
            vec![BTreeSet::new()]
        );
    }

    #[test]
    fn confinement_definitions() {
        let kb =
            parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst C a))")
                .unwrap();
        assert!(!is_conflict_confining(&kb, &set("(abox (inst B a))")).unwrap());
        assert!(is_conflict_confining(&kb, &set("(abox (inst A b))")).unwrap());
        let kb =
            parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst B a))")
                .unwrap();
        let h = set("(abox (inst B a))");
        assert!(is_conflict_confining(&kb, &h).unwrap());
        assert!(!is_repair_compatible(&kb, &h).unwrap());
    }

    #[test]
    fn negation_via_fresh_subconcept() {
        let kb =
            parse_kb("(dialect dllite-core)(tbox (sub A (not B)))(abox (inst A a) (inst B a))")
                .unwrap();
        assert!(brave_entails_negation(&kb, &Biq::atomic("B", "a")).unwrap());
        assert!(!brave_entails_negation(&kb, &Biq::atomic("B", "b")).unwrap());
        assert!(!brave_entails_negation(&kb, &Biq::atomic("C", "a")).unwrap());
    }

    #[test]
    fn incoherent_tbox_rejected() {
        let kb = parse_kb("(dialect elbot)(tbox (sub Top Bot))(abox)").unwrap();
        assert_eq!(conflicts(&kb).unwrap_err(), Error::IncoherentTbox);
    }

    #[test]
    fn single_assertion_conflict() {
        let kb =
            parse_kb("(dialect dllite-core)(tbox (sub A (not A)))(abox (inst A a) (inst B a))")
                .unwrap();
        assert_eq!(conflicts(&kb).unwrap(), vec![set("(abox (inst A a))")]);
        assert!(
            !entails(&kb, &Biq::atomic("A", "a"), Semantics::Brave)
                .unwrap()
                .holds
        );
    }
}
