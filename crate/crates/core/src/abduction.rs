//! Abduction problems: existence, verification and enumeration of flat
//! ABox hypotheses under brave and AR semantics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::model::{
    assertion_set_json, check_query, Assertion, AssertionSet, Biq, KnowledgeBase, Signature,
};
use crate::reasoner::NormalizedTBox;
use crate::repair::{
    self, confinement, EntailResult, RepairEngine, Semantics, DEFAULT_MAX_REPAIRS,
};

pub const DEFAULT_MAX_SUBSETS: u128 = 1 << 20;

/// Resource guards for the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_repairs: usize,
    /// Maximum number of candidate hypotheses examined by one search.
    pub max_subsets: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_repairs: DEFAULT_MAX_REPAIRS,
            max_subsets: DEFAULT_MAX_SUBSETS,
        }
    }
}

/// A validated S-abduction problem: the KB is inconsistent and does not
/// S-entail the atomic observation.
#[derive(Debug, Clone)]
pub struct AbductionProblem {
    kb: KnowledgeBase,
    tbox: NormalizedTBox,
    observation: Biq,
    semantics: Semantics,
    budget: Budget,
}

pub fn make_problem(
    kb: KnowledgeBase,
    observation: Biq,
    semantics: Semantics,
) -> Result<AbductionProblem> {
    AbductionProblem::new(kb, observation, semantics, Budget::default())
}

impl AbductionProblem {
    pub fn new(
        kb: KnowledgeBase,
        observation: Biq,
        semantics: Semantics,
        budget: Budget,
    ) -> Result<Self> {
        if semantics == Semantics::Classical {
            return Err(Error::UnsupportedSemantics("classical"));
        }
        if !observation.is_atomic() {
            return Err(Error::NonAtomicObservation);
        }
        check_query(kb.dialect, &observation)?;
        let tbox = NormalizedTBox::new(&kb.tbox, kb.dialect);
        let engine = RepairEngine::new(&tbox, &kb.abox)?.with_max_repairs(budget.max_repairs);
        if engine.is_consistent() {
            return Err(Error::ConsistentKb);
        }
        if engine.entails(&observation, semantics)?.holds {
            return Err(Error::AlreadyEntailed(semantics.tag()));
        }
        Ok(AbductionProblem {
            kb,
            tbox,
            observation,
            semantics,
            budget,
        })
    }

    pub fn kb(&self) -> &KnowledgeBase {
        &self.kb
    }

    pub fn observation(&self) -> &Biq {
        &self.observation
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// The observation as an assertion `A(a)`.
    pub fn alpha(&self) -> Assertion {
        self.observation.as_assertion().expect("validated atomic")
    }

    /// True when the observation's individual does not occur in the KB.
    pub fn observation_individual_is_fresh(&self) -> bool {
        !self
            .kb
            .abox
            .iter()
            .any(|a| a.individuals().any(|i| i == self.observation.individual))
    }

    fn union(&self, h: &AssertionSet) -> AssertionSet {
        let mut u = self.kb.abox.clone();
        u.extend(h.iter().cloned());
        u
    }

    fn engine(&self, h: &AssertionSet) -> Result<RepairEngine<'_>> {
        Ok(
            RepairEngine::new(&self.tbox, &self.union(h))?
                .with_max_repairs(self.budget.max_repairs),
        )
    }

    /// Entailment of the observation from `A ∪ H` under the problem's
    /// semantics, with the repair witness.
    pub fn check(&self, h: &AssertionSet) -> Result<EntailResult> {
        self.engine(h)?.entails(&self.observation, self.semantics)
    }

    pub fn is_hypothesis(&self, h: &AssertionSet) -> Result<bool> {
        Ok(self.check(h)?.holds)
    }

    /// `Conf(⟨T, A ∪ H⟩) = Conf(K)`.
    pub fn is_conflict_confining(&self, h: &AssertionSet) -> Result<bool> {
        Ok(confinement(&self.tbox, &self.kb.abox, h)?.conf_equal)
    }

    fn conflicts_with(&self, h: &AssertionSet) -> Result<BTreeSet<AssertionSet>> {
        Ok(self.engine(h)?.conflicts().into_iter().collect())
    }

    /// Existence of a hypothesis with no signature restriction.
    ///
    /// Brave: `{α}` is a hypothesis unless `α` is unsatisfiable, in which
    /// case nothing is. AR: decided as `K ⊭brave ¬α` and cross-checked
    /// against `{α}` being an AR-hypothesis.
    pub fn exists_hypothesis(&self) -> Result<Existence> {
        let alpha: AssertionSet = [self.alpha()].into();
        let direct = self.is_hypothesis(&alpha)?;
        if self.semantics == Semantics::Ar {
            let via_negation = !repair::brave_entails_negation(&self.kb, &self.observation)?;
            if via_negation != direct {
                return Err(Error::Internal(format!(
                    "existence characterizations disagree for {}: negation test {via_negation}, direct test {direct}",
                    self.observation
                )));
            }
        }
        Ok(Existence::from_witness(direct.then_some(alpha)))
    }

    /// Existence of a hypothesis inside `space`.
    ///
    /// Brave is monotone, so the whole space is tested first and the
    /// witness minimized greedily. AR is not, so subsets are searched
    /// smallest first in lexicographic order.
    pub fn exists_hypothesis_over(&self, space: &CandidateSpace) -> Result<Existence> {
        if self.semantics == Semantics::Brave {
            let all: AssertionSet = space.assertions.iter().cloned().collect();
            if !self.is_hypothesis(&all)? {
                return Ok(Existence::from_witness(None));
            }
            let mut h = all;
            for a in &space.assertions {
                h.remove(a);
                if !self.is_hypothesis(&h)? {
                    h.insert(a.clone());
                }
            }
            if space.size_bound.is_none_or(|k| h.len() <= k) {
                return Ok(Existence::from_witness(Some(h)));
            }
        }
        let found = self.search(space, space.max_size(), |h| self.is_hypothesis(h))?;
        Ok(Existence::from_witness(found))
    }

    /// First subset of the space (by size, then lexicographically) with at
    /// most `max_size` elements satisfying `pred`. The empty set is skipped.
    fn search(
        &self,
        space: &CandidateSpace,
        max_size: usize,
        mut pred: impl FnMut(&AssertionSet) -> Result<bool>,
    ) -> Result<Option<AssertionSet>> {
        let n = space.assertions.len();
        let max_size = max_size.min(n);
        guard(self.budget, subsets_up_to(n, max_size))?;
        for k in 1..=max_size {
            for combo in (0..n).combinations(k) {
                let h: AssertionSet = combo.iter().map(|&i| space.assertions[i].clone()).collect();
                if pred(&h)? {
                    return Ok(Some(h));
                }
            }
        }
        Ok(None)
    }

    /// Hypothesis test plus minimality under `crit`.
    ///
    /// Subset-minimality is checked globally over all proper subsets of `H`
    /// (under AR a hypothesis can have a non-hypothesis subset that in turn
    /// has a hypothesis subset). Cardinality-minimality uses the
    /// characterization "some hypothesis exists iff `{α}` is one" unless a
    /// space is given, in which case it is relative to that space. The
    /// conflict-based criteria always need a space.
    pub fn verify(
        &self,
        h: &AssertionSet,
        crit: MinimalityCriterion,
        space: Option<&CandidateSpace>,
    ) -> Result<Verdict> {
        let check = self.check(h)?;
        let conf = confinement(&self.tbox, &self.kb.abox, h)?;
        let key = crit.kind.key();
        let mut verdict = Verdict {
            is_hypothesis: check.holds,
            minimal: BTreeMap::new(),
            conflict_confining: conf.conf_equal,
            counterexample: None,
        };
        if let Some(key) = key {
            verdict.minimal.insert(key, false);
        }
        if !check.holds {
            verdict.counterexample = check.witness.filter(|_| self.semantics == Semantics::Ar);
            return Ok(verdict);
        }
        let Some(key) = key else {
            return Ok(verdict);
        };
        if crit.require_conflict_confining && !conf.conf_equal {
            verdict.counterexample = conf.new_conflict;
            return Ok(verdict);
        }
        let smaller = match crit.kind {
            MinimalityKind::None => unreachable!("no key"),
            MinimalityKind::Subset => self.smaller_subset(h, crit.require_conflict_confining)?,
            MinimalityKind::Cardinality => {
                self.smaller_cardinality(h, crit.require_conflict_confining, space)?
            }
            MinimalityKind::ConflictSubset | MinimalityKind::ConflictCardinality => {
                let space = space.ok_or(Error::MissingCandidateSpace(key))?;
                self.smaller_conflicts(h, crit, space)?
            }
        };
        verdict.minimal.insert(key, smaller.is_none());
        verdict.counterexample = smaller;
        Ok(verdict)
    }

    fn is_candidate(&self, h: &AssertionSet, confining: bool) -> Result<bool> {
        Ok(self.is_hypothesis(h)? && (!confining || self.is_conflict_confining(h)?))
    }

    fn smaller_subset(&self, h: &AssertionSet, confining: bool) -> Result<Option<AssertionSet>> {
        // Subsets of a confining set are confining, so the flag only
        // matters for the hypothesis test itself.
        let _ = confining;
        if self.semantics == Semantics::Brave {
            // Brave is monotone: a hypothesis proper subset exists iff some
            // one-element removal is a hypothesis.
            for a in h {
                let mut smaller = h.clone();
                smaller.remove(a);
                if self.is_hypothesis(&smaller)? {
                    return Ok(Some(smaller));
                }
            }
            return Ok(None);
        }
        let space = CandidateSpace::from_assertions(h.iter().cloned(), None);
        self.search(&space, h.len().saturating_sub(1), |s| self.is_hypothesis(s))
    }

    fn smaller_cardinality(
        &self,
        h: &AssertionSet,
        confining: bool,
        space: Option<&CandidateSpace>,
    ) -> Result<Option<AssertionSet>> {
        if let Some(space) = space {
            return self.search(space, h.len().saturating_sub(1), |s| {
                self.is_candidate(s, confining)
            });
        }
        if confining && self.semantics == Semantics::Brave {
            return Err(Error::MissingCandidateSpace("cardinality"));
        }
        if h.len() <= 1 {
            return Ok(None);
        }
        // H is a hypothesis, so {α} is one too (and, under AR, it is
        // repair-compatible and therefore conflict-confining).
        let alpha: AssertionSet = [self.alpha()].into();
        if !self.is_candidate(&alpha, confining)? {
            return Err(Error::Internal(format!(
                "{{{}}} is not a hypothesis although a larger one exists",
                self.alpha()
            )));
        }
        Ok(Some(alpha))
    }

    fn smaller_conflicts(
        &self,
        h: &AssertionSet,
        crit: MinimalityCriterion,
        space: &CandidateSpace,
    ) -> Result<Option<AssertionSet>> {
        let mine = self.conflicts_with(h)?;
        let by_subset = crit.kind == MinimalityKind::ConflictSubset;
        self.search(space, space.max_size(), |s| {
            if !self.is_candidate(s, crit.require_conflict_confining)? {
                return Ok(false);
            }
            let theirs = self.conflicts_with(s)?;
            Ok(if by_subset {
                theirs.is_subset(&mine) && theirs != mine
            } else {
                theirs.len() < mine.len()
            })
        })
    }

    /// All hypotheses in `space` within its size bound, ordered by size and
    /// then lexicographically. Verdicts report subset- and
    /// cardinality-minimality relative to the space.
    pub fn enumerate_hypotheses<'p>(&'p self, space: &'p CandidateSpace) -> Result<Hypotheses<'p>> {
        let n = space.assertions.len();
        let max_size = space.max_size().min(n);
        guard(self.budget, subsets_up_to(n, max_size))?;
        let combos = Box::new((1..=max_size).flat_map(move |k| (0..n).combinations(k)));
        Ok(Hypotheses {
            problem: self,
            space,
            combos,
            found: Vec::new(),
            min_size: None,
            failed: false,
        })
    }
}

fn guard(budget: Budget, needed: u128) -> Result<()> {
    if needed > budget.max_subsets {
        return Err(Error::Budget {
            what: "candidate subsets",
            needed,
            cap: budget.max_subsets,
        });
    }
    Ok(())
}

/// Number of subsets of an `n`-set with 1..=k elements, saturating.
pub fn subsets_up_to(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for i in 1..=k.min(n) {
        binom = binom.saturating_mul((n + 1 - i) as u128) / i as u128;
        total = total.saturating_add(binom);
    }
    total
}

pub struct Hypotheses<'p> {
    problem: &'p AbductionProblem,
    space: &'p CandidateSpace,
    combos: Box<dyn Iterator<Item = Vec<usize>> + 'p>,
    found: Vec<AssertionSet>,
    min_size: Option<usize>,
    failed: bool,
}

impl Iterator for Hypotheses<'_> {
    type Item = Result<(AssertionSet, Verdict)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        for combo in self.combos.by_ref() {
            let h: AssertionSet = combo
                .iter()
                .map(|&i| self.space.assertions[i].clone())
                .collect();
            let step = || -> Result<Option<Verdict>> {
                if !self.problem.is_hypothesis(&h)? {
                    return Ok(None);
                }
                let mut minimal = BTreeMap::new();
                // Every proper subset of h is in the space and smaller, so
                // it has been visited already.
                minimal.insert("subset", !self.found.iter().any(|f| f.is_subset(&h)));
                minimal.insert("cardinality", self.min_size.is_none_or(|m| m == h.len()));
                let conflict_confining = self.problem.is_conflict_confining(&h)?;
                Ok(Some(Verdict {
                    is_hypothesis: true,
                    minimal,
                    conflict_confining,
                    counterexample: None,
                }))
            };
            match step() {
                Ok(None) => continue,
                Ok(Some(v)) => {
                    self.min_size.get_or_insert(h.len());
                    self.found.push(h.clone());
                    return Some(Ok((h, v)));
                }
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Existence {
    pub exists: bool,
    pub witness: Option<AssertionSet>,
}

impl Existence {
    fn from_witness(witness: Option<AssertionSet>) -> Self {
        Existence {
            exists: witness.is_some(),
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "exists": self.exists,
            "witness": self.witness.as_ref().map(assertion_set_json),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum MinimalityKind {
    #[default]
    None,
    Subset,
    Cardinality,
    ConflictSubset,
    ConflictCardinality,
}

impl MinimalityKind {
    /// Key in [`Verdict::minimal`]; `None` for no criterion.
    pub fn key(self) -> Option<&'static str> {
        match self {
            MinimalityKind::None => None,
            MinimalityKind::Subset => Some("subset"),
            MinimalityKind::Cardinality => Some("cardinality"),
            MinimalityKind::ConflictSubset => Some("conflict-subset"),
            MinimalityKind::ConflictCardinality => Some("conflict-cardinality"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MinimalityCriterion {
    pub kind: MinimalityKind,
    /// Only conflict-confining hypotheses count, both for `H` and for the
    /// competitors it is compared against.
    pub require_conflict_confining: bool,
}

impl MinimalityCriterion {
    pub fn new(kind: MinimalityKind) -> Self {
        MinimalityCriterion {
            kind,
            require_conflict_confining: false,
        }
    }

    pub fn confining(mut self) -> Self {
        self.require_conflict_confining = true;
        self
    }
}

/// Outcome of [`AbductionProblem::verify`].
///
/// `counterexample` is a repair not entailing the observation when an AR
/// hypothesis test fails, a smaller competitor when minimality fails, a new
/// conflict when required confinement fails, and `None` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_hypothesis: bool,
    pub minimal: BTreeMap<&'static str, bool>,
    pub conflict_confining: bool,
    pub counterexample: Option<AssertionSet>,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "is_hypothesis": self.is_hypothesis,
            "minimal": self.minimal,
            "conflict_confining": self.conflict_confining,
            "counterexample": self.counterexample.as_ref().map(assertion_set_json),
        })
    }
}

/// Finite universe of candidate assertions over a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSpace {
    pub signature: Signature,
    /// Canonically sorted, duplicate-free.
    pub assertions: Vec<Assertion>,
    pub size_bound: Option<usize>,
}

impl CandidateSpace {
    /// `{A(a)} ∪ {r(a,b)}` over all names of the signature.
    pub fn from_signature(signature: Signature, size_bound: Option<usize>) -> Self {
        let mut set = AssertionSet::new();
        for a in &signature.individuals {
            for c in &signature.concepts {
                set.insert(Assertion::concept(c.clone(), a.clone()));
            }
            for r in &signature.roles {
                for b in &signature.individuals {
                    set.insert(Assertion::role(r.clone(), a.clone(), b.clone()));
                }
            }
        }
        CandidateSpace {
            signature,
            assertions: set.into_iter().collect(),
            size_bound,
        }
    }

    /// An explicit list of candidates.
    pub fn from_assertions(
        assertions: impl IntoIterator<Item = Assertion>,
        size_bound: Option<usize>,
    ) -> Self {
        let set: AssertionSet = assertions.into_iter().collect();
        let mut signature = Signature::default();
        for a in &set {
            signature.add_assertion(a);
        }
        CandidateSpace {
            signature,
            assertions: set.into_iter().collect(),
            size_bound,
        }
    }

    /// The signature of the KB plus the observation, and `fresh` new
    /// individuals `fresh_1, fresh_2, ...` (skipping names already used).
    pub fn unrestricted(
        problem: &AbductionProblem,
        fresh: usize,
        size_bound: Option<usize>,
    ) -> Self {
        let mut sig = problem.kb.signature();
        if let Some(c) = problem.observation.concept.as_name() {
            sig.concepts.insert(c.to_string());
        }
        sig.individuals
            .insert(problem.observation.individual.clone());
        let mut added = 0;
        let mut i = 1;
        while added < fresh {
            let name = format!("fresh_{i}");
            i += 1;
            if sig.individuals.insert(name) {
                added += 1;
            }
        }
        CandidateSpace::from_signature(sig, size_bound)
    }

    pub fn len(&self) -> usize {
        self.assertions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assertions.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.size_bound
            .unwrap_or(self.assertions.len())
            .min(self.assertions.len())
    }
}

impl fmt::Display for MinimalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key().unwrap_or("none"))
    }
}
