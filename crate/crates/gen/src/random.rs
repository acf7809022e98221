//! Seeded random knowledge bases.
//!
//! Names are `A1..An` (concepts), `r1..rk` (roles) and `a1..am`
//! (individuals). Each axiom is negative (`⊑ ⊥` / `⊑ ¬`) with probability
//! `disjointness_ratio`; positive shapes use fixed weights. Only
//! determinism and dialect validity are contractual; the distribution is
//! not. All draws go through `u32` ranges so the stream is identical on
//! every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use abduce_core::reasoner::NormalizedTBox;
use abduce_core::{Assertion, AssertionSet, Axiom, Concept, Dialect, KnowledgeBase, RoleExpr};

use crate::GenError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomParams {
    pub dialect: Dialect,
    pub n_concepts: u32,
    pub n_roles: u32,
    pub n_individuals: u32,
    pub n_axioms: u32,
    pub n_assertions: u32,
    pub disjointness_ratio: f64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            dialect: Dialect::ElBot,
            n_concepts: 5,
            n_roles: 1,
            n_individuals: 2,
            n_axioms: 5,
            n_assertions: 6,
            disjointness_ratio: 0.3,
        }
    }
}

/// Which samples are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Requirement {
    /// Coherent TBox (always enforced).
    #[default]
    Coherent,
    /// Coherent TBox and inconsistent KB, as abduction problems need.
    Inconsistent,
}

pub const MAX_RETRIES: u32 = 1000;

pub fn gen_random_kb(params: &RandomParams, seed: u64) -> Result<KnowledgeBase, GenError> {
    gen_random_kb_with(params, seed, Requirement::Coherent)
}

pub fn gen_random_kb_with(
    params: &RandomParams,
    seed: u64,
    req: Requirement,
) -> Result<KnowledgeBase, GenError> {
    if params.n_concepts == 0 || params.n_individuals == 0 {
        return Err(GenError::Invalid(
            "need at least one concept name and one individual".into(),
        ));
    }
    if !(0.0..=1.0).contains(&params.disjointness_ratio) {
        return Err(GenError::Invalid(
            "disjointness ratio must lie in [0, 1]".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let kb = sample(params, &mut rng)?;
        let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
        if !t.is_coherent() {
            continue;
        }
        if req == Requirement::Inconsistent && t.is_consistent(&kb.abox) {
            continue;
        }
        return Ok(kb);
    }
    Err(GenError::RetryBudget { tries: MAX_RETRIES })
}

struct Draw<'r> {
    rng: &'r mut ChaCha8Rng,
    p: RandomParams,
}

impl Draw<'_> {
    fn below(&mut self, n: u32) -> u32 {
        self.rng.gen_range(0..n)
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn concept(&mut self) -> Concept {
        Concept::name(format!("A{}", self.below(self.p.n_concepts) + 1))
    }

    fn role_name(&mut self) -> String {
        format!("r{}", self.below(self.p.n_roles) + 1)
    }

    fn individual(&mut self) -> String {
        format!("a{}", self.below(self.p.n_individuals) + 1)
    }

    fn lite_role(&mut self) -> RoleExpr {
        let name = self.role_name();
        if self.chance(0.5) {
            RoleExpr::inverse_of(name)
        } else {
            RoleExpr::named(name)
        }
    }

    fn lite_basic(&mut self) -> Concept {
        if self.p.n_roles > 0 && self.chance(0.3) {
            Concept::exists(self.lite_role())
        } else {
            self.concept()
        }
    }

    fn el_axiom(&mut self) -> Axiom {
        if self.chance(self.p.disjointness_ratio) {
            return Axiom::sub(Concept::and([self.concept(), self.concept()]), Concept::Bot);
        }
        let shapes = if self.p.n_roles > 0 { 4 } else { 2 };
        match self.below(shapes) {
            0 => Axiom::sub(self.concept(), self.concept()),
            1 => Axiom::sub(
                Concept::and([self.concept(), self.concept()]),
                self.concept(),
            ),
            2 => {
                let r = RoleExpr::named(self.role_name());
                Axiom::sub(self.concept(), Concept::some(r, self.concept()))
            }
            _ => {
                let r = RoleExpr::named(self.role_name());
                Axiom::sub(Concept::some(r, self.concept()), self.concept())
            }
        }
    }

    fn lite_axiom(&mut self) -> Axiom {
        let negative = self.chance(self.p.disjointness_ratio);
        if self.p.dialect == Dialect::DlLiteR && self.p.n_roles > 0 && self.chance(0.2) {
            let (l, r) = (self.lite_role(), self.lite_role());
            return Axiom::RoleInclusion(l, if negative { r.negate() } else { r });
        }
        let (l, r) = (self.lite_basic(), self.lite_basic());
        Axiom::sub(l, if negative { Concept::not(r) } else { r })
    }

    fn assertion(&mut self) -> Assertion {
        if self.p.n_roles > 0 && self.chance(0.3) {
            Assertion::role(self.role_name(), self.individual(), self.individual())
        } else {
            let c = self.concept();
            Assertion::concept(c.as_name().expect("name"), self.individual())
        }
    }
}

fn sample(params: &RandomParams, rng: &mut ChaCha8Rng) -> Result<KnowledgeBase, GenError> {
    let mut d = Draw { rng, p: *params };
    let tbox: Vec<Axiom> = (0..params.n_axioms)
        .map(|_| {
            if params.dialect.is_dllite() {
                d.lite_axiom()
            } else {
                d.el_axiom()
            }
        })
        .collect();
    let mut abox = AssertionSet::new();
    let mut attempts = 0;
    while abox.len() < params.n_assertions as usize && attempts < 100 * params.n_assertions {
        abox.insert(d.assertion());
        attempts += 1;
    }
    Ok(KnowledgeBase::new(params.dialect, tbox, abox)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use abduce_core::format::serialize_kb;

    #[test]
    fn deterministic() {
        let p = RandomParams::default();
        let a = serialize_kb(&gen_random_kb(&p, 1).unwrap());
        let b = serialize_kb(&gen_random_kb(&p, 1).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, serialize_kb(&gen_random_kb(&p, 2).unwrap()));
    }

    #[test]
    fn no_disjointness_means_consistent() {
        for dialect in [Dialect::ElBot, Dialect::DlLiteCore, Dialect::DlLiteR] {
            let p = RandomParams {
                dialect,
                disjointness_ratio: 0.0,
                ..RandomParams::default()
            };
            for seed in 0..20 {
                let kb = gen_random_kb(&p, seed).unwrap();
                assert!(abduce_core::reasoner::is_consistent(&kb));
            }
        }
    }

    #[test]
    fn inconsistent_requirement() {
        let p = RandomParams::default();
        for seed in 0..10 {
            let kb = gen_random_kb_with(&p, seed, Requirement::Inconsistent).unwrap();
            assert!(!abduce_core::reasoner::is_consistent(&kb));
        }
    }

    #[test]
    fn retry_budget() {
        let p = RandomParams {
            disjointness_ratio: 0.0,
            ..RandomParams::default()
        };
        assert!(matches!(
            gen_random_kb_with(&p, 1, Requirement::Inconsistent),
            Err(GenError::RetryBudget { .. })
        ));
    }
}
