//! Classical consistency and instance checking.

mod dllite;
mod el;

use std::collections::BTreeSet;

pub use el::ElRule;

use crate::error::Result;
use crate::model::{check_query, Assertion, Axiom, Biq, Concept, Dialect, KnowledgeBase};
use dllite::LiteTBox;
use el::ElTBox;

#[derive(Debug, Clone)]
enum Kind {
    El(ElTBox),
    Lite(LiteTBox),
}

/// A TBox preprocessed for reasoning: normal-form rules for EL⊥, inclusion
/// closures for DL-Lite. Immutable once built.
#[derive(Debug, Clone)]
pub struct NormalizedTBox {
    dialect: Dialect,
    kind: Kind,
}

/// Result of a classical entailment check. `explosion` is set when the
/// ABox is inconsistent, in which case `holds` is trivially true.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    pub explosion: bool,
}

impl NormalizedTBox {
    pub fn new(tbox: &[Axiom], dialect: Dialect) -> Self {
        let kind = if dialect.is_dllite() {
            Kind::Lite(LiteTBox::new(tbox))
        } else {
            Kind::El(ElTBox::new(tbox))
        };
        NormalizedTBox { dialect, kind }
    }

    pub fn dialect(&self) -> Dialect {
        self.dialect
    }

    /// False iff the empty ABox is already inconsistent.
    pub fn is_coherent(&self) -> bool {
        match &self.kind {
            Kind::El(t) => t.is_coherent(),
            Kind::Lite(t) => t.is_coherent(),
        }
    }

    pub fn is_consistent<'a>(&self, abox: impl IntoIterator<Item = &'a Assertion>) -> bool {
        match &self.kind {
            Kind::El(t) => t.saturate(abox, None, false).consistent,
            Kind::Lite(t) => t.is_consistent(abox),
        }
    }

    pub fn entails<'a>(
        &self,
        abox: impl IntoIterator<Item = &'a Assertion> + Clone,
        q: &Biq,
    ) -> Result<Entailment> {
        check_query(self.dialect, q)?;
        if !self.is_consistent(abox.clone()) {
            return Ok(Entailment {
                holds: true,
                explosion: true,
            });
        }
        Ok(Entailment {
            holds: self.entails_relaxed(abox, q),
            explosion: false,
        })
    }

    /// Entailment ignoring every source of inconsistency. Agrees with
    /// [`NormalizedTBox::entails`] on consistent ABoxes and is monotone in
    /// the ABox, which makes it usable as a pruning bound. The query is
    /// assumed to be well-formed for the dialect.
    pub fn entails_relaxed<'a>(
        &self,
        abox: impl IntoIterator<Item = &'a Assertion>,
        q: &Biq,
    ) -> bool {
        match &self.kind {
            Kind::El(t) => match &q.concept {
                Concept::Top => true,
                Concept::Name(n) => t
                    .saturate(abox, Some(&q.individual), true)
                    .has_concept(&q.individual, n),
                complex => {
                    let (ext, id) = t.with_query(complex);
                    ext.saturate(abox, Some(&q.individual), true)
                        .has_id(&q.individual, id)
                }
            },
            Kind::Lite(t) => t.entails_positive(abox, &q.concept, &q.individual),
        }
    }

    /// EL⊥ normal-form rules, sorted. `None` for DL-Lite.
    pub fn el_rules(&self) -> Option<Vec<ElRule>> {
        match &self.kind {
            Kind::El(t) => Some(t.rules()),
            Kind::Lite(_) => None,
        }
    }

    /// DL-Lite positive closure over basic concepts as `(sub, super)` pairs
    /// in document syntax, reflexive pairs omitted. `None` for EL⊥.
    pub fn positive_closure(&self) -> Option<BTreeSet<(String, String)>> {
        match &self.kind {
            Kind::Lite(t) => Some(t.positive_closure()),
            Kind::El(_) => None,
        }
    }

    /// DL-Lite negative closure: `(B1, B2)` stands for `B1 ⊑ ¬B2`; the
    /// relation is symmetric.
    pub fn negative_closure(&self) -> Option<BTreeSet<(String, String)>> {
        match &self.kind {
            Kind::Lite(t) => Some(t.negative_closure()),
            Kind::El(_) => None,
        }
    }
}

pub fn normalize(tbox: &[Axiom], dialect: Dialect) -> NormalizedTBox {
    NormalizedTBox::new(tbox, dialect)
}

pub fn is_consistent(kb: &KnowledgeBase) -> bool {
    normalize(&kb.tbox, kb.dialect).is_consistent(&kb.abox)
}

pub fn entails_biq(kb: &KnowledgeBase, q: &Biq) -> Result<Entailment> {
    normalize(&kb.tbox, kb.dialect).entails(&kb.abox, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_biq, parse_kb};

    fn kb(text: &str) -> KnowledgeBase {
        parse_kb(text).unwrap()
    }

    const T: &str = "(tbox (sub (and B1 B2) Bot) (sub (and C1 C2) Bot) (sub (and B1 C1) D) (sub (and B2 C1) D) (sub E D))";

    #[test]
    fn nonconvex_tbox_entailments() {
        let k = kb(&format!("(dialect elbot){T}(abox (inst B1 a) (inst C1 a))"));
        assert!(
            entails_biq(&k, &parse_biq("(biq D a)").unwrap())
                .unwrap()
                .holds
        );
        let k = kb(&format!("(dialect elbot){T}(abox (inst B1 a) (inst C2 a))"));
        assert!(
            !entails_biq(&k, &parse_biq("(biq D a)").unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn inconsistency_explodes() {
        let k = kb("(dialect elbot)(tbox (sub (and B1 B2) Bot))(abox (inst B1 a) (inst B2 a))");
        assert!(!is_consistent(&k));
        let e = entails_biq(&k, &Biq::atomic("Z", "a")).unwrap();
        assert!(e.holds && e.explosion);
        let k = kb("(dialect elbot)(tbox (sub (and B1 B2) Bot))(abox (inst B1 a) (inst B2 b))");
        assert!(is_consistent(&k));
    }

    #[test]
    fn complex_el_query() {
        let k =
            kb("(dialect elbot)(tbox (sub A (some r B)))(abox (inst A a) (rel s a b) (inst C b))");
        let t = normalize(&k.tbox, k.dialect);
        assert!(
            t.entails(&k.abox, &parse_biq("(biq (some r B) a)").unwrap())
                .unwrap()
                .holds
        );
        assert!(
            t.entails(&k.abox, &parse_biq("(biq (and A (some s C)) a)").unwrap())
                .unwrap()
                .holds
        );
        assert!(
            !t.entails(&k.abox, &parse_biq("(biq (some s B) a)").unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn query_dialect_checked() {
        let k = kb("(dialect dllite-core)(tbox)(abox)");
        assert!(entails_biq(&k, &parse_biq("(biq (and A B) a)").unwrap()).is_err());
    }

    #[test]
    fn lite_closure_adds_negative_consequence() {
        let k = kb("(dialect dllite-core)(tbox (sub A B) (sub B (not C)))(abox)");
        let t = normalize(&k.tbox, k.dialect);
        let neg = t.negative_closure().unwrap();
        assert!(neg.contains(&("A".to_string(), "C".to_string())));
        assert!(neg.contains(&("C".to_string(), "A".to_string())));
    }
}
