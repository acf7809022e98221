//! Knowledge-base data model: dialects, concepts, axioms, assertions,
//! signatures and Boolean instance queries.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prefix reserved for names introduced by the reasoner itself.
pub const INTERNAL_PREFIX: &str = "__";

/// The description logic a knowledge base is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dialect {
    #[serde(rename = "elbot")]
    ElBot,
    #[serde(rename = "dllite-core")]
    DlLiteCore,
    #[serde(rename = "dllite-r")]
    DlLiteR,
}

impl Dialect {
    pub fn tag(self) -> &'static str {
        match self {
            Dialect::ElBot => "elbot",
            Dialect::DlLiteCore => "dllite-core",
            Dialect::DlLiteR => "dllite-r",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Dialect> {
        match tag {
            "elbot" => Some(Dialect::ElBot),
            "dllite-core" => Some(Dialect::DlLiteCore),
            "dllite-r" => Some(Dialect::DlLiteR),
            _ => None,
        }
    }

    pub fn is_dllite(self) -> bool {
        !matches!(self, Dialect::ElBot)
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A role, possibly inverted (DL-Lite) or negated (right-hand side of a
/// DL-Lite_R role inclusion).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoleExpr {
    pub name: String,
    pub inverse: bool,
    pub negated: bool,
}

impl RoleExpr {
    pub fn named(name: impl Into<String>) -> Self {
        RoleExpr {
            name: name.into(),
            inverse: false,
            negated: false,
        }
    }

    pub fn inverse_of(name: impl Into<String>) -> Self {
        RoleExpr {
            name: name.into(),
            inverse: true,
            negated: false,
        }
    }

    pub fn negate(mut self) -> Self {
        self.negated = !self.negated;
        self
    }
}

/// Concept terms of both dialects.
///
/// DL-Lite's unqualified `∃Q` is represented as `Exists(Q, Top)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Bot,
    Name(String),
    And(Vec<Concept>),
    Exists(RoleExpr, Box<Concept>),
    Not(Box<Concept>),
}

impl Concept {
    pub fn name(name: impl Into<String>) -> Self {
        Concept::Name(name.into())
    }

    pub fn and(parts: impl IntoIterator<Item = Concept>) -> Self {
        Concept::And(parts.into_iter().collect())
    }

    pub fn some(role: RoleExpr, filler: Concept) -> Self {
        Concept::Exists(role, Box::new(filler))
    }

    /// Unqualified existential `∃Q`.
    pub fn exists(role: RoleExpr) -> Self {
        Concept::Exists(role, Box::new(Concept::Top))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: Concept) -> Self {
        Concept::Not(Box::new(c))
    }

    pub fn as_name(&self) -> Option<&str> {
        match self {
            Concept::Name(n) => Some(n),
            _ => None,
        }
    }

    /// A DL-Lite basic concept: a name or an unqualified existential over a
    /// non-negated role.
    pub fn is_basic(&self) -> bool {
        match self {
            Concept::Name(_) => true,
            Concept::Exists(r, filler) => !r.negated && **filler == Concept::Top,
            _ => false,
        }
    }

    pub(crate) fn collect_names(
        &self,
        concepts: &mut BTreeSet<String>,
        roles: &mut BTreeSet<String>,
    ) {
        match self {
            Concept::Top | Concept::Bot => {}
            Concept::Name(n) => {
                concepts.insert(n.clone());
            }
            Concept::And(parts) => parts.iter().for_each(|c| c.collect_names(concepts, roles)),
            Concept::Exists(r, filler) => {
                roles.insert(r.name.clone());
                filler.collect_names(concepts, roles);
            }
            Concept::Not(c) => c.collect_names(concepts, roles),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Axiom {
    ConceptInclusion(Concept, Concept),
    RoleInclusion(RoleExpr, RoleExpr),
}

impl Axiom {
    pub fn sub(lhs: Concept, rhs: Concept) -> Self {
        Axiom::ConceptInclusion(lhs, rhs)
    }
}

/// A flat ABox assertion: `A(a)` or `r(a, b)`.
///
/// The derived order (concept assertions first, then fields left to right)
/// is the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Assertion {
    Concept {
        concept: String,
        individual: String,
    },
    Role {
        role: String,
        subject: String,
        object: String,
    },
}

impl Assertion {
    pub fn concept(concept: impl Into<String>, individual: impl Into<String>) -> Self {
        Assertion::Concept {
            concept: concept.into(),
            individual: individual.into(),
        }
    }

    pub fn role(
        role: impl Into<String>,
        subject: impl Into<String>,
        object: impl Into<String>,
    ) -> Self {
        Assertion::Role {
            role: role.into(),
            subject: subject.into(),
            object: object.into(),
        }
    }

    pub fn individuals(&self) -> impl Iterator<Item = &str> {
        let (a, b) = match self {
            Assertion::Concept { individual, .. } => (individual.as_str(), None),
            Assertion::Role {
                subject, object, ..
            } => (subject.as_str(), Some(object.as_str())),
        };
        std::iter::once(a).chain(b)
    }

    /// JSON form used by the CLI: `["inst","A","a"]` or `["rel","r","a","b"]`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Assertion::Concept {
                concept,
                individual,
            } => serde_json::json!(["inst", concept, individual]),
            Assertion::Role {
                role,
                subject,
                object,
            } => serde_json::json!(["rel", role, subject, object]),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assertion::Concept {
                concept,
                individual,
            } => write!(f, "{concept}({individual})"),
            Assertion::Role {
                role,
                subject,
                object,
            } => write!(f, "{role}({subject},{object})"),
        }
    }
}

/// ABoxes, hypotheses, conflicts and repairs are all assertion sets.
pub type AssertionSet = BTreeSet<Assertion>;

pub fn assertion_set_json(set: &AssertionSet) -> serde_json::Value {
    serde_json::Value::Array(set.iter().map(Assertion::to_json).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub dialect: Dialect,
    pub tbox: Vec<Axiom>,
    pub abox: AssertionSet,
}

impl KnowledgeBase {
    /// Builds a knowledge base, checking every axiom against the dialect.
    pub fn new(
        dialect: Dialect,
        tbox: Vec<Axiom>,
        abox: impl IntoIterator<Item = Assertion>,
    ) -> Result<Self> {
        for (i, ax) in tbox.iter().enumerate() {
            check_axiom(dialect, ax).map_err(|rule| Error::Dialect { axiom: i, rule })?;
        }
        Ok(KnowledgeBase {
            dialect,
            tbox,
            abox: abox.into_iter().collect(),
        })
    }

    pub fn empty(dialect: Dialect) -> Self {
        KnowledgeBase {
            dialect,
            tbox: Vec::new(),
            abox: AssertionSet::new(),
        }
    }

    pub fn with_abox(&self, abox: AssertionSet) -> Self {
        KnowledgeBase {
            dialect: self.dialect,
            tbox: self.tbox.clone(),
            abox,
        }
    }

    pub fn signature(&self) -> Signature {
        signature_of(self)
    }
}

/// Finite sets of concept, role and individual names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub concepts: BTreeSet<String>,
    pub roles: BTreeSet<String>,
    pub individuals: BTreeSet<String>,
}

impl Signature {
    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty() && self.roles.is_empty() && self.individuals.is_empty()
    }

    pub fn is_superset(&self, other: &Signature) -> bool {
        self.concepts.is_superset(&other.concepts)
            && self.roles.is_superset(&other.roles)
            && self.individuals.is_superset(&other.individuals)
    }

    pub fn add_assertion(&mut self, a: &Assertion) {
        match a {
            Assertion::Concept {
                concept,
                individual,
            } => {
                self.concepts.insert(concept.clone());
                self.individuals.insert(individual.clone());
            }
            Assertion::Role {
                role,
                subject,
                object,
            } => {
                self.roles.insert(role.clone());
                self.individuals.insert(subject.clone());
                self.individuals.insert(object.clone());
            }
        }
    }

    /// True iff the assertion uses only names from this signature.
    pub fn covers(&self, a: &Assertion) -> bool {
        match a {
            Assertion::Concept {
                concept,
                individual,
            } => self.concepts.contains(concept) && self.individuals.contains(individual),
            Assertion::Role {
                role,
                subject,
                object,
            } => {
                self.roles.contains(role)
                    && self.individuals.contains(subject)
                    && self.individuals.contains(object)
            }
        }
    }

    pub fn union(&self, other: &Signature) -> Signature {
        Signature {
            concepts: self.concepts.union(&other.concepts).cloned().collect(),
            roles: self.roles.union(&other.roles).cloned().collect(),
            individuals: self
                .individuals
                .union(&other.individuals)
                .cloned()
                .collect(),
        }
    }
}

/// Exactly the names occurring in the TBox and ABox of `kb`.
pub fn signature_of(kb: &KnowledgeBase) -> Signature {
    let mut sig = Signature::default();
    for ax in &kb.tbox {
        match ax {
            Axiom::ConceptInclusion(l, r) => {
                l.collect_names(&mut sig.concepts, &mut sig.roles);
                r.collect_names(&mut sig.concepts, &mut sig.roles);
            }
            Axiom::RoleInclusion(l, r) => {
                sig.roles.insert(l.name.clone());
                sig.roles.insert(r.name.clone());
            }
        }
    }
    for a in &kb.abox {
        sig.add_assertion(a);
    }
    sig
}

/// Boolean instance query `C(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biq {
    pub concept: Concept,
    pub individual: String,
}

impl Biq {
    pub fn new(concept: Concept, individual: impl Into<String>) -> Self {
        Biq {
            concept,
            individual: individual.into(),
        }
    }

    pub fn atomic(concept: impl Into<String>, individual: impl Into<String>) -> Self {
        Biq {
            concept: Concept::Name(concept.into()),
            individual: individual.into(),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self.concept, Concept::Name(_))
    }

    /// The assertion `A(a)` for an atomic query.
    pub fn as_assertion(&self) -> Option<Assertion> {
        self.concept
            .as_name()
            .map(|c| Assertion::concept(c, self.individual.clone()))
    }
}

impl fmt::Display for Biq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::biq_to_string(self))
    }
}

/// Grammar check for a single axiom. Returns the violated rule on failure.
pub fn check_axiom(dialect: Dialect, axiom: &Axiom) -> std::result::Result<(), String> {
    match (dialect, axiom) {
        (Dialect::ElBot, Axiom::ConceptInclusion(l, r)) => {
            check_el_concept(l)?;
            check_el_concept(r)
        }
        (Dialect::ElBot, Axiom::RoleInclusion(..)) => {
            Err("role inclusions are not part of elbot".into())
        }
        (_, Axiom::ConceptInclusion(l, r)) => {
            if !l.is_basic() {
                return Err(
                    "left-hand side of a DL-Lite concept inclusion must be a basic concept".into(),
                );
            }
            check_lite_basic(l)?;
            match r {
                Concept::Not(inner) => check_lite_basic(inner),
                other => check_lite_basic(other),
            }
        }
        (Dialect::DlLiteCore, Axiom::RoleInclusion(..)) => {
            Err("role inclusions are forbidden in dllite-core".into())
        }
        (Dialect::DlLiteR, Axiom::RoleInclusion(l, _)) if l.negated => {
            Err("left-hand side of a role inclusion cannot be negated".into())
        }
        (Dialect::DlLiteR, Axiom::RoleInclusion(..)) => Ok(()),
    }
}

fn check_el_concept(c: &Concept) -> std::result::Result<(), String> {
    match c {
        Concept::Top | Concept::Bot | Concept::Name(_) => Ok(()),
        Concept::And(parts) if parts.is_empty() => Err("empty conjunction".into()),
        Concept::And(parts) => parts.iter().try_for_each(check_el_concept),
        Concept::Exists(r, filler) => {
            if r.inverse || r.negated {
                return Err("elbot roles are plain role names".into());
            }
            check_el_concept(filler)
        }
        Concept::Not(_) => Err("negation is not part of elbot".into()),
    }
}

fn check_lite_basic(c: &Concept) -> std::result::Result<(), String> {
    match c {
        Concept::Name(_) => Ok(()),
        Concept::Exists(r, filler) if !r.negated && **filler == Concept::Top => Ok(()),
        Concept::Exists(..) => {
            Err("DL-Lite existentials are unqualified over a role or inverse role".into())
        }
        Concept::Not(_) => Err("negation only at the top of a DL-Lite right-hand side".into()),
        Concept::And(_) => Err("conjunction is not part of DL-Lite".into()),
        Concept::Top | Concept::Bot => Err("Top/Bot are not part of DL-Lite".into()),
    }
}

/// Grammar check for a query concept in the given dialect.
pub fn check_query(dialect: Dialect, q: &Biq) -> Result<()> {
    let res = if dialect.is_dllite() {
        check_lite_basic(&q.concept)
    } else {
        check_el_concept(&q.concept)
    };
    res.map_err(Error::QueryDialect)
}

/// `[A-Za-z][A-Za-z0-9_]*`, excluding the reserved concept keywords.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_of_role_only_kb() {
        let kb =
            KnowledgeBase::new(Dialect::ElBot, vec![], [Assertion::role("r", "a", "b")]).unwrap();
        let sig = signature_of(&kb);
        assert!(sig.concepts.is_empty());
        assert_eq!(sig.roles, BTreeSet::from(["r".to_string()]));
        assert_eq!(sig.individuals.len(), 2);
    }

    #[test]
    fn empty_kb_has_empty_signature() {
        assert!(signature_of(&KnowledgeBase::empty(Dialect::DlLiteR)).is_empty());
    }

    #[test]
    fn dllite_rejects_conjunction() {
        let ax = Axiom::sub(
            Concept::and([Concept::name("A"), Concept::name("B")]),
            Concept::name("C"),
        );
        assert!(check_axiom(Dialect::DlLiteCore, &ax).is_err());
        assert!(check_axiom(Dialect::ElBot, &ax).is_ok());
    }

    #[test]
    fn role_inclusion_only_in_dllite_r() {
        let ax = Axiom::RoleInclusion(RoleExpr::named("r"), RoleExpr::inverse_of("s").negate());
        assert!(check_axiom(Dialect::DlLiteR, &ax).is_ok());
        assert!(check_axiom(Dialect::DlLiteCore, &ax).is_err());
        assert!(check_axiom(Dialect::ElBot, &ax).is_err());
    }

    #[test]
    fn names() {
        assert!(is_valid_name("B1"));
        assert!(is_valid_name("A_x1"));
        assert!(!is_valid_name("__q0"));
        assert!(!is_valid_name("1a"));
        assert!(!is_valid_name(""));
    }
}
