//! ABox abduction under repair semantics for EL⊥ and DL-Lite.
//!
//! Layers, bottom up: [`model`] and [`format`] (data and documents),
//! [`reasoner`] (classical consistency and instance checking), [`repair`]
//! (conflicts, repairs, brave and AR entailment), [`abduction`] (existence,
//! verification and enumeration of hypotheses) and [`oracle`] (definition
//! level brute force used as ground truth by the tests).

pub mod abduction;
pub mod error;
pub mod format;
pub mod model;
pub mod oracle;
pub mod reasoner;
pub mod repair;
pub mod sexp;

pub use error::{Error, Result};
pub use model::{
    Assertion, AssertionSet, Axiom, Biq, Concept, Dialect, KnowledgeBase, RoleExpr, Signature,
};
