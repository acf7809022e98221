//! Instance generators: the hardness reductions (SAT, 2-QBF, graph
//! reachability, CNF-UNSAT / MUS) as abduction problems, their input
//! formats, and a seeded random KB generator.

pub mod cnf;
pub mod graph;
pub mod qbf;
pub mod random;
pub mod reductions;

pub use cnf::{CnfFormula, Lit};
pub use graph::DiGraph;
pub use qbf::Qbf2Formula;
pub use random::{gen_random_kb, gen_random_kb_with, RandomParams, Requirement};
pub use reductions::{gen_cnf_ar, gen_cnf_ar_padded, gen_qbf2, gen_reach, gen_sat, Instance};

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("no acceptable sample after {tries} attempts")]
    RetryBudget { tries: u32 },
    #[error(transparent)]
    Core(#[from] abduce_core::Error),
}

impl GenError {
    pub(crate) fn format(line: usize, message: &str) -> Self {
        GenError::Format {
            line: line + 1,
            message: message.to_string(),
        }
    }
}
