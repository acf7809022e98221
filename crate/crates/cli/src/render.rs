//! Text and JSON rendering.

use abduce_core::abduction::Verdict;
use abduce_core::{AssertionSet, Error};
use abduce_gen::GenError;
use serde_json::{json, Value};

use crate::OutputFormat;

/// One command result in both renderings.
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
        }
    }

    pub fn print(&self, format: OutputFormat) {
        match format {
            OutputFormat::Json => println!(
                "{}",
                serde_json::to_string(&self.json).expect("serializable")
            ),
            OutputFormat::Text => print!("{}", self.text),
        }
    }
}

pub fn set_text(set: &AssertionSet) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn sets_text(sets: &[AssertionSet], empty: &str) -> String {
    if sets.is_empty() {
        return format!("{empty}\n");
    }
    sets.iter().map(|s| set_text(s) + "\n").collect()
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("hypothesis: {}\n", yes_no(v.is_hypothesis));
    for (k, m) in &v.minimal {
        out.push_str(&format!("{k}-minimal: {}\n", yes_no(*m)));
    }
    out.push_str(&format!(
        "conflict-confining: {}\n",
        yes_no(v.conflict_confining)
    ));
    if let Some(c) = &v.counterexample {
        out.push_str(&format!("counterexample: {}\n", set_text(c)));
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Gen(GenError),
    Io { path: String, message: String },
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        match e {
            GenError::Core(e) => CliError::Core(e),
            other => CliError::Gen(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 2,
            CliError::Core(e) if e.is_internal() => 3,
            CliError::Gen(GenError::RetryBudget { .. }) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Gen(GenError::RetryBudget { .. }) => "retry-budget",
            CliError::Gen(_) => "generator-input",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Gen(e) => e.to_string(),
            CliError::Io { path, message } => format!("{path}: {message}"),
            CliError::Usage(m) => m.clone(),
        }
    }

    pub fn print(&self, format: OutputFormat) {
        match format {
            OutputFormat::Json => {
                let v = json!({"error": {"kind": self.kind(), "message": self.message()}});
                eprintln!("{v}");
            }
            OutputFormat::Text => eprintln!("error: {}", self.message()),
        }
    }
}
