//! Abduction instances encoding SAT, 2-QBF, reachability and CNF-UNSAT.

use abduce_core::abduction::{make_problem, AbductionProblem, CandidateSpace};
use abduce_core::repair::Semantics;
use abduce_core::{
    Assertion, AssertionSet, Axiom, Biq, Concept, Dialect, KnowledgeBase, RoleExpr, Signature,
};

use crate::cnf::{CnfFormula, Lit};
use crate::graph::DiGraph;
use crate::qbf::Qbf2Formula;
use crate::GenError;

/// A generated abduction problem with its signature restriction and/or
/// candidate hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub kb: KnowledgeBase,
    pub observation: Biq,
    pub semantics: Semantics,
    pub signature: Option<Signature>,
    pub hypothesis: Option<AssertionSet>,
}

impl Instance {
    /// Validates the promise conditions.
    pub fn problem(&self) -> Result<AbductionProblem, GenError> {
        Ok(make_problem(
            self.kb.clone(),
            self.observation.clone(),
            self.semantics,
        )?)
    }

    pub fn space(&self) -> Option<CandidateSpace> {
        self.signature
            .clone()
            .map(|s| CandidateSpace::from_signature(s, None))
    }
}

fn name(s: impl Into<String>) -> Concept {
    Concept::name(s)
}

fn pos_name(formula: &CnfFormula, var: usize) -> String {
    format!("A_{}", formula.variables[var])
}

fn neg_name(formula: &CnfFormula, var: usize) -> String {
    format!("Abar_{}", formula.variables[var])
}

fn lit_name(formula: &CnfFormula, l: Lit) -> String {
    if l.positive {
        pos_name(formula, l.var)
    } else {
        neg_name(formula, l.var)
    }
}

/// `A_x ⊓ Abar_x ⊑ ⊥`, `A_ℓ ⊑ Cl_j` for `ℓ ∈ c_j`, and `⊓_j Cl_j ⊑ Phi`.
fn clause_axioms(formula: &CnfFormula, vars: impl IntoIterator<Item = usize>) -> Vec<Axiom> {
    let mut tbox: Vec<Axiom> = vars
        .into_iter()
        .map(|v| {
            Axiom::sub(
                Concept::and([name(pos_name(formula, v)), name(neg_name(formula, v))]),
                Concept::Bot,
            )
        })
        .collect();
    for (j, clause) in formula.clauses.iter().enumerate() {
        for &l in clause {
            tbox.push(Axiom::sub(
                name(lit_name(formula, l)),
                name(format!("Cl_{}", j + 1)),
            ));
        }
    }
    let cls = (1..=formula.clauses.len()).map(|j| name(format!("Cl_{j}")));
    tbox.push(Axiom::sub(Concept::and(cls), name("Phi")));
    tbox
}

/// EL⊥ brave problem whose hypotheses over `{A_x, Abar_x, m}` are exactly
/// the sets containing a satisfying assignment's literals. An artificial
/// conflict on fresh names makes the KB inconsistent.
pub fn gen_sat(formula: &CnfFormula) -> Result<Instance, GenError> {
    if formula.clauses.is_empty() {
        return Err(GenError::Invalid(
            "formula must have at least one clause".into(),
        ));
    }
    let mut tbox = clause_axioms(formula, 0..formula.n_vars());
    tbox.push(Axiom::sub(
        Concept::and([name("X1gad"), name("X2gad")]),
        Concept::Bot,
    ));
    let abox = [
        Assertion::concept("X1gad", "bgad"),
        Assertion::concept("X2gad", "bgad"),
    ];
    let kb = KnowledgeBase::new(Dialect::ElBot, tbox, abox)?;
    let mut sig = Signature::default();
    for v in 0..formula.n_vars() {
        sig.concepts.insert(pos_name(formula, v));
        sig.concepts.insert(neg_name(formula, v));
    }
    sig.individuals.insert("m".into());
    Ok(Instance {
        kb,
        observation: Biq::atomic("Phi", "m"),
        semantics: Semantics::Brave,
        signature: Some(sig),
        hypothesis: None,
    })
}

/// EL⊥ AR problem for `∃Y ∀Z ¬φ`: the ABox asserts both polarities of
/// every `z` together with `PhiBar(m)`, which clashes with `Phi`. A
/// hypothesis over `{m, A_y, Abar_y}` yields `C(m)` in every repair iff
/// each `y` gets a value and no value of `Z` satisfies φ.
pub fn gen_qbf2(qbf: &Qbf2Formula) -> Result<Instance, GenError> {
    let f = &qbf.matrix;
    let mut tbox = clause_axioms(f, qbf.exists.iter().chain(&qbf.forall).copied());
    tbox.push(Axiom::sub(
        Concept::and([name("Phi"), name("PhiBar")]),
        Concept::Bot,
    ));
    let v_name = |y: usize| format!("V_{}", f.variables[y]);
    for &y in &qbf.exists {
        tbox.push(Axiom::sub(name(pos_name(f, y)), name(v_name(y))));
        tbox.push(Axiom::sub(name(neg_name(f, y)), name(v_name(y))));
    }
    let mut goal: Vec<Concept> = qbf.exists.iter().map(|&y| name(v_name(y))).collect();
    goal.push(name("PhiBar"));
    tbox.push(Axiom::sub(Concept::and(goal), name("C")));
    let mut abox = vec![Assertion::concept("PhiBar", "m")];
    for &z in &qbf.forall {
        abox.push(Assertion::concept(pos_name(f, z), "m"));
        abox.push(Assertion::concept(neg_name(f, z), "m"));
    }
    let kb = KnowledgeBase::new(Dialect::ElBot, tbox, abox)?;
    let mut sig = Signature::default();
    for &y in &qbf.exists {
        sig.concepts.insert(pos_name(f, y));
        sig.concepts.insert(neg_name(f, y));
    }
    sig.individuals.insert("m".into());
    Ok(Instance {
        kb,
        observation: Biq::atomic("C", "m"),
        semantics: Semantics::Ar,
        signature: Some(sig),
        hypothesis: None,
    })
}

fn gadget_axiom() -> Axiom {
    Axiom::sub(name("B1"), Concept::not(name("B2")))
}

fn gadget_assertions() -> [Assertion; 2] {
    [Assertion::concept("B1", "b"), Assertion::concept("B2", "b")]
}

/// DL-Lite_core brave problem: `A_v ⊑ A_w` per edge, `α = A_t(a)`,
/// signature `{A_s, a}` and candidate hypothesis `{A_s(a)}`.
pub fn gen_reach(g: &DiGraph) -> Result<Instance, GenError> {
    let vname = |v: &str| format!("A_{v}");
    let mut tbox: Vec<Axiom> = g
        .edges
        .iter()
        .map(|(a, b)| Axiom::sub(name(vname(a)), name(vname(b))))
        .collect();
    tbox.push(gadget_axiom());
    let kb = KnowledgeBase::new(Dialect::DlLiteCore, tbox, gadget_assertions())?;
    let mut sig = Signature::default();
    sig.concepts.insert(vname(&g.source));
    sig.individuals.insert("a".into());
    Ok(Instance {
        kb,
        observation: Biq::atomic(vname(&g.target), "a"),
        semantics: Semantics::Brave,
        signature: Some(sig),
        hypothesis: Some([Assertion::concept(vname(&g.source), "a")].into()),
    })
}

fn cnf_ar_tbox() -> Vec<Axiom> {
    let ex = |r: &str| Concept::exists(RoleExpr::named(r));
    let ex_inv = |r: &str| Concept::exists(RoleExpr::inverse_of(r));
    vec![
        Axiom::sub(ex_inv("P"), Concept::not(ex_inv("N"))),
        Axiom::sub(ex("P"), Concept::not(ex_inv("U"))),
        Axiom::sub(ex("N"), Concept::not(ex_inv("U"))),
        Axiom::sub(ex("U"), name("A")),
    ]
}

fn clause_individual(j: usize) -> String {
    format!("c{}", j + 1)
}

/// `P(c_j, x)` for `x ∈ c_j`, `N(c_j, x)` for `¬x ∈ c_j`.
fn literal_edges(formula: &CnfFormula) -> Vec<Assertion> {
    let mut out = Vec::new();
    for (j, clause) in formula.clauses.iter().enumerate() {
        for l in clause {
            let role = if l.positive { "P" } else { "N" };
            out.push(Assertion::role(
                role,
                clause_individual(j),
                formula.variables[l.var].clone(),
            ));
        }
    }
    out
}

fn u_edge(j: usize) -> Assertion {
    Assertion::role("U", "a", clause_individual(j))
}

/// DL-Lite_core AR verification instance: the ABox holds the literal
/// edges of φ (plus an artificial conflict on fresh names), `α = A(a)`, and
/// `H_ψ = {U(a, c_j) | c_j ∈ ψ}` is a hypothesis iff ψ is unsatisfiable.
pub fn gen_cnf_ar(formula: &CnfFormula, psi: &[usize]) -> Result<Instance, GenError> {
    if psi.is_empty() {
        return Err(GenError::Invalid("ψ must be non-empty".into()));
    }
    if let Some(&j) = psi.iter().find(|&&j| j >= formula.clauses.len()) {
        return Err(GenError::Invalid(format!(
            "clause index {} out of range",
            j + 1
        )));
    }
    if formula.clauses.iter().any(|c| c.is_empty()) {
        return Err(GenError::Invalid("empty clauses are not supported".into()));
    }
    let mut tbox = cnf_ar_tbox();
    tbox.push(gadget_axiom());
    let abox = literal_edges(formula)
        .into_iter()
        .chain(gadget_assertions());
    let kb = KnowledgeBase::new(Dialect::DlLiteCore, tbox, abox)?;
    Ok(Instance {
        kb,
        observation: Biq::atomic("A", "a"),
        semantics: Semantics::Ar,
        signature: None,
        hypothesis: Some(psi.iter().map(|&j| u_edge(j)).collect()),
    })
}

/// The padded variant for cardinality-minimality: clauses get `x_{n+1}`,
/// and `¬x_{n+1} ∨ x_{n+2}`, `¬x_{n+2}` are appended. All `U` edges except
/// the last are kept in the ABox, and `{U(a, c_{k+2})}` is a (size-one,
/// hence ≤-minimal) hypothesis iff φ is unsatisfiable.
pub fn gen_cnf_ar_padded(formula: &CnfFormula) -> Result<Instance, GenError> {
    if formula.clauses.is_empty() || formula.clauses.iter().any(|c| c.is_empty()) {
        return Err(GenError::Invalid(
            "need at least one clause and no empty clauses".into(),
        ));
    }
    let n = formula.n_vars();
    let mut padded = CnfFormula::new(n + 2, Vec::new());
    padded.variables[..n].clone_from_slice(&formula.variables);
    for (i, v) in [n, n + 1].into_iter().enumerate() {
        let mut k = n + 1 + i;
        while formula.variables.contains(&format!("x{k}")) {
            k += 2;
        }
        padded.variables[v] = format!("x{k}");
    }
    for c in &formula.clauses {
        let mut c = c.clone();
        c.insert(Lit::pos(n));
        padded.clauses.push(c);
    }
    padded.clauses.push([Lit::neg(n), Lit::pos(n + 1)].into());
    padded.clauses.push([Lit::neg(n + 1)].into());
    let k = padded.clauses.len();
    let abox = literal_edges(&padded)
        .into_iter()
        .chain((0..k - 1).map(u_edge));
    let kb = KnowledgeBase::new(Dialect::DlLiteCore, cnf_ar_tbox(), abox)?;
    Ok(Instance {
        kb,
        observation: Biq::atomic("A", "a"),
        semantics: Semantics::Ar,
        signature: None,
        hypothesis: Some([u_edge(k - 1)].into()),
    })
}
