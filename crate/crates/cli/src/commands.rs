//! Subcommand implementations.

use std::fs;
use std::path::Path;

use abduce_core::abduction::{
    AbductionProblem, Budget, CandidateSpace, MinimalityCriterion, MinimalityKind,
    DEFAULT_MAX_SUBSETS,
};
use abduce_core::format::{
    biq_to_string, parse_abox, parse_biq, parse_kb, parse_signature, serialize_abox, serialize_kb,
    serialize_signature,
};
use abduce_core::model::assertion_set_json;
use abduce_core::oracle::Oracle;
use abduce_core::reasoner::NormalizedTBox;
use abduce_core::repair::{ArStrategy, RepairEngine, Semantics, DEFAULT_MAX_REPAIRS};
use abduce_core::{AssertionSet, Biq, Dialect, KnowledgeBase};
use abduce_gen::{
    gen_cnf_ar, gen_cnf_ar_padded, gen_qbf2, gen_random_kb_with, gen_reach, gen_sat, CnfFormula,
    DiGraph, Instance, Qbf2Formula, RandomParams, Requirement,
};
use serde_json::{json, Value};

use crate::render::{set_text, sets_text, verdict_text, yes_no, CliError, Report};
use crate::{
    AbduceCommand, Cli, Command, DialectArg, EntailArgs, GenCommand, MinimalityArg, OracleCommand,
    ProblemArgs, SemanticsArg, StrategyArg,
};

pub const REPAIRS_ENV: &str = "ABDUCT_BUDGET_REPAIRS";

type CmdResult = Result<Report, CliError>;

pub fn run(cli: &Cli) -> u8 {
    match dispatch(cli) {
        Ok(report) => {
            report.print(cli.output);
            0
        }
        Err(e) => {
            e.print(cli.output);
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Check(a) => check(&read_kb(&a.kb)?),
        Command::Conflicts(a) => conflicts(&read_kb(&a.kb)?),
        Command::Repairs(a) => repairs(&read_kb(&a.kb)?, budget),
        Command::Entail(a) => entail(a, budget),
        Command::Abduce(c) => abduce(c, budget),
        Command::Gen(c) => generate(c),
        Command::Oracle(c) => oracle(c),
    }
}

fn budget(cli: &Cli) -> Result<Budget, CliError> {
    let max_repairs = match (cli.max_repairs, std::env::var(REPAIRS_ENV)) {
        (Some(n), _) => n,
        (None, Ok(v)) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{REPAIRS_ENV} must be a non-negative integer, got {v:?}"
            ))
        })?,
        (None, Err(_)) => DEFAULT_MAX_REPAIRS,
    };
    Ok(Budget {
        max_repairs,
        max_subsets: cli.max_subsets.unwrap_or(DEFAULT_MAX_SUBSETS),
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn read_kb(path: &Path) -> Result<KnowledgeBase, CliError> {
    Ok(parse_kb(&read(path)?)?)
}

fn semantics(s: SemanticsArg) -> Semantics {
    match s {
        SemanticsArg::Classical => Semantics::Classical,
        SemanticsArg::Brave => Semantics::Brave,
        SemanticsArg::Ar => Semantics::Ar,
    }
}

fn check(kb: &KnowledgeBase) -> CmdResult {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    let coherent = t.is_coherent();
    let consistent = coherent && t.is_consistent(&kb.abox);
    let text = if !coherent {
        "inconsistent (incoherent TBox)\n"
    } else if consistent {
        "consistent\n"
    } else {
        "inconsistent\n"
    };
    Ok(Report::new(
        json!({"coherent": coherent, "consistent": consistent}),
        text,
    ))
}

fn sets_json(key: &str, sets: &[AssertionSet]) -> Value {
    json!({ key: sets.iter().map(assertion_set_json).collect::<Vec<_>>() })
}

fn conflicts(kb: &KnowledgeBase) -> CmdResult {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    let conf = RepairEngine::new(&t, &kb.abox)?.conflicts();
    Ok(Report::new(
        sets_json("conflicts", &conf),
        sets_text(&conf, "no conflicts"),
    ))
}

fn repairs(kb: &KnowledgeBase, budget: Budget) -> CmdResult {
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    let reps = RepairEngine::new(&t, &kb.abox)?
        .with_max_repairs(budget.max_repairs)
        .repairs()?;
    Ok(Report::new(
        sets_json("repairs", &reps),
        sets_text(&reps, "no repairs"),
    ))
}

fn entail(a: &EntailArgs, budget: Budget) -> CmdResult {
    let kb = read_kb(&a.kb)?;
    let q = parse_biq(&a.query)?;
    let sem = semantics(a.semantics);
    let strategy = match a.strategy {
        StrategyArg::Counterexample => ArStrategy::Counterexample,
        StrategyArg::Enumerate => ArStrategy::Enumerate,
    };
    let t = NormalizedTBox::new(&kb.tbox, kb.dialect);
    let res = RepairEngine::new(&t, &kb.abox)?
        .with_max_repairs(budget.max_repairs)
        .entails_with(&q, sem, strategy)?;
    let mut text = format!(
        "{} ({})\n",
        if res.holds {
            "entailed"
        } else {
            "not entailed"
        },
        sem.tag()
    );
    if let Some(w) = &res.witness {
        let label = if res.holds {
            "supporting repair"
        } else {
            "counterexample repair"
        };
        text.push_str(&format!("{label}: {}\n", set_text(w)));
    }
    let witness = res
        .witness
        .as_ref()
        .map(assertion_set_json)
        .unwrap_or(Value::Null);
    Ok(Report::new(
        json!({"entails": res.holds, "semantics": sem.tag(), "witness": witness}),
        text,
    ))
}

fn problem(a: &ProblemArgs, budget: Budget) -> Result<AbductionProblem, CliError> {
    let kb = read_kb(&a.kb)?;
    let q = parse_biq(&a.query)?;
    let p = AbductionProblem::new(kb, q, semantics(a.semantics), budget)?;
    if p.observation_individual_is_fresh() {
        eprintln!(
            "note: individual {} does not occur in the KB",
            p.observation().individual
        );
    }
    Ok(p)
}

fn abduce(c: &AbduceCommand, budget: Budget) -> CmdResult {
    match c {
        AbduceCommand::Exists(a) => {
            let p = problem(&a.problem, budget)?;
            let ex = match &a.signature {
                Some(path) => {
                    let space =
                        CandidateSpace::from_signature(parse_signature(&read(path)?)?, a.max_size);
                    p.exists_hypothesis_over(&space)?
                }
                None => p.exists_hypothesis()?,
            };
            let mut text = format!("{}\n", if ex.exists { "exists" } else { "none" });
            if let Some(w) = &ex.witness {
                text.push_str(&format!("witness: {}\n", set_text(w)));
            }
            Ok(Report::new(ex.to_json(), text))
        }
        AbduceCommand::Verify(a) => {
            let p = problem(&a.problem, budget)?;
            let h = parse_abox(&read(&a.hypothesis)?)?;
            let kind = match a.minimality {
                None => MinimalityKind::None,
                Some(MinimalityArg::Subset) => MinimalityKind::Subset,
                Some(MinimalityArg::Card) => MinimalityKind::Cardinality,
                Some(MinimalityArg::ConfSubset) => MinimalityKind::ConflictSubset,
                Some(MinimalityArg::ConfCard) => MinimalityKind::ConflictCardinality,
            };
            let mut crit = MinimalityCriterion::new(kind);
            if a.require_conflict_confining {
                crit = crit.confining();
            }
            let space = match (&a.signature, a.fresh_individuals) {
                (Some(path), _) => Some(CandidateSpace::from_signature(
                    parse_signature(&read(path)?)?,
                    a.max_size,
                )),
                (None, Some(k)) => Some(CandidateSpace::unrestricted(&p, k, a.max_size)),
                (None, None) => None,
            };
            let v = p.verify(&h, crit, space.as_ref())?;
            Ok(Report::new(v.to_json(), verdict_text(&v)))
        }
        AbduceCommand::Enumerate(a) => {
            let p = problem(&a.problem, budget)?;
            let space =
                CandidateSpace::from_signature(parse_signature(&read(&a.signature)?)?, a.max_size);
            let mut items = Vec::new();
            let mut text = String::new();
            for item in p.enumerate_hypotheses(&space)? {
                let (h, v) = item?;
                let marks: Vec<String> = v
                    .minimal
                    .iter()
                    .map(|(k, m)| format!("{k}-minimal={}", yes_no(*m)))
                    .collect();
                text.push_str(&format!(
                    "{}  {} conflict-confining={}\n",
                    set_text(&h),
                    marks.join(" "),
                    yes_no(v.conflict_confining)
                ));
                items.push(json!({"hypothesis": assertion_set_json(&h), "verdict": v.to_json()}));
            }
            if items.is_empty() {
                text.push_str("no hypotheses\n");
            }
            Ok(Report::new(json!({ "hypotheses": items }), text))
        }
    }
}

const KB_FILE: &str = "kb.dl";
const QUERY_FILE: &str = "query.biq";
const SIGNATURE_FILE: &str = "signature.sig";
const HYPOTHESIS_FILE: &str = "hypothesis.abox";

fn instance_report(inst: &Instance, out_dir: Option<&Path>) -> CmdResult {
    let kb = serialize_kb(&inst.kb);
    let query = biq_to_string(&inst.observation);
    let signature = inst.signature.as_ref().map(serialize_signature);
    let hypothesis = inst.hypothesis.as_ref().map(serialize_abox);
    let mut files: Vec<(&str, &str)> = vec![(KB_FILE, &kb), (QUERY_FILE, &query)];
    if let Some(s) = &signature {
        files.push((SIGNATURE_FILE, s));
    }
    if let Some(h) = &hypothesis {
        files.push((HYPOTHESIS_FILE, h));
    }
    if let Some(dir) = out_dir {
        let io = |e: std::io::Error| CliError::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        };
        fs::create_dir_all(dir).map_err(io)?;
        for (name, content) in &files {
            fs::write(dir.join(name), format!("{content}\n")).map_err(io)?;
        }
    }
    let json = json!({
        "kb": kb,
        "query": query,
        "semantics": inst.semantics.tag(),
        "signature": signature,
        "hypothesis": hypothesis,
    });
    let mut text = format!("semantics: {}\n", inst.semantics.tag());
    for (name, content) in &files {
        text.push_str(&format!("{name}: {content}\n"));
    }
    Ok(Report::new(json, text))
}

fn generate(c: &GenCommand) -> CmdResult {
    match c {
        GenCommand::Sat(a) => {
            let inst = gen_sat(&CnfFormula::parse_dimacs(&read(&a.input)?)?)?;
            instance_report(&inst, a.out_dir.as_deref())
        }
        GenCommand::Qbf2(a) => {
            let inst = gen_qbf2(&Qbf2Formula::parse_qdimacs(&read(&a.input)?)?)?;
            instance_report(&inst, a.out_dir.as_deref())
        }
        GenCommand::Reach(a) => {
            let inst = gen_reach(&DiGraph::parse(&read(&a.input)?)?)?;
            instance_report(&inst, a.out_dir.as_deref())
        }
        GenCommand::CnfAr(a) => {
            let f = CnfFormula::parse_dimacs(&read(&a.file.input)?)?;
            let inst = if a.padded {
                gen_cnf_ar_padded(&f)?
            } else {
                let psi: Vec<usize> = match &a.psi {
                    Some(ix) => ix
                        .iter()
                        .map(|&i| {
                            if i == 0 || i > f.clauses.len() {
                                Err(CliError::Usage(format!(
                                    "clause index {i} out of range 1..={}",
                                    f.clauses.len()
                                )))
                            } else {
                                Ok(i - 1)
                            }
                        })
                        .collect::<Result<_, _>>()?,
                    None => (0..f.clauses.len()).collect(),
                };
                gen_cnf_ar(&f, &psi)?
            };
            instance_report(&inst, a.file.out_dir.as_deref())
        }
        GenCommand::Random(a) => {
            let dialect = match a.dialect {
                DialectArg::Elbot => Dialect::ElBot,
                DialectArg::DlliteCore => Dialect::DlLiteCore,
                DialectArg::DlliteR => Dialect::DlLiteR,
            };
            let params = RandomParams {
                dialect,
                n_concepts: a.concepts,
                n_roles: a.roles,
                n_individuals: a.individuals,
                n_axioms: a.axioms,
                n_assertions: a.assertions,
                disjointness_ratio: a.disjointness,
            };
            let req = if a.require_inconsistent {
                Requirement::Inconsistent
            } else {
                Requirement::Coherent
            };
            let kb = serialize_kb(&gen_random_kb_with(&params, a.seed, req)?);
            Ok(Report::new(json!({ "kb": kb }), format!("{kb}\n")))
        }
    }
}

fn oracle(c: &OracleCommand) -> CmdResult {
    let o = Oracle::default();
    match c {
        OracleCommand::Conflicts(a) => {
            let conf = o.conflicts(&read_kb(&a.kb)?)?;
            Ok(Report::new(
                sets_json("conflicts", &conf),
                sets_text(&conf, "no conflicts"),
            ))
        }
        OracleCommand::Repairs(a) => {
            let reps = o.repairs(&read_kb(&a.kb)?)?;
            Ok(Report::new(
                sets_json("repairs", &reps),
                sets_text(&reps, "no repairs"),
            ))
        }
        OracleCommand::Entail(a) => {
            let kb = read_kb(&a.kb)?;
            let q: Biq = parse_biq(&a.query)?;
            let sem = semantics(a.semantics);
            let holds = o.entails(&kb, &q, sem)?;
            let text = format!(
                "{} ({})\n",
                if holds { "entailed" } else { "not entailed" },
                sem.tag()
            );
            Ok(Report::new(
                json!({"entails": holds, "semantics": sem.tag()}),
                text,
            ))
        }
        OracleCommand::Verify(a) => {
            let kb = read_kb(&a.problem.kb)?;
            let q = parse_biq(&a.problem.query)?;
            let h = parse_abox(&read(&a.hypothesis)?)?;
            let (is_h, minimal) = o.verify_subset(&kb, &q, semantics(a.problem.semantics), &h)?;
            let text = format!(
                "hypothesis: {}\nsubset-minimal: {}\n",
                yes_no(is_h),
                yes_no(minimal)
            );
            Ok(Report::new(
                json!({"is_hypothesis": is_h, "minimal": {"subset": minimal}}),
                text,
            ))
        }
    }
}
