//! Shared helpers for running the `abduce` binary over the fixture corpus.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .unwrap()
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn abduce(args: &[&str]) -> Output {
    abduce_env(args, &[])
}

pub fn abduce_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abduce"));
    cmd.current_dir(workspace_root())
        .args(args)
        .env_remove("ABDUCT_BUDGET_REPAIRS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("run abduce");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub struct Case {
    pub name: &'static str,
    pub args: Vec<&'static str>,
    pub code: i32,
}

pub fn run_case(case: &Case) -> Output {
    let mut args = vec!["--output", "json"];
    args.extend(&case.args);
    abduce(&args)
}

const NC: &str = "fixtures/nonconvex/kb.dl";
const BRAVE: &str = "fixtures/brave/kb.dl";
const ROLES: &str = "fixtures/roles/kb.dl";

fn case(name: &'static str, code: i32, args: &[&'static str]) -> Case {
    Case {
        name,
        args: args.to_vec(),
        code,
    }
}

/// The fixture corpus with its expected exit codes.
pub fn golden_cases() -> Vec<Case> {
    let d = "(biq D a)";
    let ac = "(biq A c)";
    vec![
        case("check_nonconvex", 0, &["check", "--kb", NC]),
        case("check_roles", 0, &["check", "--kb", ROLES]),
        case(
            "conflicts_nonconvex_a2",
            0,
            &["conflicts", "--kb", "fixtures/nonconvex/kb_a2.dl"],
        ),
        case(
            "repairs_nonconvex_a2",
            0,
            &["repairs", "--kb", "fixtures/nonconvex/kb_a2.dl"],
        ),
        case("conflicts_roles", 0, &["conflicts", "--kb", ROLES]),
        case("repairs_roles", 0, &["repairs", "--kb", ROLES]),
        case(
            "entail_ar_a2",
            0,
            &[
                "entail",
                "--kb",
                "fixtures/nonconvex/kb_a2.dl",
                "--semantics",
                "ar",
                "--query",
                d,
            ],
        ),
        case(
            "entail_ar_a2_enumerate",
            0,
            &[
                "entail",
                "--kb",
                "fixtures/nonconvex/kb_a2.dl",
                "--semantics",
                "ar",
                "--query",
                d,
                "--strategy",
                "enumerate",
            ],
        ),
        case(
            "entail_brave_a2",
            0,
            &[
                "entail",
                "--kb",
                "fixtures/nonconvex/kb_a2.dl",
                "--semantics",
                "brave",
                "--query",
                d,
            ],
        ),
        case(
            "entail_classical_roles",
            0,
            &[
                "entail",
                "--kb",
                ROLES,
                "--semantics",
                "classical",
                "--query",
                "(biq A a)",
            ],
        ),
        case(
            "exists_brave",
            0,
            &[
                "abduce",
                "exists",
                "--kb",
                BRAVE,
                "--semantics",
                "brave",
                "--query",
                d,
            ],
        ),
        case(
            "exists_ar_nonconvex",
            0,
            &[
                "abduce",
                "exists",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
            ],
        ),
        case(
            "exists_ar_roles",
            0,
            &[
                "abduce",
                "exists",
                "--kb",
                ROLES,
                "--semantics",
                "ar",
                "--query",
                ac,
            ],
        ),
        case(
            "exists_brave_roles_sig",
            0,
            &[
                "abduce",
                "exists",
                "--kb",
                ROLES,
                "--semantics",
                "brave",
                "--query",
                ac,
                "--signature",
                "fixtures/roles/signature.sig",
            ],
        ),
        case(
            "verify_nonconvex_a1",
            0,
            &[
                "abduce",
                "verify",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
                "--hypothesis",
                "fixtures/nonconvex/a1.abox",
                "--minimality",
                "subset",
            ],
        ),
        case(
            "verify_nonconvex_a2",
            0,
            &[
                "abduce",
                "verify",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
                "--hypothesis",
                "fixtures/nonconvex/a2.abox",
            ],
        ),
        case(
            "verify_nonconvex_a3",
            0,
            &[
                "abduce",
                "verify",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
                "--hypothesis",
                "fixtures/nonconvex/a3.abox",
                "--minimality",
                "subset",
            ],
        ),
        case(
            "verify_roles_card",
            0,
            &[
                "abduce",
                "verify",
                "--kb",
                ROLES,
                "--semantics",
                "brave",
                "--query",
                ac,
                "--hypothesis",
                "fixtures/roles/h.abox",
                "--minimality",
                "card",
            ],
        ),
        case(
            "verify_roles_conf_subset",
            0,
            &[
                "abduce",
                "verify",
                "--kb",
                ROLES,
                "--semantics",
                "brave",
                "--query",
                ac,
                "--hypothesis",
                "fixtures/roles/h.abox",
                "--minimality",
                "conf-subset",
                "--signature",
                "fixtures/roles/signature.sig",
                "--max-size",
                "1",
            ],
        ),
        case(
            "enumerate_nonconvex",
            0,
            &[
                "abduce",
                "enumerate",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
                "--signature",
                "fixtures/nonconvex/signature.sig",
            ],
        ),
        case(
            "enumerate_roles",
            0,
            &[
                "abduce",
                "enumerate",
                "--kb",
                ROLES,
                "--semantics",
                "brave",
                "--query",
                ac,
                "--signature",
                "fixtures/roles/signature.sig",
                "--max-size",
                "2",
            ],
        ),
        case(
            "gen_sat",
            0,
            &["gen", "sat", "--input", "fixtures/reductions/sat.cnf"],
        ),
        case(
            "gen_qbf2",
            0,
            &["gen", "qbf2", "--input", "fixtures/reductions/qbf.qdimacs"],
        ),
        case(
            "gen_reach",
            0,
            &["gen", "reach", "--input", "fixtures/reductions/graph.txt"],
        ),
        case(
            "gen_cnf_ar",
            0,
            &[
                "gen",
                "cnf-ar",
                "--input",
                "fixtures/reductions/unsat.cnf",
                "--psi",
                "1,2,3",
            ],
        ),
        case(
            "gen_cnf_ar_padded",
            0,
            &[
                "gen",
                "cnf-ar",
                "--input",
                "fixtures/reductions/unsat.cnf",
                "--padded",
            ],
        ),
        case(
            "gen_random_elbot",
            0,
            &["gen", "random", "--seed", "7", "--require-inconsistent"],
        ),
        case(
            "gen_random_dllite_r",
            0,
            &[
                "gen",
                "random",
                "--seed",
                "7",
                "--dialect",
                "dllite-r",
                "--roles",
                "2",
            ],
        ),
        case(
            "oracle_repairs_roles",
            0,
            &["oracle", "repairs", "--kb", ROLES],
        ),
        case(
            "oracle_verify_nonconvex_a2",
            0,
            &[
                "oracle",
                "verify",
                "--kb",
                NC,
                "--semantics",
                "ar",
                "--query",
                d,
                "--hypothesis",
                "fixtures/nonconvex/a2.abox",
            ],
        ),
    ]
}
