//! Golden-file tests: JSON output over the fixture corpus is pinned byte for
//! byte. Set `ABDUCE_BLESS=1` to rewrite the golden files.

mod common;

use common::{golden_cases, run_case, workspace_root};

#[test]
fn golden_outputs_match() {
    let root = workspace_root();
    let bless = std::env::var_os("ABDUCE_BLESS").is_some();
    let mut failures = Vec::new();
    for case in golden_cases() {
        let out = run_case(&case);
        assert_eq!(
            out.code, case.code,
            "{}: exit code, stderr: {}",
            case.name, out.stderr
        );
        let path = root
            .join("fixtures/golden")
            .join(format!("{}.json", case.name));
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want =
            std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if want != out.stdout {
            failures.push(format!(
                "{}\n  want: {}  got:  {}",
                case.name, want, out.stdout
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "golden mismatches:\n{}",
        failures.join("\n")
    );
}

#[test]
fn repeated_runs_are_identical() {
    for case in golden_cases() {
        assert_eq!(
            run_case(&case).stdout,
            run_case(&case).stdout,
            "{}",
            case.name
        );
    }
}
