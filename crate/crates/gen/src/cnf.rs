//! CNF formulas, DIMACS I/O and truth-table reasoning.

use std::collections::BTreeSet;

use crate::GenError;

/// A literal over variable index `var` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    fn holds(self, assignment: u64) -> bool {
        (assignment >> self.var & 1 == 1) == self.positive
    }
}

pub type Clause = BTreeSet<Lit>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    /// Variable names, `x1, x2, ...` for DIMACS input.
    pub variables: Vec<String>,
    pub clauses: Vec<Clause>,
}

/// Truth tables are enumerated over at most this many variables.
pub const MAX_TRUTH_TABLE_VARS: usize = 24;

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<Clause>) -> Self {
        CnfFormula {
            variables: (1..=n_vars).map(|i| format!("x{i}")).collect(),
            clauses,
        }
    }

    /// Builds from DIMACS-style signed integers.
    pub fn from_ints(n_vars: usize, clauses: &[&[i32]]) -> Self {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| Lit {
                        var: l.unsigned_abs() as usize - 1,
                        positive: l > 0,
                    })
                    .collect()
            })
            .collect();
        CnfFormula::new(n_vars, clauses)
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn eval(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    fn eval_subset(&self, subset: &[usize], assignment: u64) -> bool {
        subset
            .iter()
            .all(|&j| self.clauses[j].iter().any(|l| l.holds(assignment)))
    }

    /// Some satisfying assignment (bit `i` is variable `i`), by truth table.
    pub fn satisfying_assignment(&self) -> Option<u64> {
        assert!(
            self.n_vars() <= MAX_TRUTH_TABLE_VARS,
            "truth table too large"
        );
        (0u64..1 << self.n_vars()).find(|&a| self.eval(a))
    }

    pub fn is_satisfiable(&self) -> bool {
        self.satisfying_assignment().is_some()
    }

    fn subset_satisfiable(&self, subset: &[usize]) -> bool {
        (0u64..1 << self.n_vars()).any(|a| self.eval_subset(subset, a))
    }

    /// `subset` (clause indices) is unsatisfiable and every proper subset
    /// is satisfiable. Since satisfiability is antimonotone it suffices to
    /// drop one clause at a time.
    pub fn is_mus(&self, subset: &[usize]) -> bool {
        if self.subset_satisfiable(subset) {
            return false;
        }
        (0..subset.len()).all(|k| {
            let smaller: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &j)| j)
                .collect();
            self.subset_satisfiable(&smaller)
        })
    }

    pub fn parse_dimacs(text: &str) -> Result<Self, GenError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Clause::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                match parts.as_slice() {
                    ["cnf", v, c] => {
                        let v = v
                            .parse()
                            .map_err(|_| GenError::format(lineno, "bad variable count"))?;
                        let c = c
                            .parse()
                            .map_err(|_| GenError::format(lineno, "bad clause count"))?;
                        header = Some((v, c));
                    }
                    _ => {
                        return Err(GenError::format(
                            lineno,
                            "expected `p cnf <vars> <clauses>`",
                        ))
                    }
                }
                continue;
            }
            let (n_vars, _) =
                header.ok_or_else(|| GenError::format(lineno, "clause before header"))?;
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| GenError::format(lineno, "bad literal"))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = lit.unsigned_abs() as usize;
                if var > n_vars {
                    return Err(GenError::format(
                        lineno,
                        "literal references an undeclared variable",
                    ));
                }
                current.insert(Lit {
                    var: var - 1,
                    positive: lit > 0,
                });
            }
        }
        let (n_vars, n_clauses) = header.ok_or_else(|| GenError::format(0, "missing header"))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != n_clauses {
            return Err(GenError::format(0, "clause count does not match header"));
        }
        Ok(CnfFormula::new(n_vars, clauses))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars(), self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let v = l.var as i64 + 1;
                out.push_str(&format!("{} ", if l.positive { v } else { -v }));
            }
            out.push_str("0\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truth_table() {
        assert!(CnfFormula::from_ints(1, &[&[1]]).is_satisfiable());
        assert!(!CnfFormula::from_ints(1, &[&[1], &[-1]]).is_satisfiable());
        assert!(!CnfFormula::from_ints(2, &[&[1, 2], &[-1], &[-2]]).is_satisfiable());
    }

    #[test]
    fn mus() {
        let f = CnfFormula::from_ints(2, &[&[1], &[-1], &[2]]);
        assert!(f.is_mus(&[0, 1]));
        assert!(!f.is_mus(&[0, 1, 2]));
        assert!(!f.is_mus(&[0, 2]));
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::parse_dimacs("c comment\np cnf 3 2\n1 -3 0\n2\n3 0\n").unwrap();
        assert_eq!(f.clauses.len(), 2);
        assert_eq!(f.clauses[1], [Lit::pos(1), Lit::pos(2)].into());
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
        assert!(CnfFormula::parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 1 2\n1 0\n").is_err());
    }
}
