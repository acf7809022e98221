//! Two-block QBFs `∃Y ∀Z ¬φ` with φ in CNF.
//!
//! QDIMACS input must have exactly one `e` block followed by one `a` block.
//! The matrix is read as φ and the instance is its negation under the
//! quantifier prefix: `∃Y ∀Z ¬φ`.

use crate::cnf::CnfFormula;
use crate::GenError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qbf2Formula {
    /// Variable indices of the existential block.
    pub exists: Vec<usize>,
    /// Variable indices of the universal block.
    pub forall: Vec<usize>,
    pub matrix: CnfFormula,
}

impl Qbf2Formula {
    pub fn new(
        exists: Vec<usize>,
        forall: Vec<usize>,
        matrix: CnfFormula,
    ) -> Result<Self, GenError> {
        if exists.is_empty() || forall.is_empty() {
            return Err(GenError::Invalid(
                "both quantifier blocks must be non-empty".into(),
            ));
        }
        if exists.iter().any(|v| forall.contains(v)) {
            return Err(GenError::Invalid("quantifier blocks overlap".into()));
        }
        let n = matrix.n_vars();
        if exists.iter().chain(&forall).any(|&v| v >= n) {
            return Err(GenError::Invalid("quantified variable not declared".into()));
        }
        let mut all: Vec<usize> = exists.iter().chain(&forall).copied().collect();
        all.sort();
        all.dedup();
        if all.len() != n {
            return Err(GenError::Invalid(
                "every variable must be quantified exactly once".into(),
            ));
        }
        Ok(Qbf2Formula {
            exists,
            forall,
            matrix,
        })
    }

    fn assignment(block: &[usize], bits: u64) -> u64 {
        block
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &v)| acc | (bits >> i & 1) << v)
    }

    /// An assignment to `Y` (bit `i` is `exists[i]`) such that `¬φ` holds
    /// for every assignment to `Z`.
    pub fn witness(&self) -> Option<u64> {
        (0u64..1 << self.exists.len()).find(|&y| {
            let ya = Self::assignment(&self.exists, y);
            (0u64..1 << self.forall.len())
                .all(|z| !self.matrix.eval(ya | Self::assignment(&self.forall, z)))
        })
    }

    pub fn is_valid(&self) -> bool {
        self.witness().is_some()
    }

    pub fn parse_qdimacs(text: &str) -> Result<Self, GenError> {
        let mut blocks: Vec<(char, Vec<usize>)> = Vec::new();
        let mut cnf_lines = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let t = line.trim();
            let kind = t.chars().next();
            match kind {
                Some(q @ ('e' | 'a')) => {
                    let mut vars = Vec::new();
                    for tok in t[1..].split_whitespace() {
                        let v: usize = tok
                            .parse()
                            .map_err(|_| GenError::format(lineno, "bad quantified variable"))?;
                        if v == 0 {
                            break;
                        }
                        vars.push(v - 1);
                    }
                    blocks.push((q, vars));
                }
                _ => cnf_lines.push(line),
            }
        }
        let (exists, forall) = match blocks.as_slice() {
            [('e', e), ('a', a)] => (e.clone(), a.clone()),
            _ => {
                return Err(GenError::Invalid(
                    "expected exactly one `e` block followed by one `a` block".into(),
                ))
            }
        };
        let matrix = CnfFormula::parse_dimacs(&cnf_lines.join("\n"))?;
        Qbf2Formula::new(exists, forall, matrix)
    }

    pub fn to_qdimacs(&self) -> String {
        let mut dimacs = self.matrix.to_dimacs();
        let header_end = dimacs.find('\n').map_or(dimacs.len(), |i| i + 1);
        let block = |q: char, vars: &[usize]| {
            let mut s = q.to_string();
            for v in vars {
                s.push_str(&format!(" {}", v + 1));
            }
            s.push_str(" 0\n");
            s
        };
        let prefix = block('e', &self.exists) + &block('a', &self.forall);
        dimacs.insert_str(header_end, &prefix);
        dimacs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qbf(clauses: &[&[i32]]) -> Qbf2Formula {
        // Variable 1 is y, variable 2 is z.
        Qbf2Formula::new(vec![0], vec![1], CnfFormula::from_ints(2, clauses)).unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(qbf(&[&[-1], &[2]]).witness(), Some(1));
        assert!(qbf(&[&[1], &[-1]]).is_valid());
        assert_eq!(qbf(&[&[1, 2], &[1, -2]]).witness(), Some(0));
        assert_eq!(qbf(&[&[1]]).witness(), Some(0));
        // ¬(z) fails for z = 1 whatever y is.
        assert!(!qbf(&[&[2]]).is_valid());
    }

    #[test]
    fn qdimacs_round_trip() {
        let f = Qbf2Formula::parse_qdimacs("p cnf 2 2\ne 1 0\na 2 0\n-1 0\n2 0\n").unwrap();
        assert_eq!(f, qbf(&[&[-1], &[2]]));
        assert_eq!(Qbf2Formula::parse_qdimacs(&f.to_qdimacs()).unwrap(), f);
        assert!(Qbf2Formula::parse_qdimacs("p cnf 2 1\na 2 0\ne 1 0\n1 0\n").is_err());
    }
}
