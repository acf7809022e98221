//! DL-Lite_core / DL-Lite_R reasoning by inclusion closure.
//!
//! Basic concepts are indexed as: concept names `0..nc`, then `∃Q` for each
//! role expression `Q` (`2·r` for `r`, `2·r+1` for `r⁻`). The positive
//! closure is reflexive-transitive; negative inclusions are closed under
//! positive rewriting and symmetric. A basic concept or role is unsatisfiable
//! when its closure contains a disjoint pair, when it is subsumed by an
//! unsatisfiable one, or (roles) when either endpoint is unsatisfiable.

use std::collections::{BTreeSet, HashMap};

use crate::model::{Assertion, Axiom, Concept, RoleExpr};

/// A basic concept asserted of an individual, with names not occurring in
/// the TBox kept symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Told<'a> {
    Known(usize),
    UnknownName(&'a str),
    UnknownExists(&'a str, bool),
}

#[derive(Debug, Clone)]
pub(crate) struct LiteTBox {
    concept_ids: HashMap<String, u32>,
    concept_names: Vec<String>,
    role_ids: HashMap<String, u32>,
    role_names: Vec<String>,
    /// `concept_sub[b][c]` iff T ⊨ b ⊑ c.
    concept_sub: Vec<Vec<bool>>,
    role_sub: Vec<Vec<bool>>,
    concept_disj: Vec<Vec<bool>>,
    role_disj: Vec<Vec<bool>>,
    concept_unsat: Vec<bool>,
    role_unsat: Vec<bool>,
}

impl LiteTBox {
    pub(crate) fn new(tbox: &[Axiom]) -> Self {
        let mut t = LiteTBox {
            concept_ids: HashMap::new(),
            concept_names: Vec::new(),
            role_ids: HashMap::new(),
            role_names: Vec::new(),
            concept_sub: Vec::new(),
            role_sub: Vec::new(),
            concept_disj: Vec::new(),
            role_disj: Vec::new(),
            concept_unsat: Vec::new(),
            role_unsat: Vec::new(),
        };
        // Intern first so that indices are stable before building matrices.
        for ax in tbox {
            match ax {
                Axiom::ConceptInclusion(l, r) => {
                    t.intern_concept(l);
                    t.intern_concept(r);
                }
                Axiom::RoleInclusion(l, r) => {
                    t.intern_role(&l.name);
                    t.intern_role(&r.name);
                }
            }
        }
        let nb = t.n_basic();
        let nq = 2 * t.role_names.len();
        let mut c_edges = vec![Vec::new(); nb];
        let mut r_edges = vec![Vec::new(); nq];
        let mut c_neg = Vec::new();
        let mut r_neg = Vec::new();
        for ax in tbox {
            match ax {
                Axiom::ConceptInclusion(l, r) => {
                    let b = t.basic_index(l).expect("interned");
                    match r {
                        Concept::Not(inner) => {
                            c_neg.push((b, t.basic_index(inner).expect("interned")))
                        }
                        other => c_edges[b].push(t.basic_index(other).expect("interned")),
                    }
                }
                Axiom::RoleInclusion(l, r) => {
                    let q1 = t.role_index(l).expect("interned");
                    let q2 = t.role_index(r).expect("interned");
                    if r.negated {
                        r_neg.push((q1, q2));
                        r_neg.push((q1 ^ 1, q2 ^ 1));
                    } else {
                        r_edges[q1].push(q2);
                        r_edges[q1 ^ 1].push(q2 ^ 1);
                    }
                }
            }
        }
        t.role_sub = reflexive_transitive(&r_edges);
        let nc = t.concept_names.len();
        for q in 0..nq {
            for q2 in 0..nq {
                if q != q2 && t.role_sub[q][q2] {
                    c_edges[nc + q].push(nc + q2);
                }
            }
        }
        t.concept_sub = reflexive_transitive(&c_edges);

        t.concept_disj = vec![vec![false; nb]; nb];
        for &(b1, b2) in &c_neg {
            for x in 0..nb {
                if !t.concept_sub[x][b1] {
                    continue;
                }
                for y in 0..nb {
                    if t.concept_sub[y][b2] {
                        t.concept_disj[x][y] = true;
                        t.concept_disj[y][x] = true;
                    }
                }
            }
        }
        t.role_disj = vec![vec![false; nq]; nq];
        for &(q1, q2) in &r_neg {
            for x in 0..nq {
                if !t.role_sub[x][q1] {
                    continue;
                }
                for y in 0..nq {
                    if t.role_sub[y][q2] {
                        t.role_disj[x][y] = true;
                        t.role_disj[y][x] = true;
                    }
                }
            }
        }

        t.concept_unsat = (0..nb).map(|b| t.concept_disj[b][b]).collect();
        t.role_unsat = (0..nq).map(|q| t.role_disj[q][q]).collect();
        loop {
            let mut changed = false;
            for q in 0..nq {
                if t.role_unsat[q] {
                    continue;
                }
                let bad = t.concept_unsat[nc + q]
                    || t.concept_unsat[nc + (q ^ 1)]
                    || t.role_unsat[q ^ 1]
                    || (0..nq).any(|q2| t.role_sub[q][q2] && t.role_unsat[q2]);
                if bad {
                    t.role_unsat[q] = true;
                    changed = true;
                }
            }
            for b in 0..nb {
                if t.concept_unsat[b] {
                    continue;
                }
                let bad = (b >= nc && t.role_unsat[b - nc])
                    || (0..nb).any(|c| t.concept_sub[b][c] && t.concept_unsat[c]);
                if bad {
                    t.concept_unsat[b] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        t
    }

    fn n_basic(&self) -> usize {
        self.concept_names.len() + 2 * self.role_names.len()
    }

    fn intern_role(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.role_ids.get(name) {
            return id;
        }
        let id = self.role_names.len() as u32;
        self.role_names.push(name.to_string());
        self.role_ids.insert(name.to_string(), id);
        id
    }

    fn intern_concept(&mut self, c: &Concept) {
        match c {
            Concept::Name(n) => {
                if !self.concept_ids.contains_key(n) {
                    self.concept_ids
                        .insert(n.clone(), self.concept_names.len() as u32);
                    self.concept_names.push(n.clone());
                }
            }
            Concept::Exists(r, _) => {
                self.intern_role(&r.name);
            }
            Concept::Not(inner) => self.intern_concept(inner),
            _ => {}
        }
    }

    fn role_index(&self, r: &RoleExpr) -> Option<usize> {
        self.role_ids
            .get(&r.name)
            .map(|&id| 2 * id as usize + r.inverse as usize)
    }

    fn basic_index(&self, c: &Concept) -> Option<usize> {
        match c {
            Concept::Name(n) => self.concept_ids.get(n).map(|&id| id as usize),
            Concept::Exists(r, _) => self.role_index(r).map(|q| self.concept_names.len() + q),
            _ => None,
        }
    }

    pub(crate) fn is_coherent(&self) -> bool {
        // Every ABox is consistent with a DL-Lite TBox when empty.
        true
    }

    fn basic_name(&self, b: usize) -> String {
        let nc = self.concept_names.len();
        if b < nc {
            self.concept_names[b].clone()
        } else {
            let q = b - nc;
            let r = &self.role_names[q / 2];
            if q % 2 == 1 {
                format!("(some (inv {r}))")
            } else {
                format!("(some {r})")
            }
        }
    }

    /// Closure as `(sub, super)` pairs over basic concepts, excluding
    /// reflexive pairs, rendered in document syntax.
    pub(crate) fn positive_closure(&self) -> BTreeSet<(String, String)> {
        let nb = self.n_basic();
        let mut out = BTreeSet::new();
        for b in 0..nb {
            for c in 0..nb {
                if b != c && self.concept_sub[b][c] {
                    out.insert((self.basic_name(b), self.basic_name(c)));
                }
            }
        }
        out
    }

    /// Negative closure as ordered pairs `(B1, B2)` meaning `B1 ⊑ ¬B2`.
    pub(crate) fn negative_closure(&self) -> BTreeSet<(String, String)> {
        let nb = self.n_basic();
        let mut out = BTreeSet::new();
        for b in 0..nb {
            for c in 0..nb {
                if self.concept_disj[b][c] {
                    out.insert((self.basic_name(b), self.basic_name(c)));
                }
            }
        }
        out
    }

    fn told_role(&self, role: &str, inverse: bool) -> Option<usize> {
        self.role_ids
            .get(role)
            .map(|&id| 2 * id as usize + inverse as usize)
    }

    fn told_basics<'a>(&self, a: &'a Assertion) -> Vec<(&'a str, Told<'a>)> {
        match a {
            Assertion::Concept {
                concept,
                individual,
            } => {
                let t = match self.concept_ids.get(concept) {
                    Some(&id) => Told::Known(id as usize),
                    None => Told::UnknownName(concept),
                };
                vec![(individual.as_str(), t)]
            }
            Assertion::Role {
                role,
                subject,
                object,
            } => {
                let nc = self.concept_names.len();
                let side = |inverse: bool| match self.told_role(role, inverse) {
                    Some(q) => Told::Known(nc + q),
                    None => Told::UnknownExists(role, inverse),
                };
                vec![
                    (subject.as_str(), side(false)),
                    (object.as_str(), side(true)),
                ]
            }
        }
    }

    /// Consistency check. Violations involve at most two assertions.
    pub(crate) fn is_consistent<'a>(&self, abox: impl IntoIterator<Item = &'a Assertion>) -> bool {
        let mut basics: HashMap<&str, Vec<usize>> = HashMap::new();
        let mut roles: HashMap<(&str, &str), Vec<usize>> = HashMap::new();
        for a in abox {
            for (ind, told) in self.told_basics(a) {
                if let Told::Known(b) = told {
                    if self.concept_unsat[b] {
                        return false;
                    }
                    let entry = basics.entry(ind).or_default();
                    if entry.iter().any(|&other| self.concept_disj[b][other]) {
                        return false;
                    }
                    entry.push(b);
                }
            }
            if let Assertion::Role {
                role,
                subject,
                object,
            } = a
            {
                if let Some(q) = self.told_role(role, false) {
                    for (pair, q) in [
                        ((subject.as_str(), object.as_str()), q),
                        ((object.as_str(), subject.as_str()), q ^ 1),
                    ] {
                        let entry = roles.entry(pair).or_default();
                        if entry.iter().any(|&other| self.role_disj[q][other])
                            || self.role_disj[q][q]
                        {
                            return false;
                        }
                        entry.push(q);
                    }
                }
            }
        }
        true
    }

    /// Classical entailment of a basic-concept query, ignoring negative
    /// inclusions (exact on consistent ABoxes).
    pub(crate) fn entails_positive<'a>(
        &self,
        abox: impl IntoIterator<Item = &'a Assertion>,
        query: &Concept,
        individual: &str,
    ) -> bool {
        let target = self.basic_index(query);
        abox.into_iter().any(|a| {
            self.told_basics(a).into_iter().any(|(ind, told)| {
                ind == individual
                    && match (told, target) {
                        (Told::Known(b), Some(t)) => self.concept_sub[b][t],
                        (Told::UnknownName(n), None) => query.as_name() == Some(n),
                        (Told::UnknownExists(r, inv), None) => {
                            matches!(query, Concept::Exists(q, _) if q.name == r && q.inverse == inv)
                        }
                        _ => false,
                    }
            })
        })
    }
}

fn reflexive_transitive(edges: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = edges.len();
    let mut reach = vec![vec![false; n]; n];
    for (start, row) in reach.iter_mut().enumerate() {
        let mut stack = vec![start];
        row[start] = true;
        while let Some(x) = stack.pop() {
            for &y in &edges[x] {
                if !row[y] {
                    row[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Concept {
        Concept::name(s)
    }

    #[test]
    fn negative_closure_step() {
        let t = LiteTBox::new(&[
            Axiom::sub(n("A"), n("B")),
            Axiom::sub(n("B"), Concept::not(n("C"))),
        ]);
        let neg = t.negative_closure();
        assert!(neg.contains(&("A".into(), "C".into())));
        assert!(neg.contains(&("C".into(), "A".into())));
        assert!(neg.contains(&("B".into(), "C".into())));
    }

    #[test]
    fn self_disjoint_name_is_unsatisfiable() {
        let t = LiteTBox::new(&[Axiom::sub(n("A"), Concept::not(n("A")))]);
        assert!(!t.is_consistent([Assertion::concept("A", "a")].iter()));
        assert!(t.is_consistent([Assertion::concept("B", "a")].iter()));
    }

    #[test]
    fn unsatisfiable_through_anonymous_successor() {
        let p = RoleExpr::named("p");
        let t = LiteTBox::new(&[
            Axiom::sub(n("A"), Concept::exists(p.clone())),
            Axiom::sub(Concept::exists(RoleExpr::inverse_of("p")), n("C")),
            Axiom::sub(Concept::exists(RoleExpr::inverse_of("p")), n("D")),
            Axiom::sub(n("C"), Concept::not(n("D"))),
        ]);
        assert!(!t.is_consistent([Assertion::concept("A", "a")].iter()));
        assert!(!t.is_consistent([Assertion::role("p", "a", "b")].iter()));
    }

    #[test]
    fn role_disjointness_and_reflexive_edge() {
        let t = LiteTBox::new(&[Axiom::RoleInclusion(
            RoleExpr::named("r"),
            RoleExpr::inverse_of("r").negate(),
        )]);
        assert!(!t.is_consistent([Assertion::role("r", "a", "a")].iter()));
        assert!(t.is_consistent([Assertion::role("r", "a", "b")].iter()));
        assert!(!t.is_consistent(
            [
                Assertion::role("r", "a", "b"),
                Assertion::role("r", "b", "a")
            ]
            .iter()
        ));
    }

    #[test]
    fn role_inclusion_lifts_to_existentials() {
        let t = LiteTBox::new(&[
            Axiom::RoleInclusion(RoleExpr::named("r"), RoleExpr::named("s")),
            Axiom::sub(Concept::exists(RoleExpr::inverse_of("s")), n("B")),
        ]);
        let abox = [Assertion::role("r", "a", "b")];
        assert!(t.entails_positive(abox.iter(), &n("B"), "b"));
        assert!(!t.entails_positive(abox.iter(), &n("B"), "a"));
        assert!(t.entails_positive(abox.iter(), &Concept::exists(RoleExpr::named("s")), "a"));
    }
}
