//! EL⊥ normalization and completion-based saturation.
//!
//! Normal forms (A, B concept names, `Top` or `Bot`):
//! `A ⊑ B`, `A1 ⊓ A2 ⊑ B`, `A ⊑ ∃r.B`, `∃r.A ⊑ B`.
//! Saturation runs over the ABox individuals plus one shared witness element
//! per existential filler; a witness for `Top` is always present so that an
//! incoherent TBox shows up as inconsistency of every ABox.

use std::collections::{HashMap, HashSet};

use crate::model::{Assertion, Axiom, Concept};

pub(crate) const TOP: u32 = 0;
pub(crate) const BOT: u32 = 1;

/// A normalized EL⊥ rule over names. Fresh internal names start with `__n`
/// (normalization) or `__q` (query gadgets).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElRule {
    Sub {
        lhs: String,
        rhs: String,
    },
    Conj {
        left: String,
        right: String,
        rhs: String,
    },
    ExistsRight {
        lhs: String,
        role: String,
        filler: String,
    },
    ExistsLeft {
        role: String,
        filler: String,
        rhs: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Rule {
    Sub(u32, u32),
    Conj(u32, u32, u32),
    ExistsRight(u32, u32, u32),
    ExistsLeft(u32, u32, u32),
}

#[derive(Debug, Clone, Default)]
struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

impl Interner {
    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), id);
        id
    }

    fn get(&self, name: &str) -> Option<u32> {
        self.ids.get(name).copied()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ElTBox {
    concepts: Interner,
    roles: Interner,
    rules: Vec<Rule>,
    fresh_counter: usize,
    sub: Vec<Vec<u32>>,
    conj: Vec<Vec<(u32, u32)>>,
    exists_right: Vec<Vec<(u32, u32)>>,
    exists_left: Vec<Vec<(u32, u32)>>,
    coherent: bool,
}

impl ElTBox {
    pub(crate) fn new(tbox: &[Axiom]) -> Self {
        let mut concepts = Interner::default();
        concepts.intern("Top");
        concepts.intern("Bot");
        let mut t = ElTBox {
            concepts,
            roles: Interner::default(),
            rules: Vec::new(),
            fresh_counter: 0,
            sub: Vec::new(),
            conj: Vec::new(),
            exists_right: Vec::new(),
            exists_left: Vec::new(),
            coherent: true,
        };
        for ax in tbox {
            if let Axiom::ConceptInclusion(l, r) = ax {
                t.add_inclusion(l, r, "__n");
            }
        }
        t.reindex();
        t
    }

    /// Copy of this TBox extended with `query ⊑ __q0`; returns the id of the
    /// fresh query name.
    pub(crate) fn with_query(&self, query: &Concept) -> (ElTBox, u32) {
        let mut t = self.clone();
        let q = t.fresh("__q");
        t.add_lhs_into(query, q, "__q");
        t.reindex();
        (t, q)
    }

    pub(crate) fn is_coherent(&self) -> bool {
        self.coherent
    }

    pub(crate) fn rules(&self) -> Vec<ElRule> {
        let c = |id: u32| self.concepts.names[id as usize].clone();
        let r = |id: u32| self.roles.names[id as usize].clone();
        let mut out: Vec<ElRule> = self
            .rules
            .iter()
            .map(|rule| match *rule {
                Rule::Sub(a, b) => ElRule::Sub {
                    lhs: c(a),
                    rhs: c(b),
                },
                Rule::Conj(a, b, x) => ElRule::Conj {
                    left: c(a),
                    right: c(b),
                    rhs: c(x),
                },
                Rule::ExistsRight(a, role, b) => ElRule::ExistsRight {
                    lhs: c(a),
                    role: r(role),
                    filler: c(b),
                },
                Rule::ExistsLeft(role, a, b) => ElRule::ExistsLeft {
                    role: r(role),
                    filler: c(a),
                    rhs: c(b),
                },
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn fresh(&mut self, prefix: &str) -> u32 {
        loop {
            let name = format!("{prefix}{}", self.fresh_counter);
            self.fresh_counter += 1;
            if self.concepts.get(&name).is_none() {
                return self.concepts.intern(&name);
            }
        }
    }

    fn add_inclusion(&mut self, lhs: &Concept, rhs: &Concept, prefix: &str) {
        if *lhs == Concept::Bot {
            return;
        }
        match rhs {
            Concept::Name(_) | Concept::Bot | Concept::Top => {
                let target = self.atom_id(rhs);
                if target != TOP {
                    self.add_lhs_into(lhs, target, prefix);
                }
            }
            _ => {
                let a = self.lhs_name(lhs, prefix);
                self.add_rhs(a, rhs, prefix);
            }
        }
    }

    fn atom_id(&mut self, c: &Concept) -> u32 {
        match c {
            Concept::Top => TOP,
            Concept::Bot => BOT,
            Concept::Name(n) => self.concepts.intern(n),
            _ => unreachable!("atom_id on complex concept"),
        }
    }

    /// Emits rules for `c ⊑ target`.
    fn add_lhs_into(&mut self, c: &Concept, target: u32, prefix: &str) {
        match c {
            Concept::Top | Concept::Bot | Concept::Name(_) => {
                let a = self.atom_id(c);
                if a != BOT && a != target {
                    self.rules.push(Rule::Sub(a, target));
                }
            }
            Concept::And(parts) => {
                let ids: Vec<u32> = parts.iter().map(|p| self.lhs_name(p, prefix)).collect();
                if ids.len() == 1 {
                    if ids[0] != target {
                        self.rules.push(Rule::Sub(ids[0], target));
                    }
                    return;
                }
                let mut acc = ids[0];
                for (i, &next) in ids.iter().enumerate().skip(1) {
                    let out = if i + 1 == ids.len() {
                        target
                    } else {
                        self.fresh(prefix)
                    };
                    self.rules.push(Rule::Conj(acc, next, out));
                    acc = out;
                }
            }
            Concept::Exists(r, filler) => {
                let a = self.lhs_name(filler, prefix);
                let role = self.roles.intern(&r.name);
                self.rules.push(Rule::ExistsLeft(role, a, target));
            }
            Concept::Not(_) => unreachable!("negation in EL⊥ input"),
        }
    }

    /// A name `X` with `c ⊑ X` (`c` itself when already atomic).
    fn lhs_name(&mut self, c: &Concept, prefix: &str) -> u32 {
        match c {
            Concept::Top | Concept::Bot | Concept::Name(_) => self.atom_id(c),
            _ => {
                let x = self.fresh(prefix);
                self.add_lhs_into(c, x, prefix);
                x
            }
        }
    }

    /// Emits rules for `a ⊑ c`.
    fn add_rhs(&mut self, a: u32, c: &Concept, prefix: &str) {
        match c {
            Concept::Top => {}
            Concept::Bot | Concept::Name(_) => {
                let b = self.atom_id(c);
                if a != b {
                    self.rules.push(Rule::Sub(a, b));
                }
            }
            Concept::And(parts) => parts.iter().for_each(|p| self.add_rhs(a, p, prefix)),
            Concept::Exists(r, filler) => {
                let b = match &**filler {
                    f @ (Concept::Top | Concept::Bot | Concept::Name(_)) => self.atom_id(f),
                    f => {
                        let x = self.fresh(prefix);
                        self.add_rhs(x, f, prefix);
                        x
                    }
                };
                let role = self.roles.intern(&r.name);
                self.rules.push(Rule::ExistsRight(a, role, b));
            }
            Concept::Not(_) => unreachable!("negation in EL⊥ input"),
        }
    }

    fn reindex(&mut self) {
        let n = self.concepts.names.len();
        self.sub = vec![Vec::new(); n];
        self.conj = vec![Vec::new(); n];
        self.exists_right = vec![Vec::new(); n];
        self.exists_left = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &rule in &self.rules {
            if !seen.insert(rule) {
                continue;
            }
            match rule {
                Rule::Sub(a, b) => self.sub[a as usize].push(b),
                Rule::Conj(a, b, x) => {
                    self.conj[a as usize].push((b, x));
                    if a != b {
                        self.conj[b as usize].push((a, x));
                    }
                }
                Rule::ExistsRight(a, r, b) => self.exists_right[a as usize].push((r, b)),
                Rule::ExistsLeft(r, a, b) => self.exists_left[a as usize].push((r, b)),
            }
        }
        let coherent = {
            let mut c = Completion::new(self, false);
            let w = c.witness(TOP);
            c.run();
            !c.has(w, BOT)
        };
        self.coherent = coherent;
    }

    /// Saturates the given assertions. `relaxed` ignores `Bot` entirely.
    /// `extra_individual` gets an element even if it occurs in no assertion.
    pub(crate) fn saturate<'t, 'a>(
        &'t self,
        abox: impl IntoIterator<Item = &'a Assertion>,
        extra_individual: Option<&str>,
        relaxed: bool,
    ) -> Saturated<'t, 'a> {
        let mut c = Completion::new(self, relaxed);
        let mut individuals: HashMap<&'a str, usize> = HashMap::new();
        let mut told_unknown: HashSet<(&'a str, usize)> = HashSet::new();
        for a in abox {
            match a {
                Assertion::Concept {
                    concept,
                    individual,
                } => {
                    let x = *individuals
                        .entry(individual)
                        .or_insert_with(|| c.new_element(None));
                    match self.concepts.get(concept) {
                        Some(id) => c.push_label(x, id),
                        None => {
                            told_unknown.insert((concept.as_str(), x));
                        }
                    }
                }
                Assertion::Role {
                    role,
                    subject,
                    object,
                } => {
                    let x = *individuals
                        .entry(subject)
                        .or_insert_with(|| c.new_element(None));
                    let y = *individuals
                        .entry(object)
                        .or_insert_with(|| c.new_element(None));
                    if let Some(r) = self.roles.get(role) {
                        c.push_link(r, x, y);
                    }
                }
            }
        }
        let extra = extra_individual
            .filter(|ind| !individuals.contains_key(ind))
            .map(|ind| (ind.to_string(), c.new_element(None)));
        c.run();
        let mut consistent = relaxed || self.coherent;
        if consistent && !relaxed {
            consistent = !individuals
                .values()
                .chain(extra.as_ref().map(|(_, x)| x))
                .any(|&x| c.has(x, BOT));
        }
        Saturated {
            completion: c,
            individuals,
            extra,
            told_unknown,
            consistent,
        }
    }
}

pub(crate) struct Saturated<'t, 'a> {
    completion: Completion<'t>,
    individuals: HashMap<&'a str, usize>,
    extra: Option<(String, usize)>,
    told_unknown: HashSet<(&'a str, usize)>,
    pub(crate) consistent: bool,
}

impl Saturated<'_, '_> {
    fn element(&self, individual: &str) -> Option<usize> {
        match self.individuals.get(individual) {
            Some(&x) => Some(x),
            None => self
                .extra
                .as_ref()
                .filter(|(n, _)| n == individual)
                .map(|&(_, x)| x),
        }
    }

    pub(crate) fn has_concept(&self, individual: &str, concept: &str) -> bool {
        let Some(x) = self.element(individual) else {
            return false;
        };
        match self.completion.tbox.concepts.get(concept) {
            Some(id) => self.completion.has(x, id),
            None => self.told_unknown.contains(&(concept, x)),
        }
    }

    pub(crate) fn has_id(&self, individual: &str, id: u32) -> bool {
        self.element(individual)
            .is_some_and(|x| self.completion.has(x, id))
    }
}

enum Task {
    Label(usize, u32),
    Link(u32, usize, usize),
}

struct Completion<'a> {
    tbox: &'a ElTBox,
    relaxed: bool,
    labels: Vec<Vec<bool>>,
    preds: Vec<Vec<(u32, usize)>>,
    links: HashSet<(u32, usize, usize)>,
    witness: HashMap<u32, usize>,
    queue: Vec<Task>,
}

impl<'a> Completion<'a> {
    fn new(tbox: &'a ElTBox, relaxed: bool) -> Self {
        Completion {
            tbox,
            relaxed,
            labels: Vec::new(),
            preds: Vec::new(),
            links: HashSet::new(),
            witness: HashMap::new(),
            queue: Vec::new(),
        }
    }

    fn has(&self, x: usize, c: u32) -> bool {
        self.labels[x][c as usize]
    }

    fn new_element(&mut self, initial: Option<u32>) -> usize {
        let x = self.labels.len();
        self.labels
            .push(vec![false; self.tbox.concepts.names.len()]);
        self.preds.push(Vec::new());
        self.push_label(x, TOP);
        if let Some(c) = initial {
            self.push_label(x, c);
        }
        x
    }

    fn witness(&mut self, filler: u32) -> usize {
        if let Some(&w) = self.witness.get(&filler) {
            return w;
        }
        let w = self.new_element(Some(filler));
        self.witness.insert(filler, w);
        w
    }

    fn push_label(&mut self, x: usize, c: u32) {
        if self.relaxed && c == BOT {
            return;
        }
        self.queue.push(Task::Label(x, c));
    }

    fn push_link(&mut self, r: u32, x: usize, y: usize) {
        self.queue.push(Task::Link(r, x, y));
    }

    fn run(&mut self) {
        let tbox = self.tbox;
        while let Some(task) = self.queue.pop() {
            match task {
                Task::Label(x, c) => {
                    if self.labels[x][c as usize] {
                        continue;
                    }
                    self.labels[x][c as usize] = true;
                    for &b in &tbox.sub[c as usize] {
                        self.push_label(x, b);
                    }
                    for &(other, b) in &tbox.conj[c as usize] {
                        if self.labels[x][other as usize] {
                            self.push_label(x, b);
                        }
                    }
                    for &(r, b) in &tbox.exists_right[c as usize] {
                        let w = self.witness(b);
                        self.push_link(r, x, w);
                    }
                    for i in 0..self.preds[x].len() {
                        let (r, y) = self.preds[x][i];
                        if c == BOT {
                            self.push_label(y, BOT);
                        }
                        for &(r2, b) in &tbox.exists_left[c as usize] {
                            if r2 == r {
                                self.push_label(y, b);
                            }
                        }
                    }
                }
                Task::Link(r, x, y) => {
                    if !self.links.insert((r, x, y)) {
                        continue;
                    }
                    self.preds[y].push((r, x));
                    for c in 0..self.labels[y].len() {
                        if !self.labels[y][c] {
                            continue;
                        }
                        if c as u32 == BOT {
                            self.push_label(x, BOT);
                        }
                        for &(r2, b) in &tbox.exists_left[c] {
                            if r2 == r {
                                self.push_label(x, b);
                            }
                        }
                    }
                }
            }
        }
    }
}
