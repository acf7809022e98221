//! Directed graphs with a source and a target.
//!
//! Text form: a header line `s t`, then one edge `v1 v2` per line. Vertices
//! are the names mentioned anywhere. `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::GenError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
    pub source: String,
    pub target: String,
}

fn valid_vertex(v: &str) -> bool {
    !v.is_empty() && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DiGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = String>,
        edges: impl IntoIterator<Item = (String, String)>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Result<Self, GenError> {
        let (source, target) = (source.into(), target.into());
        let edges: BTreeSet<(String, String)> = edges.into_iter().collect();
        let mut vertices: BTreeSet<String> = vertices.into_iter().collect();
        vertices.insert(source.clone());
        vertices.insert(target.clone());
        for (a, b) in &edges {
            vertices.insert(a.clone());
            vertices.insert(b.clone());
        }
        if let Some(bad) = vertices.iter().find(|v| !valid_vertex(v)) {
            return Err(GenError::Invalid(format!(
                "vertex name `{bad}` must match [A-Za-z0-9_]+"
            )));
        }
        Ok(DiGraph {
            vertices,
            edges,
            source,
            target,
        })
    }

    pub fn is_reachable(&self) -> bool {
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
        }
        let mut seen = BTreeSet::from([self.source.as_str()]);
        let mut queue = VecDeque::from([self.source.as_str()]);
        while let Some(v) = queue.pop_front() {
            if v == self.target {
                return true;
            }
            for &w in adj.get(v).into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        false
    }

    pub fn parse(text: &str) -> Result<Self, GenError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let pair = |(i, l): (usize, &str)| -> Result<(String, String), GenError> {
            match l.split_whitespace().collect::<Vec<_>>().as_slice() {
                [a, b] => Ok((a.to_string(), b.to_string())),
                _ => Err(GenError::format(i, "expected two vertex names")),
            }
        };
        let (s, t) = pair(
            lines
                .next()
                .ok_or_else(|| GenError::format(0, "missing `s t` header"))?,
        )?;
        let edges = lines.map(pair).collect::<Result<Vec<_>, _>>()?;
        DiGraph::new([], edges, s, t)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.source, self.target);
        for (a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}
