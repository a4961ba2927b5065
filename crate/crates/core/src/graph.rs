//! Split graphs with a fixed clique/independent-set bipartition.
//!
//! Vertices carry opaque string labels and are addressed internally by dense
//! indices: the clique `K` occupies `0..k` and the independent set `I`
//! occupies `k..n`, each in input order. Adjacency is one bit-set per vertex
//! over the whole index space.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple graph `S` together with a bipartition `(K, I)` where `K` is a
/// clique and `I` is an independent set.
///
/// Values are immutable once built; every constructor checks the split
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitGraph {
    labels: Vec<String>,
    k: usize,
    adj: Vec<FixedBitSet>,
}

/// The open neighborhood of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    pub vertex: usize,
    /// Neighbor indices in increasing order.
    pub members: Vec<usize>,
}

impl Neighborhood {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn labels<'a>(&self, graph: &'a SplitGraph) -> Vec<&'a str> {
        self.members.iter().map(|&v| graph.label(v)).collect()
    }
}

pub(crate) fn check_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || c == ':' || c == '#')
    {
        return Err(Error::InvalidArgument(format!(
            "vertex label `{label}` must be non-empty without whitespace, ':' or '#'"
        )));
    }
    Ok(())
}

impl SplitGraph {
    fn with_partition(k_labels: Vec<String>, i_labels: Vec<String>) -> Result<Self> {
        let k = k_labels.len();
        let mut labels = k_labels;
        labels.extend(i_labels);
        for (idx, label) in labels.iter().enumerate() {
            check_label(label)?;
            if labels[..idx].contains(label) {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, row) in adj.iter_mut().enumerate().take(k) {
            row.insert_range(0..k);
            row.set(u, false);
        }
        Ok(SplitGraph { labels, k, adj })
    }

    /// Builds a split graph from the neighborhood of every `I`-vertex, given
    /// as positions into `k_labels`. Edges inside `K` are implied.
    pub fn from_neighborhoods<N, M>(
        k_labels: Vec<String>,
        i_labels: Vec<String>,
        neighborhoods: N,
    ) -> Result<Self>
    where
        N: IntoIterator<Item = M>,
        M: IntoIterator<Item = usize>,
    {
        let mut graph = Self::with_partition(k_labels, i_labels)?;
        let k = graph.k;
        let mut rows = 0;
        for (p, members) in neighborhoods.into_iter().enumerate() {
            let v = k + p;
            if v >= graph.order() {
                return Err(Error::InvalidArgument(format!(
                    "{} neighborhoods given for {} independent vertices",
                    p + 1,
                    graph.i_len()
                )));
            }
            for x in members {
                if x >= k {
                    return Err(Error::InvalidArgument(format!(
                        "neighbor position {x} of `{}` is outside the clique",
                        graph.labels[v]
                    )));
                }
                graph.set_edge(v, x, true);
            }
            rows = p + 1;
        }
        if rows != graph.i_len() {
            return Err(Error::InvalidArgument(format!(
                "{rows} neighborhoods given for {} independent vertices",
                graph.i_len()
            )));
        }
        Ok(graph)
    }

    /// Builds a split graph from labelled edges. `K`-`K` edges may be listed
    /// or omitted; an `I`-`I` edge is rejected.
    pub fn from_edges<'a, E>(k_labels: Vec<String>, i_labels: Vec<String>, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut graph = Self::with_partition(k_labels, i_labels)?;
        for (a, b) in edges {
            graph.add_labelled_edge(a, b)?;
        }
        Ok(graph)
    }

    fn add_labelled_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        if u == v {
            return Err(Error::Loop(a.to_owned()));
        }
        match (self.is_clique_vertex(u), self.is_clique_vertex(v)) {
            (true, true) => {}
            (false, false) => return Err(Error::IndependentEdge(a.to_owned(), b.to_owned())),
            _ => self.set_edge(u, v, true),
        }
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        self.adj[u].set(v, present);
        self.adj[v].set(u, present);
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// `|K|`.
    pub fn k_len(&self) -> usize {
        self.k
    }

    /// `|I|`.
    pub fn i_len(&self) -> usize {
        self.labels.len() - self.k
    }

    pub fn clique(&self) -> Range<usize> {
        0..self.k
    }

    pub fn independent(&self) -> Range<usize> {
        self.k..self.labels.len()
    }

    pub fn is_clique_vertex(&self, v: usize) -> bool {
        v < self.k
    }

    pub fn is_independent_vertex(&self, v: usize) -> bool {
        v >= self.k && v < self.labels.len()
    }

    /// Global index of the `p`-th independent vertex.
    pub fn i_vertex(&self, p: usize) -> usize {
        debug_assert!(p < self.i_len());
        self.k + p
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn k_labels(&self) -> &[String] {
        &self.labels[..self.k]
    }

    pub fn i_labels(&self) -> &[String] {
        &self.labels[self.k..]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    /// Raw neighbor bit-set of `v`. For `v` in `I` only bits below `k_len()`
    /// can be set.
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighborhood(&self, v: usize) -> Neighborhood {
        Neighborhood {
            vertex: v,
            members: self.adj[v].ones().collect(),
        }
    }

    pub fn neighborhood_of(&self, label: &str) -> Result<Neighborhood> {
        Ok(self.neighborhood(self.vertex(label)?))
    }

    /// `|N_u ∩ N_v|` for two distinct independent vertices.
    pub fn eta(&self, u: usize, v: usize) -> Result<usize> {
        for w in [u, v] {
            if w >= self.order() {
                return Err(Error::UnknownVertex(format!("#{w}")));
            }
            if !self.is_independent_vertex(w) {
                return Err(Error::NotIndependent(self.labels[w].clone()));
            }
        }
        if u == v {
            return Err(Error::SameVertex(self.labels[u].clone()));
        }
        Ok(self.adj[u].intersection_count(&self.adj[v]))
    }

    pub fn eta_of(&self, u: &str, v: &str) -> Result<usize> {
        self.eta(self.vertex(u)?, self.vertex(v)?)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// All edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Re-checks the split invariants from the raw adjacency.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        for u in 0..n {
            if self.adj[u].len() != n {
                return Err(Error::InvalidArgument(format!(
                    "adjacency row of `{}` has wrong width",
                    self.labels[u]
                )));
            }
            if self.adj[u].contains(u) {
                return Err(Error::Loop(self.labels[u].clone()));
            }
            for v in 0..n {
                if self.adj[u].contains(v) != self.adj[v].contains(u) {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency between `{}` and `{}` is not symmetric",
                        self.labels[u], self.labels[v]
                    )));
                }
                if u != v && u < self.k && v < self.k && !self.adj[u].contains(v) {
                    return Err(Error::InvalidArgument(format!(
                        "clique vertices `{}` and `{}` are not adjacent",
                        self.labels[u], self.labels[v]
                    )));
                }
                if u >= self.k && v >= self.k && self.adj[u].contains(v) {
                    return Err(Error::IndependentEdge(
                        self.labels[u].clone(),
                        self.labels[v].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Serializes to the line-based text format. Implied `K`-`K` edges are
    /// omitted, so the output only lists `K`-`I` edges.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        push_header(&mut out, "K:", self.k_labels());
        push_header(&mut out, "I:", self.i_labels());
        for v in self.independent() {
            for x in self.adj[v].ones() {
                out.push_str(&self.labels[v]);
                out.push(' ');
                out.push_str(&self.labels[x]);
                out.push('\n');
            }
        }
        out
    }

    /// Parses the line-based text format:
    ///
    /// ```text
    /// # comment
    /// K: x y z
    /// I: 1 2
    /// 1 x
    /// 2 y
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut k_labels: Option<(usize, Vec<String>)> = None;
        let mut i_labels: Option<(usize, Vec<String>)> = None;
        let mut edges: Vec<(usize, &str, &str)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().unwrap_or_default();
            let slot = match head {
                "K:" => Some(&mut k_labels),
                "I:" => Some(&mut i_labels),
                _ => None,
            };
            if let Some(slot) = slot {
                if slot.is_some() {
                    return Err(Error::parse(line_no, format!("repeated `{head}` header")));
                }
                if !edges.is_empty() {
                    return Err(Error::parse(line_no, "headers must precede edge lines"));
                }
                *slot = Some((line_no, tokens.map(str::to_owned).collect()));
                continue;
            }
            let rest: Vec<&str> = tokens.collect();
            if rest.len() != 1 {
                return Err(Error::parse(
                    line_no,
                    format!("expected `<label> <label>`, found `{line}`"),
                ));
            }
            edges.push((line_no, head, rest[0]));
        }

        let (k_line, k_labels) = k_labels.ok_or_else(|| Error::parse(0, "missing `K:` header"))?;
        let (i_line, i_labels) = i_labels.ok_or_else(|| Error::parse(0, "missing `I:` header"))?;
        let mut graph = Self::with_partition(k_labels, i_labels)
            .map_err(|e| Error::parse(k_line.max(i_line), e.to_string()))?;
        for (line_no, a, b) in edges {
            graph
                .add_labelled_edge(a, b)
                .map_err(|e| Error::parse(line_no, e.to_string()))?;
        }
        Ok(graph)
    }
}

fn push_header(out: &mut String, head: &str, labels: &[String]) {
    out.push_str(head);
    for label in labels {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
}

impl FromStr for SplitGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SplitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
