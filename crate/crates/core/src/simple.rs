//! Plain simple graphs: input side of split recognition and the underlying
//! simple view of a factor graph.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{check_label, SplitGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        for (idx, label) in labels.iter().enumerate() {
            check_label(label)?;
            if labels[..idx].contains(label) {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        let n = labels.len();
        Ok(SimpleGraph {
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// Graph on vertices labelled `0..n`.
    pub fn with_order(n: usize) -> Self {
        SimpleGraph {
            labels: (0..n).map(|v| v.to_string()).collect(),
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_order(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.order() {
                return Err(Error::UnknownVertex(format!("#{w}")));
            }
        }
        if u == v {
            return Err(Error::Loop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Parses an edge list: one `<label> <label>` per line, or a single
    /// `<label>` to declare an isolated vertex. `#` starts a comment line.
    /// Vertices are indexed in order of first appearance.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        let mut intern = |label: &str, line: usize| -> Result<usize> {
            check_label(label).map_err(|e| Error::parse(line, e.to_string()))?;
            Ok(match labels.iter().position(|l| l == label) {
                Some(v) => v,
                None => {
                    labels.push(label.to_owned());
                    labels.len() - 1
                }
            })
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [a] => {
                    intern(a, line_no)?;
                }
                [a, b] => {
                    if a == b {
                        return Err(Error::parse(line_no, format!("self-loop on `{a}`")));
                    }
                    let u = intern(a, line_no)?;
                    let v = intern(b, line_no)?;
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::parse(
                        line_no,
                        format!("expected `<label> [<label>]`, found `{line}`"),
                    ))
                }
            }
        }
        let mut g = Self::new(labels)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Hop distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for w in self.adj[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .bfs(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }
}

/// Forgets the bipartition, keeping labels and all edges including those
/// inside `K`.
impl From<&SplitGraph> for SimpleGraph {
    fn from(s: &SplitGraph) -> Self {
        let mut g = SimpleGraph::new(s.labels().to_vec()).expect("split graph labels are valid");
        for (u, v) in s.edges() {
            g.add_edge(u, v).expect("split graph edges are simple");
        }
        g
    }
}

/// A clique/independent-set bipartition, as indices into the recognized graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Decides whether `g` is a split graph and, if so, returns it with a
/// canonical bipartition.
///
/// The partition has maximum `|K|`. When several maximum partitions exist
/// they differ in a single swing slot, and the swing candidate with the
/// lexicographically smallest label is placed in `K`. Both parts keep the
/// input vertex order.
pub fn recognize_split(g: &SimpleGraph) -> Option<(SplitGraph, SplitPartition)> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // Degree-sequence test: with d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = degrees
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }

    let mut in_clique = vec![false; n];
    for &v in &order[..m] {
        in_clique[v] = true;
    }
    debug_assert!(is_valid_split(g, &in_clique));

    // Swing slot: a clique vertex w without independent neighbors, plus every
    // independent v with N(v) = K - {w}. Any one of them can fill the slot.
    let clique: Vec<usize> = (0..n).filter(|&v| in_clique[v]).collect();
    let mut swing: Vec<usize> = Vec::new();
    for &w in &clique {
        if g.neighbors(w).ones().any(|u| !in_clique[u]) {
            continue;
        }
        let twins: Vec<usize> = (0..n)
            .filter(|&v| !in_clique[v])
            .filter(|&v| {
                g.degree(v) + 1 == clique.len()
                    && !g.is_adjacent(v, w)
                    && clique.iter().all(|&x| x == w || g.is_adjacent(v, x))
            })
            .collect();
        if !twins.is_empty() {
            swing.push(w);
            swing.extend(twins);
            break;
        }
    }
    if let Some(&chosen) = swing.iter().min_by(|&&a, &&b| g.label(a).cmp(g.label(b))) {
        for &v in &swing {
            in_clique[v] = false;
        }
        in_clique[chosen] = true;
    }
    debug_assert!(is_valid_split(g, &in_clique));

    let partition = SplitPartition {
        clique: (0..n).filter(|&v| in_clique[v]).collect(),
        independent: (0..n).filter(|&v| !in_clique[v]).collect(),
    };
    let k_labels = partition
        .clique
        .iter()
        .map(|&v| g.label(v).to_owned())
        .collect();
    let i_labels = partition
        .independent
        .iter()
        .map(|&v| g.label(v).to_owned())
        .collect();
    let edges = g.edges().map(|(u, v)| (g.label(u), g.label(v)));
    let split = SplitGraph::from_edges(k_labels, i_labels, edges)
        .expect("recognized partition satisfies the split invariants");
    Some((split, partition))
}

fn is_valid_split(g: &SimpleGraph, in_clique: &[bool]) -> bool {
    (0..g.order()).all(|u| {
        (u + 1..g.order()).all(|v| match (in_clique[u], in_clique[v]) {
            (true, true) => g.is_adjacent(u, v),
            (false, false) => !g.is_adjacent(u, v),
            _ => true,
        })
    })
}
