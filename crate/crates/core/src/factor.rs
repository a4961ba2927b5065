//! The factor multigraph `Φ(S)`: a loopless multigraph on `I` with one edge
//! per 2-switch acting on a pair of independent vertices.
//!
//! Factor-graph vertices are the positions `0..|I|` of the independent set, so
//! position `p` corresponds to the split-graph vertex `graph.i_vertex(p)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SplitGraph;
use crate::simple::SimpleGraph;
use crate::switch::two_switches;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorGraph {
    labels: Vec<String>,
    // keyed by (min, max); zero multiplicities are never stored
    mult: BTreeMap<(usize, usize), u64>,
}

/// Diameter of the underlying simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diameter {
    /// No vertices; the diameter is taken as 0.
    Empty,
    Connected(usize),
    /// Per-component diameters, components ordered by smallest vertex.
    Disconnected(Vec<usize>),
}

impl Diameter {
    /// The diameter when it is defined (empty or connected).
    pub fn value(&self) -> Option<usize> {
        match self {
            Diameter::Empty => Some(0),
            Diameter::Connected(d) => Some(*d),
            Diameter::Disconnected(_) => None,
        }
    }

    pub fn is_connected(&self) -> bool {
        !matches!(self, Diameter::Disconnected(_))
    }
}

impl FactorGraph {
    /// Edgeless factor graph on the given vertices.
    pub fn new(labels: Vec<String>) -> Self {
        FactorGraph {
            labels,
            mult: BTreeMap::new(),
        }
    }

    /// Builds a factor graph from explicit `(p, q, σ)` triples. Repeated pairs
    /// accumulate.
    pub fn from_multiplicities<E>(labels: Vec<String>, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut phi = Self::new(labels);
        for (p, q, m) in edges {
            phi.add(p, q, m)?;
        }
        Ok(phi)
    }

    fn add(&mut self, p: usize, q: usize, m: u64) -> Result<()> {
        if p >= self.order() || q >= self.order() {
            return Err(Error::UnknownVertex(format!("#{}", p.max(q))));
        }
        if p == q {
            return Err(Error::Loop(self.labels[p].clone()));
        }
        if m > 0 {
            *self.mult.entry((p.min(q), p.max(q))).or_insert(0) += m;
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `σ_pq`; zero for `p == q`.
    pub fn multiplicity(&self, p: usize, q: usize) -> u64 {
        self.mult.get(&(p.min(q), p.max(q))).copied().unwrap_or(0)
    }

    pub fn is_adjacent(&self, p: usize, q: usize) -> bool {
        self.multiplicity(p, q) > 0
    }

    /// Number of edges counting multiplicities.
    pub fn size(&self) -> u64 {
        self.mult.values().sum()
    }

    /// Nonzero entries `(p, q, σ)` with `p < q`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.mult.iter().map(|(&(p, q), &m)| (p, q, m))
    }

    /// Simple graph with `p ~ q` iff `σ_pq ≥ 1`.
    pub fn underlying_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.labels.clone())
            .unwrap_or_else(|_| SimpleGraph::with_order(self.order()));
        for (p, q, _) in self.edges() {
            g.add_edge(p, q)
                .expect("stored pairs are in range and loopless");
        }
        g
    }

    /// Path-metric diameter, ignoring multiplicities.
    pub fn diameter(&self) -> Diameter {
        if self.order() == 0 {
            return Diameter::Empty;
        }
        let g = self.underlying_simple();
        let comps = g.components();
        let ecc = |s: usize| g.bfs(s).into_iter().flatten().max().unwrap_or(0);
        let diams: Vec<usize> = comps
            .iter()
            .map(|c| c.iter().map(|&s| ecc(s)).max().unwrap_or(0))
            .collect();
        if diams.len() == 1 {
            Diameter::Connected(diams[0])
        } else {
            Diameter::Disconnected(diams)
        }
    }

    /// `u v σ` per nonzero pair.
    pub fn to_listing(&self) -> String {
        let mut out = String::new();
        for (p, q, m) in self.edges() {
            let _ = writeln!(out, "{} {} {}", self.labels[p], self.labels[q], m);
        }
        out
    }

    /// Graphviz rendering; every edge carries `label=σ` and `penwidth=σ`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph phi {\n");
        for label in &self.labels {
            let _ = writeln!(out, "  \"{}\";", escape(label));
        }
        for (p, q, m) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label={m}, penwidth={m}];",
                escape(&self.labels[p]),
                escape(&self.labels[q])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `Φ(S)` from the closed form `σ_uv = (d_u − η_uv)(d_v − η_uv)`.
pub fn build_by_formula(graph: &SplitGraph) -> FactorGraph {
    let mut phi = FactorGraph::new(graph.i_labels().to_vec());
    let ind: Vec<usize> = graph.independent().collect();
    for (p, &u) in ind.iter().enumerate() {
        let du = graph.degree(u) as u64;
        for (q, &v) in ind.iter().enumerate().skip(p + 1) {
            let dv = graph.degree(v) as u64;
            let eta = graph.neighbors(u).intersection_count(graph.neighbors(v)) as u64;
            let sigma = (du - eta) * (dv - eta);
            assert!(sigma <= du * dv, "multiplicity exceeds d_u·d_v");
            if sigma > 0 {
                phi.mult.insert((p, q), sigma);
            }
        }
    }
    phi
}

/// `Φ(S)` by counting enumerated 2-switches per independent pair.
pub fn build_by_enumeration(graph: &SplitGraph) -> FactorGraph {
    let mut phi = FactorGraph::new(graph.i_labels().to_vec());
    let k = graph.k_len();
    for mv in two_switches(graph) {
        *phi.mult.entry((mv.u - k, mv.v - k)).or_insert(0) += 1;
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::example;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn example_multiplicities() {
        let g = example();
        let phi = build_by_formula(&g);
        let expect = [(0, 1, 1), (1, 2, 2), (2, 3, 2)];
        assert_eq!(phi.edges().collect::<Vec<_>>(), expect);
        assert_eq!(phi.size(), 5);
        assert_eq!(build_by_enumeration(&g), phi);
    }

    #[test]
    fn example_is_p4() {
        let phi = build_by_formula(&example());
        let simple = phi.underlying_simple();
        assert_eq!(simple.edge_count(), 3);
        assert_eq!(
            simple.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert_eq!(phi.diameter(), Diameter::Connected(3));
    }

    #[test]
    fn equal_neighborhoods_have_zero_multiplicity() {
        let g = SplitGraph::parse("K: a b\nI: u v\nu a\nu b\nv a\nv b\n").unwrap();
        assert_eq!(build_by_formula(&g).multiplicity(0, 1), 0);
        assert_eq!(build_by_enumeration(&g).multiplicity(0, 1), 0);
    }

    #[test]
    fn edgeless_view() {
        let phi = FactorGraph::new(labels(3));
        assert_eq!(phi.underlying_simple().edge_count(), 0);
        assert_eq!(phi.diameter(), Diameter::Disconnected(vec![0, 0, 0]));
    }

    #[test]
    fn diameter_edge_cases() {
        assert_eq!(FactorGraph::new(vec![]).diameter(), Diameter::Empty);
        assert_eq!(FactorGraph::new(vec![]).diameter().value(), Some(0));
        assert_eq!(
            FactorGraph::new(labels(1)).diameter(),
            Diameter::Connected(0)
        );
        let phi =
            FactorGraph::from_multiplicities(labels(5), [(0, 1, 1), (1, 2, 3), (3, 4, 2)]).unwrap();
        assert_eq!(phi.diameter(), Diameter::Disconnected(vec![2, 1]));
        assert_eq!(phi.diameter().value(), None);
    }

    #[test]
    fn multiplicities_accumulate_and_reject_loops() {
        let phi = FactorGraph::from_multiplicities(labels(2), [(0, 1, 1), (1, 0, 2)]).unwrap();
        assert_eq!(phi.multiplicity(1, 0), 3);
        assert!(FactorGraph::from_multiplicities(labels(2), [(1, 1, 1)]).is_err());
        assert!(FactorGraph::from_multiplicities(labels(2), [(0, 2, 1)]).is_err());
    }

    #[test]
    fn listing_and_dot() {
        let phi = build_by_formula(&example());
        assert_eq!(phi.to_listing(), "1 2 1\n2 3 2\n3 4 2\n");
        let dot = phi.to_dot();
        assert!(dot.starts_with("graph phi {\n"));
        assert!(dot.contains("\"2\" -- \"3\" [label=2, penwidth=2];"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
