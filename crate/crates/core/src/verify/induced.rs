//! Induced paths and cycles of a factor graph, multiplicities ignored.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::factor::FactorGraph;

/// Distinct vertices `v_1 … v_n` (n ≥ 2) with `σ(v_i, v_{i+1}) ≥ 1` and
/// `σ(v_i, v_j) = 0` whenever `|i − j| ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedPath(Vec<usize>);

/// Distinct vertices (length ≥ 3) adjacent cyclically, with no chords.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedCycle(Vec<usize>);

impl InducedPath {
    pub fn new(phi: &FactorGraph, vertices: Vec<usize>) -> Result<Self> {
        let fail = |reason: String| Error::NotInduced {
            kind: "path",
            reason,
        };
        if vertices.len() < 2 {
            return Err(fail("fewer than two vertices".into()));
        }
        check_distinct(phi, &vertices).map_err(fail)?;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let adjacent = phi.is_adjacent(vertices[i], vertices[j]);
                if (j == i + 1) != adjacent {
                    return Err(fail(format!(
                        "σ({}, {}) = {}",
                        phi.label(vertices[i]),
                        phi.label(vertices[j]),
                        phi.multiplicity(vertices[i], vertices[j])
                    )));
                }
            }
        }
        Ok(InducedPath(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> InducedPath {
        InducedPath(self.0.iter().rev().copied().collect())
    }
}

impl InducedCycle {
    pub fn new(phi: &FactorGraph, vertices: Vec<usize>) -> Result<Self> {
        let fail = |reason: String| Error::NotInduced {
            kind: "cycle",
            reason,
        };
        let n = vertices.len();
        if n < 3 {
            return Err(fail("fewer than three vertices".into()));
        }
        check_distinct(phi, &vertices).map_err(fail)?;
        for i in 0..n {
            for j in i + 1..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if consecutive != phi.is_adjacent(vertices[i], vertices[j]) {
                    return Err(fail(format!(
                        "σ({}, {}) = {}",
                        phi.label(vertices[i]),
                        phi.label(vertices[j]),
                        phi.multiplicity(vertices[i], vertices[j])
                    )));
                }
            }
        }
        Ok(InducedCycle(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_distinct(phi: &FactorGraph, vertices: &[usize]) -> Result<(), String> {
    for (i, &v) in vertices.iter().enumerate() {
        if v >= phi.order() {
            return Err(format!("vertex #{v} out of range"));
        }
        if vertices[..i].contains(&v) {
            return Err(format!("vertex {} repeated", phi.label(v)));
        }
    }
    Ok(())
}

fn adjacency(phi: &FactorGraph) -> Vec<FixedBitSet> {
    let n = phi.order();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (p, q, _) in phi.edges() {
        adj[p].insert(q);
        adj[q].insert(p);
    }
    adj
}

/// Every induced path with `2 ≤ n ≤ max_len` vertices, once each, oriented so
/// that the first endpoint is smaller than the last. Returns nothing when
/// `max_len < 2`.
pub fn enumerate_induced_paths(phi: &FactorGraph, max_len: usize) -> Vec<InducedPath> {
    let adj = adjacency(phi);
    let n = phi.order();
    let mut out = Vec::new();
    if max_len < 2 {
        return out;
    }
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.push(s);
        // vertices in or next to path[..len-1]; candidates must avoid them
        let mut blocked = FixedBitSet::with_capacity(n);
        blocked.insert(s);
        extend_path(&adj, max_len, &mut path, &blocked, &mut out);
        path.pop();
    }
    out.sort();
    out
}

fn extend_path(
    adj: &[FixedBitSet],
    max_len: usize,
    path: &mut Vec<usize>,
    blocked: &FixedBitSet,
    out: &mut Vec<InducedPath>,
) {
    let last = *path.last().expect("path is never empty");
    if path.len() >= 2 && path[0] < last {
        out.push(InducedPath(path.clone()));
    }
    if path.len() == max_len {
        return;
    }
    let mut next_blocked = blocked.clone();
    next_blocked.union_with(&adj[last]);
    next_blocked.insert(last);
    for w in adj[last].ones() {
        if blocked.contains(w) {
            continue;
        }
        path.push(w);
        extend_path(adj, max_len, path, &next_blocked, out);
        path.pop();
    }
}

/// Every induced cycle, once each: rotated to start at its smallest vertex
/// and directed toward the smaller of that vertex's two cycle neighbors.
pub fn enumerate_induced_cycles(phi: &FactorGraph) -> Vec<InducedCycle> {
    let adj = adjacency(phi);
    let n = phi.order();
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..n {
        for a in adj[s].ones().filter(|&a| a > s) {
            path.clear();
            path.extend([s, a]);
            // interior vertices are path[1..len-1]; the closing vertex may
            // touch s and last only
            let interior = FixedBitSet::with_capacity(n);
            extend_cycle(&adj, s, &mut path, &interior, &mut out);
        }
    }
    out.sort();
    out
}

fn extend_cycle(
    adj: &[FixedBitSet],
    s: usize,
    path: &mut Vec<usize>,
    interior_nbhd: &FixedBitSet,
    out: &mut Vec<InducedCycle>,
) {
    let last = *path.last().expect("path is never empty");
    // `last` becomes interior once the walk moves past it
    let mut next_nbhd = interior_nbhd.clone();
    next_nbhd.union_with(&adj[last]);
    next_nbhd.insert(last);
    for w in adj[last].ones() {
        if w <= s || interior_nbhd.contains(w) || path.contains(&w) {
            continue;
        }
        if adj[s].contains(w) {
            if path[1] < w {
                let mut cyc = path.clone();
                cyc.push(w);
                out.push(InducedCycle(cyc));
            }
            continue;
        }
        path.push(w);
        extend_cycle(adj, s, path, &next_nbhd, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::build_by_formula;
    use crate::graph::SplitGraph;
    use crate::testutil::example;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    fn phi_from(n: usize, edges: &[(usize, usize)]) -> FactorGraph {
        FactorGraph::from_multiplicities(labels(n), edges.iter().map(|&(p, q)| (p, q, 1))).unwrap()
    }

    #[test]
    fn example_paths() {
        let phi = build_by_formula(&example());
        let paths = enumerate_induced_paths(&phi, 4);
        let lens: Vec<usize> = paths.iter().map(InducedPath::len).collect();
        assert_eq!(lens.iter().filter(|&&l| l == 2).count(), 3);
        assert_eq!(lens.iter().filter(|&&l| l == 3).count(), 2);
        assert_eq!(lens.iter().filter(|&&l| l == 4).count(), 1);
        assert!(paths.contains(&InducedPath(vec![0, 1, 2, 3])));
        assert_eq!(enumerate_induced_paths(&phi, 3).len(), 5);
        assert!(enumerate_induced_paths(&phi, 1).is_empty());
    }

    #[test]
    fn edgeless_has_no_paths() {
        assert!(enumerate_induced_paths(&FactorGraph::new(labels(4)), 4).is_empty());
    }

    #[test]
    fn disjoint_singletons_form_triangle() {
        let g = SplitGraph::parse("K: a b c\nI: 1 2 3\n1 a\n2 b\n3 c\n").unwrap();
        let phi = build_by_formula(&g);
        assert_eq!(phi.edges().map(|e| e.2).collect::<Vec<_>>(), vec![1, 1, 1]);
        let cycles = enumerate_induced_cycles(&phi);
        assert_eq!(cycles, vec![InducedCycle(vec![0, 1, 2])]);
    }

    #[test]
    fn tree_has_no_cycles() {
        let phi = phi_from(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]);
        assert!(enumerate_induced_cycles(&phi).is_empty());
    }

    #[test]
    fn cycle_canonical_form() {
        // C5 on 0-3-1-4-2-0, plus a pendant vertex
        let phi = phi_from(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 0), (4, 5)]);
        assert_eq!(
            enumerate_induced_cycles(&phi),
            vec![InducedCycle(vec![0, 2, 4, 1, 3])]
        );
        // K4 has four triangles and no induced 4-cycle
        let k4 = phi_from(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(enumerate_induced_cycles(&k4).len(), 4);
    }

    #[test]
    fn constructors_validate() {
        let phi = phi_from(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(InducedPath::new(&phi, vec![0, 1, 2]).is_ok());
        assert!(InducedPath::new(&phi, vec![0, 1, 2, 3]).is_err());
        assert!(InducedPath::new(&phi, vec![0]).is_err());
        assert!(InducedPath::new(&phi, vec![0, 1, 0]).is_err());
        assert!(InducedCycle::new(&phi, vec![0, 1, 2, 3]).is_ok());
        assert!(InducedCycle::new(&phi, vec![0, 1, 2]).is_err());
    }
}
