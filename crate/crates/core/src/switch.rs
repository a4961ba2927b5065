//! 2-switches on a split graph.
//!
//! A 2-switch deletes edges `ab, cd` and adds the non-edges `ac, bd`. With a
//! fixed bipartition `(K, I)` a deleted edge cannot lie inside `I`, and an
//! added edge cannot lie inside `K`, so every 2-switch has the shape
//! `(u, x, v, y)`: `u, v` in `I`, `x, y` in `K`, deleting `ux, vy` and adding
//! `uy, vx`. Such a move exists exactly when `x ∈ N_u − N_v` and
//! `y ∈ N_v − N_u`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SplitGraph;

/// One 2-switch `(u, x, v, y)`, by global vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoSwitch {
    pub u: usize,
    pub x: usize,
    pub v: usize,
    pub y: usize,
}

impl TwoSwitch {
    pub fn new(u: usize, x: usize, v: usize, y: usize) -> Self {
        TwoSwitch { u, x, v, y }
    }

    /// The move undoing this one.
    pub fn reverse(self) -> Self {
        TwoSwitch::new(self.u, self.y, self.v, self.x)
    }

    /// Canonical labelling of the same move: `u < v`.
    pub fn canonical(self) -> Self {
        if self.u <= self.v {
            self
        } else {
            TwoSwitch::new(self.v, self.y, self.u, self.x)
        }
    }

    pub fn display<'a>(&self, graph: &'a SplitGraph) -> DisplayMove<'a> {
        DisplayMove { mv: *self, graph }
    }

    /// Checks the move against `graph`, naming the first violated condition.
    pub fn validate(&self, graph: &SplitGraph) -> Result<()> {
        let TwoSwitch { u, x, v, y } = *self;
        let n = graph.order();
        if [u, x, v, y].iter().any(|&w| w >= n) {
            return Err(Error::InvalidMove("vertex index out of range".into()));
        }
        let name = |w: usize| graph.label(w);
        if !graph.is_independent_vertex(u) || !graph.is_independent_vertex(v) {
            return Err(Error::InvalidMove(format!(
                "`{}` and `{}` must both lie in I",
                name(u),
                name(v)
            )));
        }
        if !graph.is_clique_vertex(x) || !graph.is_clique_vertex(y) {
            return Err(Error::InvalidMove(format!(
                "`{}` and `{}` must both lie in K",
                name(x),
                name(y)
            )));
        }
        if u == v || x == y {
            return Err(Error::InvalidMove("u ≠ v and x ≠ y required".into()));
        }
        for (a, b, want) in [(u, x, true), (v, y, true), (u, y, false), (v, x, false)] {
            if graph.is_adjacent(a, b) != want {
                let what = if want {
                    "missing edge"
                } else {
                    "existing edge"
                };
                return Err(Error::InvalidMove(format!(
                    "{what} {}-{}",
                    name(a),
                    name(b)
                )));
            }
        }
        Ok(())
    }
}

pub struct DisplayMove<'a> {
    mv: TwoSwitch,
    graph: &'a SplitGraph,
}

impl fmt::Display for DisplayMove<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.graph;
        let TwoSwitch { u, x, v, y } = self.mv;
        write!(
            f,
            "{} {} {} {}",
            g.label(u),
            g.label(x),
            g.label(v),
            g.label(y)
        )
    }
}

/// Iterates every 2-switch once, in canonical order: by the pair `u < v`,
/// then `x`, then `y`.
pub fn two_switches(graph: &SplitGraph) -> impl Iterator<Item = TwoSwitch> + '_ {
    let ind = graph.independent();
    ind.clone().flat_map(move |u| {
        (u + 1..ind.end).flat_map(move |v| {
            let nu = graph.neighbors(u);
            let nv = graph.neighbors(v);
            nu.difference(nv)
                .flat_map(move |x| nv.difference(nu).map(move |y| TwoSwitch::new(u, x, v, y)))
        })
    })
}

/// All 2-switches acting on `graph`, one per unordered pair of deleted edges.
pub fn enumerate_two_switches(graph: &SplitGraph) -> Vec<TwoSwitch> {
    two_switches(graph).collect()
}

/// The 2-switch-degree: how many 2-switches act on `graph`.
pub fn two_switch_degree(graph: &SplitGraph) -> u64 {
    two_switches(graph).count() as u64
}

/// Performs the move, returning the switched graph on the same `(K, I)`.
pub fn apply_two_switch(graph: &SplitGraph, mv: TwoSwitch) -> Result<SplitGraph> {
    mv.validate(graph)?;
    let mut out = graph.clone();
    out.set_edge(mv.u, mv.x, false);
    out.set_edge(mv.v, mv.y, false);
    out.set_edge(mv.u, mv.y, true);
    out.set_edge(mv.v, mv.x, true);
    Ok(out)
}
