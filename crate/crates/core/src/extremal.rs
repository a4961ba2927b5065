//! The family `S_n` whose factor graph is a path of length `⌈(n+1)/2⌉`,
//! meeting the diameter bound with equality.
//!
//! `S_1` is the path `y1 x1 x2 y2`; `S_2` has `K = {x1, x2}` and
//! `N(y1) = N(y3) = {x1}`, `N(y2) = {x2}`. From `S_n` with `I = {y1 … y(k+1)}`:
//!
//! * `n = 2k − 2` (even): add a clique vertex `z` joined to all of `K` and to
//!   `y(k+1)`;
//! * `n = 2k − 1` (odd): add `y(k+2)` joined to `N(y1) ∪ … ∪ N(yk)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::factor::{build_by_formula, FactorGraph};
use crate::graph::SplitGraph;
use crate::switch::two_switch_degree;
use crate::verify::report::{CheckResult, Tally, Verdict, Witness};
use crate::verify::{diameter_bound_for, Check};

#[derive(Clone, Debug)]
pub struct ExtremalInstance {
    pub n: usize,
    pub graph: SplitGraph,
    /// The path `y1 … y(L+1)` with the advertised multiplicities.
    pub expected_phi: FactorGraph,
}

/// Number of edges of the factor-graph path of `S_n`: `⌈(n+1)/2⌉`.
pub fn extremal_path_length(n: usize) -> usize {
    (n + 2) / 2
}

/// Multiplicities along the factor-graph path of `S_n`, starting at the
/// simple end: first edge 1, internal edges 2, last edge 1 for even `n` and
/// 2 for odd `n`.
pub fn extremal_multiplicities(n: usize) -> Vec<u64> {
    let len = extremal_path_length(n);
    if n == 1 {
        return vec![1];
    }
    let mut out = vec![2; len];
    out[0] = 1;
    out[len - 1] = if n % 2 == 0 { 1 } else { 2 };
    out
}

struct Builder {
    k_labels: Vec<String>,
    i_labels: Vec<String>,
    nbhd: Vec<BTreeSet<usize>>,
    added: usize,
}

impl Builder {
    fn base(n: usize) -> Self {
        let k_labels = vec!["x1".to_owned(), "x2".to_owned()];
        if n == 1 {
            Builder {
                k_labels,
                i_labels: vec!["y1".into(), "y2".into()],
                nbhd: vec![BTreeSet::from([0]), BTreeSet::from([1])],
                added: 0,
            }
        } else {
            Builder {
                k_labels,
                i_labels: vec!["y1".into(), "y2".into(), "y3".into()],
                nbhd: vec![
                    BTreeSet::from([0]),
                    BTreeSet::from([1]),
                    BTreeSet::from([0]),
                ],
                added: 0,
            }
        }
    }

    /// `S_m` to `S_{m+1}` for `m ≥ 2`.
    fn step(&mut self, m: usize) {
        if m % 2 == 0 {
            let k = (m + 2) / 2;
            debug_assert_eq!(self.i_labels.len(), k + 1);
            self.added += 1;
            self.k_labels.push(format!("z{}", self.added));
            let z = self.k_labels.len() - 1;
            self.nbhd[k].insert(z);
        } else {
            let k = m.div_ceil(2);
            debug_assert_eq!(self.i_labels.len(), k + 1);
            let joined: BTreeSet<usize> = self.nbhd[..k].iter().flatten().copied().collect();
            self.i_labels.push(format!("y{}", k + 2));
            self.nbhd.push(joined);
        }
    }
}

/// Builds `S_n` for `n ≥ 1`.
pub fn build_extremal(n: usize) -> Result<ExtremalInstance> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "extremal family starts at n = 1".into(),
        ));
    }
    let mut b = Builder::base(n);
    for m in 2..n {
        b.step(m);
    }
    let graph = SplitGraph::from_neighborhoods(b.k_labels, b.i_labels.clone(), b.nbhd)?;
    let expected_phi = FactorGraph::from_multiplicities(
        b.i_labels,
        extremal_multiplicities(n)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (i, i + 1, m)),
    )?;
    Ok(ExtremalInstance {
        n,
        graph,
        expected_phi,
    })
}

fn single(check: Check, ok: bool, why: impl FnOnce() -> String) -> CheckResult {
    let mut t = Tally::new(check);
    t.record(Verdict::from_bool(ok, why), || Witness::Instance);
    t.finish()
}

/// Recomputes `Φ` from the graph and checks every advertised property of
/// `S_n`, including that its diameter equals the general upper bound.
pub fn verify_extremal(inst: &ExtremalInstance) -> Vec<CheckResult> {
    let n = inst.n;
    let phi = build_by_formula(&inst.graph);
    let degree = two_switch_degree(&inst.graph);
    let len = extremal_path_length(n);
    let along: Vec<u64> = (0..phi.order().saturating_sub(1))
        .map(|i| phi.multiplicity(i, i + 1))
        .collect();
    let is_path =
        phi.order() == len + 1 && phi.edges().count() == len && along.iter().all(|&m| m > 0);

    let mut out = vec![
        single(
            Check::ExtremalMatchesExpected,
            phi == inst.expected_phi,
            || format!("Φ is {:?}", phi.edges().collect::<Vec<_>>()),
        ),
        single(Check::ExtremalSwitchDegree, degree == n as u64, || {
            format!("deg(S) = {degree}, expected {n}")
        }),
        single(Check::ExtremalIsPath, is_path, || {
            format!("Φ is not the path y1 … y{} with {len} edges", len + 1)
        }),
    ];
    let internal = along.get(1..along.len().saturating_sub(1)).unwrap_or(&[]);
    out.push(single(
        Check::ExtremalInternalMultiplicities,
        is_path && internal.iter().all(|&m| m == 2),
        || format!("multiplicities along the path {along:?}"),
    ));
    let terminal_ok = is_path
        && match along.as_slice() {
            [only] => *only == 1,
            [first, .., last] => *first == 1 && *last == if n % 2 == 0 { 1 } else { 2 },
            [] => false,
        };
    out.push(single(
        Check::ExtremalTerminalMultiplicities,
        terminal_ok,
        || format!("terminal multiplicities of {along:?} for n = {n}"),
    ));
    let diameter = phi.diameter().value();
    let bound = diameter_bound_for(degree) as usize;
    out.push(single(
        Check::ExtremalDiameterSharp,
        diameter == Some(len) && len == bound,
        || format!("diameter {diameter:?}, ⌈(n+1)/2⌉ = {len}, bound {bound}"),
    ));
    out
}
