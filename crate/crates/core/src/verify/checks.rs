//! Structural checks relating `Φ(S)` to the neighborhoods and degrees in `S`.
//!
//! Each check is a predicate over one configuration (an ordered pair of
//! independent vertices, an oriented induced path, an induced cycle, or the
//! whole instance). The same predicates drive both the sweeps and
//! [`recheck`], so a reported witness can be replayed on its own.
//!
//! Factor-graph positions `p` refer to `S`-vertex `graph.i_vertex(p)`;
//! `d` and `N` below are degrees and neighborhoods in `S`.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::factor::{build_by_enumeration, build_by_formula, Diameter, FactorGraph};
use crate::graph::SplitGraph;
use crate::switch::two_switch_degree;

use super::induced::{
    enumerate_induced_cycles, enumerate_induced_paths, InducedCycle, InducedPath,
};
use super::report::{Check, CheckResult, Tally, Verdict, VerificationReport, Witness};

pub(crate) struct Ctx<'a> {
    sg: &'a SplitGraph,
    phi: &'a FactorGraph,
    deg: Vec<usize>,
}

impl<'a> Ctx<'a> {
    pub(crate) fn new(sg: &'a SplitGraph, phi: &'a FactorGraph) -> Self {
        assert_eq!(
            sg.i_len(),
            phi.order(),
            "factor graph must have one vertex per independent vertex"
        );
        let deg = sg.independent().map(|v| sg.degree(v)).collect();
        Ctx { sg, phi, deg }
    }

    fn nb(&self, p: usize) -> &FixedBitSet {
        self.sg.neighbors(self.sg.i_vertex(p))
    }

    fn d(&self, p: usize) -> usize {
        self.deg[p]
    }

    fn sigma(&self, p: usize, q: usize) -> u64 {
        self.phi.multiplicity(p, q)
    }

    /// `N_a ⊆ N_b`.
    fn sub(&self, a: usize, b: usize) -> bool {
        self.nb(a).is_subset(self.nb(b))
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.nb(a) == self.nb(b)
    }

    fn label(&self, p: usize) -> &str {
        self.phi.label(p)
    }

    fn degrees(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&p| self.d(p)).collect()
    }

    fn union(&self, vs: &[usize]) -> FixedBitSet {
        let mut u = FixedBitSet::with_capacity(self.sg.order());
        for &p in vs {
            u.union_with(self.nb(p));
        }
        u
    }
}

// ---- pair predicates (ordered pair u, v) ----

fn zero_multiplicity_inclusion(c: &Ctx<'_>, u: usize, v: usize) -> Verdict {
    let lhs = c.sigma(u, v) == 0 && c.d(v) <= c.d(u);
    let rhs = c.sub(v, u);
    if lhs != rhs {
        return Verdict::Violated(format!(
            "σ={} d_{}={} d_{}={} but N_{} ⊆ N_{} is {}",
            c.sigma(u, v),
            c.label(u),
            c.d(u),
            c.label(v),
            c.d(v),
            c.label(v),
            c.label(u),
            rhs
        ));
    }
    Verdict::Holds {
        equalities: usize::from(rhs && c.same(u, v)),
    }
}

fn zero_multiplicity_equal_degree(c: &Ctx<'_>, u: usize, v: usize) -> Verdict {
    let lhs = c.sigma(u, v) == 0 && c.d(u) == c.d(v);
    let rhs = c.same(u, v);
    Verdict::from_bool(lhs == rhs, || {
        format!(
            "σ={} d=({}, {}) but N_u = N_v is {}",
            c.sigma(u, v),
            c.d(u),
            c.d(v),
            rhs
        )
    })
}

fn twin_neighborhoods(c: &Ctx<'_>, u: usize, v: usize) -> Verdict {
    if !c.same(u, v) {
        return Verdict::Skip;
    }
    let odd = (0..c.phi.order())
        .filter(|&w| w != u && w != v)
        .find(|&w| (c.sigma(u, w) > 0) != (c.sigma(v, w) > 0));
    Verdict::from_bool(odd.is_none(), || {
        format!(
            "equal neighborhoods but {} separates them in Φ",
            c.label(odd.unwrap_or(u))
        )
    })
}

fn simple_edge_degrees(c: &Ctx<'_>, u: usize, v: usize) -> Verdict {
    if c.sigma(u, v) != 1 {
        return Verdict::Skip;
    }
    let uv = c.nb(u).difference_count(c.nb(v));
    let vu = c.nb(v).difference_count(c.nb(u));
    Verdict::from_bool(c.d(u) == c.d(v) && uv == 1 && vu == 1, || {
        format!(
            "σ=1 with d=({}, {}) and |N_u−N_v|={uv}, |N_v−N_u|={vu}",
            c.d(u),
            c.d(v)
        )
    })
}

type PairPredicate = fn(&Ctx<'_>, usize, usize) -> Verdict;

const PAIR_CHECKS: [(Check, PairPredicate); 4] = [
    (
        Check::ZeroMultiplicityInclusion,
        zero_multiplicity_inclusion,
    ),
    (
        Check::ZeroMultiplicityEqualDegree,
        zero_multiplicity_equal_degree,
    ),
    (Check::TwinNeighborhoods, twin_neighborhoods),
    (Check::SimpleEdgeDegrees, simple_edge_degrees),
];

// ---- path predicates (oriented induced path v_1 … v_n) ----

/// The maximum `S`-degree along the path is attained at `v_1`.
fn anchored(c: &Ctx<'_>, path: &[usize]) -> bool {
    let max = path.iter().map(|&p| c.d(p)).max().unwrap_or(0);
    c.d(path[0]) == max
}

fn max_degree_end(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    let ds = c.degrees(path);
    let n = ds.len();
    let max = *ds.iter().max().expect("paths are non-empty");
    let ends = [ds[0], ds[1], ds[n - 2], ds[n - 1]];
    Verdict::from_bool(ends.contains(&max), || {
        format!("degrees {ds:?}: maximum {max} only at interior positions")
    })
}

fn inclusion_chain(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let mut equalities = 0;
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            let (a, b) = (path[i], path[j]);
            if c.d(a) < c.d(b) || !c.sub(b, a) {
                return Verdict::Violated(format!(
                    "positions {} and {}: d {} vs {}, N_{} ⊇ N_{} is {}",
                    i + 1,
                    j + 1,
                    c.d(a),
                    c.d(b),
                    c.label(a),
                    c.label(b),
                    c.sub(b, a)
                ));
            }
            equalities += usize::from(c.same(a, b));
        }
    }
    Verdict::Holds { equalities }
}

fn union_collapse(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let mut equalities = 0;
    for i in 0..path.len() {
        if i + 2 >= path.len() {
            break;
        }
        let tail = c.union(&path[i + 2..]);
        if !tail.is_subset(c.nb(path[i])) {
            return Verdict::Violated(format!(
                "N at position {} does not contain the union beyond position {}",
                i + 1,
                i + 2
            ));
        }
        equalities += usize::from(&tail == c.nb(path[i]));
    }
    let whole = c.union(path);
    let head = c.union(&path[..2]);
    if whole != head {
        return Verdict::Violated(format!(
            "union of all neighborhoods has {} vertices, N_1 ∪ N_2 has {}",
            whole.count_ones(..),
            head.count_ones(..)
        ));
    }
    Verdict::Holds { equalities }
}

fn parity_monotone(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let ds = c.degrees(path);
    let bad = (0..ds.len().saturating_sub(2)).find(|&i| ds[i] < ds[i + 2]);
    Verdict::from_bool(bad.is_none(), || {
        let i = bad.unwrap_or(0);
        format!("degrees {ds:?}: d at {} < d at {}", i + 1, i + 3)
    })
}

fn min_degree_end(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let ds = c.degrees(path);
    let n = ds.len();
    let min = *ds.iter().min().expect("paths are non-empty");
    Verdict::from_bool(ds[n - 2] == min || ds[n - 1] == min, || {
        format!("degrees {ds:?}: minimum {min} not at the last two positions")
    })
}

fn p5_middle_max(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if path.len() != 5 {
        return Verdict::Skip;
    }
    let ds = c.degrees(path);
    let max = *ds.iter().max().expect("non-empty");
    Verdict::from_bool(ds[2] != max, || {
        format!("degrees {ds:?}: middle vertex attains the maximum")
    })
}

/// `|∪ N_i| − d_1` for an anchored path; this equals `d_2 − η_12`.
fn union_excess(c: &Ctx<'_>, path: &[usize]) -> u64 {
    (c.union(path).count_ones(..) - c.d(path[0])) as u64
}

fn union_divides(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let div = union_excess(c, path);
    let sigma = c.sigma(path[0], path[1]);
    if div == 0 {
        return Verdict::Violated(format!(
            "internal inconsistency: ∪N = N_1 on a path with σ_12 = {sigma}"
        ));
    }
    Verdict::from_bool(sigma % div == 0, || {
        format!("{div} does not divide σ_12 = {sigma}")
    })
}

fn union_sqrt_bound(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if !anchored(c, path) {
        return Verdict::Skip;
    }
    let excess = union_excess(c, path);
    let sigma = c.sigma(path[0], path[1]);
    Verdict::from_bool(excess * excess <= sigma, || {
        format!("|∪N| − d_1 = {excess} exceeds √σ_12 = √{sigma}")
    })
}

fn spanning_divides(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    let spans = path.len() == c.phi.order() && c.phi.edges().count() + 1 == path.len();
    let covered = c
        .union(&(0..c.phi.order()).collect::<Vec<_>>())
        .count_ones(..)
        == c.sg.k_len();
    if !spans || !covered || !anchored(c, path) {
        return Verdict::Skip;
    }
    let div = (c.sg.k_len() - c.d(path[0])) as u64;
    let sigma = c.sigma(path[0], path[1]);
    if div == 0 {
        return Verdict::Violated(format!(
            "internal inconsistency: |K| = d_1 on a path with σ_12 = {sigma}"
        ));
    }
    Verdict::from_bool(sigma % div == 0, || {
        format!("|K| − d_1 = {div} does not divide σ_12 = {sigma}")
    })
}

fn simple_edge_terminal(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    let n = path.len();
    let inner = (1..n.saturating_sub(2)).find(|&i| c.sigma(path[i], path[i + 1]) == 1);
    Verdict::from_bool(inner.is_none(), || {
        let i = inner.unwrap_or(0);
        format!("internal edge {} of {} has multiplicity 1", i + 1, n - 1)
    })
}

fn p4_simple_middle(c: &Ctx<'_>, path: &[usize], excluded: fn(&[usize]) -> bool) -> Verdict {
    if path.len() != 4 || c.sigma(path[1], path[2]) != 1 {
        return Verdict::Skip;
    }
    let ds = c.degrees(path);
    Verdict::from_bool(!excluded(&ds), || format!("σ_23 = 1 with degrees {ds:?}"))
}

fn p4_peak(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    p4_simple_middle(c, path, |d| d[0] <= d[1] && d[1] >= d[3])
}

fn p4_valley(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    p4_simple_middle(c, path, |d| d[0] >= d[1] && d[1] <= d[3])
}

fn p4_ascending(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    p4_simple_middle(c, path, |d| d[0] <= d[1] && d[1] <= d[3])
}

fn p3_simple_tail(c: &Ctx<'_>, path: &[usize]) -> Verdict {
    if path.len() != 3 {
        return Verdict::Skip;
    }
    let [a, b, z] = [path[0], path[1], path[2]];
    if c.d(a) > c.d(b) || c.sigma(b, z) != 1 {
        return Verdict::Skip;
    }
    let mut head = c.nb(a).clone();
    head.difference_with(c.nb(b));
    let mut tail = c.nb(z).clone();
    tail.difference_with(c.nb(b));
    if head != tail || head.count_ones(..) != 1 {
        return Verdict::Violated(format!(
            "N_1 − N_2 has {} vertices, N_3 − N_2 has {}, equal: {}",
            head.count_ones(..),
            tail.count_ones(..),
            head == tail
        ));
    }
    // N_3 = {x} ∪ (N_2 ∩ N_3) follows from N_3 − N_2 = {x}; check it literally.
    let mut rebuilt = c.nb(b).clone();
    rebuilt.intersect_with(c.nb(z));
    rebuilt.union_with(&tail);
    let cover = c.union(&[a, b]);
    if &rebuilt != c.nb(z) || !c.nb(z).is_subset(&cover) || c.nb(z) == &cover {
        return Verdict::Violated("N_3 is not {x} ∪ (N_2 ∩ N_3) strictly inside N_1 ∪ N_2".into());
    }
    let expect = (c.d(b) - c.d(a) + 1) as u64;
    Verdict::from_bool(c.sigma(a, b) == expect, || {
        format!("σ_12 = {} but d_2 − d_1 + 1 = {expect}", c.sigma(a, b))
    })
}

type PathPredicate = fn(&Ctx<'_>, &[usize]) -> Verdict;

/// Checks read on each orientation of a path.
const ORIENTED_PATH_CHECKS: [(Check, PathPredicate); 11] = [
    (Check::PathInclusionChain, inclusion_chain),
    (Check::PathUnionCollapse, union_collapse),
    (Check::PathParityMonotone, parity_monotone),
    (Check::PathMinDegreeEnd, min_degree_end),
    (Check::PathUnionDivides, union_divides),
    (Check::SpanningPathDivides, spanning_divides),
    (Check::PathUnionSqrtBound, union_sqrt_bound),
    (Check::P4SimpleMiddlePeak, p4_peak),
    (Check::P4SimpleMiddleValley, p4_valley),
    (Check::P4SimpleMiddleAscending, p4_ascending),
    (Check::P3SimpleTailStructure, p3_simple_tail),
];

/// Checks that do not depend on orientation.
const UNORIENTED_PATH_CHECKS: [(Check, PathPredicate); 3] = [
    (Check::PathMaxDegreeEnd, max_degree_end),
    (Check::P5MiddleMaxForbidden, p5_middle_max),
    (Check::SimpleEdgeTerminal, simple_edge_terminal),
];

fn path_predicate(check: Check) -> Option<PathPredicate> {
    ORIENTED_PATH_CHECKS
        .iter()
        .chain(UNORIENTED_PATH_CHECKS.iter())
        .find(|(c, _)| *c == check)
        .map(|(_, f)| *f)
}

fn pair_predicate(check: Check) -> Option<PairPredicate> {
    PAIR_CHECKS
        .iter()
        .find(|(c, _)| *c == check)
        .map(|(_, f)| *f)
}

// ---- cycle and instance predicates ----

fn cycle_bound(cycle: &[usize]) -> Verdict {
    Verdict::from_bool(cycle.len() <= 4, || {
        format!("induced cycle of length {}", cycle.len())
    })
}

/// `⌈(deg + 1) / 2⌉`.
pub fn diameter_bound_for(switch_degree: u64) -> u64 {
    (switch_degree + 2) / 2
}

fn diameter_bound(phi: &FactorGraph, switch_degree: u64) -> Option<Verdict> {
    let diam = phi.diameter().value()? as u64;
    let bound = diameter_bound_for(switch_degree);
    Some(Verdict::from_bool(diam <= bound, || {
        format!("diameter {diam} exceeds ⌈(deg+1)/2⌉ = {bound}")
    }))
}

fn formula_matches_enumeration(
    formula: &FactorGraph,
    enumerated: &FactorGraph,
    p: usize,
    q: usize,
) -> Verdict {
    let (a, b) = (formula.multiplicity(p, q), enumerated.multiplicity(p, q));
    Verdict::from_bool(a == b, || {
        format!("formula gives {a}, enumeration gives {b}")
    })
}

// ---- drivers ----

struct Tallies(Vec<Tally>);

impl Tallies {
    fn new(checks: &[Check]) -> Self {
        Tallies(checks.iter().map(|&c| Tally::new(c)).collect())
    }

    fn get(&mut self, check: Check) -> &mut Tally {
        let idx = self
            .0
            .iter()
            .position(|t| t.check() == check)
            .expect("check registered");
        &mut self.0[idx]
    }

    fn finish(self) -> Vec<CheckResult> {
        self.0.into_iter().map(Tally::finish).collect()
    }
}

fn run_pairs(c: &Ctx<'_>, tallies: &mut Tallies) {
    let n = c.phi.order();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            for (check, f) in PAIR_CHECKS {
                // symmetric predicates are read once per unordered pair
                if check != Check::ZeroMultiplicityInclusion && u > v {
                    continue;
                }
                tallies
                    .get(check)
                    .record(f(c, u, v), || Witness::Pair(u, v));
            }
        }
    }
}

fn run_path(c: &Ctx<'_>, path: &[usize], tallies: &mut Tallies, checks: &[Check]) {
    for &(check, f) in &UNORIENTED_PATH_CHECKS {
        if checks.contains(&check) {
            tallies
                .get(check)
                .record(f(c, path), || Witness::Path(path.to_vec()));
        }
    }
    let reversed: Vec<usize> = path.iter().rev().copied().collect();
    for oriented in [path, &reversed[..]] {
        for &(check, f) in &ORIENTED_PATH_CHECKS {
            if checks.contains(&check) {
                tallies
                    .get(check)
                    .record(f(c, oriented), || Witness::Path(oriented.to_vec()));
            }
        }
    }
}

/// Options for [`verify_with`].
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub instance: String,
    /// Longest induced path (in vertices) to enumerate; `None` means `|I|`.
    pub max_path_len: Option<usize>,
}

/// Runs every instance check on `graph` with default options.
pub fn verify_all(graph: &SplitGraph) -> VerificationReport {
    verify_with(graph, &VerifyOptions::default())
}

pub fn verify_with(graph: &SplitGraph, opts: &VerifyOptions) -> VerificationReport {
    let phi = build_by_formula(graph);
    let enumerated = build_by_enumeration(graph);
    let degree = two_switch_degree(graph);
    let c = Ctx::new(graph, &phi);
    let mut tallies = Tallies::new(&Check::INSTANCE);

    let n = phi.order();
    for p in 0..n {
        for q in p + 1..n {
            tallies
                .get(Check::FormulaMatchesEnumeration)
                .record(formula_matches_enumeration(&phi, &enumerated, p, q), || {
                    Witness::Pair(p, q)
                });
        }
    }
    tallies.get(Check::SizeEqualsSwitchDegree).record(
        Verdict::from_bool(phi.size() == degree, || {
            format!("size {} but {degree} 2-switches", phi.size())
        }),
        || Witness::Instance,
    );

    run_pairs(&c, &mut tallies);

    let max_len = opts.max_path_len.unwrap_or(n);
    for path in enumerate_induced_paths(&phi, max_len) {
        run_path(&c, path.vertices(), &mut tallies, &Check::INSTANCE);
    }
    for cycle in enumerate_induced_cycles(&phi) {
        tallies
            .get(Check::CycleLengthBound)
            .record(cycle_bound(cycle.vertices()), || {
                Witness::Cycle(cycle.vertices().to_vec())
            });
    }

    let mut results = tallies.finish();
    if let Some(verdict) = diameter_bound(&phi, degree) {
        let mut t = Tally::new(Check::DiameterBound);
        t.record(verdict, || Witness::Instance);
        replace(&mut results, t.finish());
    } else {
        replace(
            &mut results,
            Tally::not_applicable(Check::DiameterBound, "factor graph is disconnected"),
        );
    }

    VerificationReport {
        instance: opts.instance.clone(),
        labels: phi.labels().to_vec(),
        checks: results,
    }
}

fn replace(results: &mut [CheckResult], result: CheckResult) {
    if let Some(slot) = results.iter_mut().find(|r| r.check == result.check) {
        *slot = result;
    }
}

/// Position of the maximum degree plus the inclusion-chain, union, parity
/// and minimum-degree checks, on one induced path of `phi`.
///
/// The last four are read on every orientation whose first vertex attains
/// the maximum degree. When the maximum sits only at the second (or second
/// to last) position, they are read on the sub-path starting there instead.
pub fn check_path_structure(
    graph: &SplitGraph,
    phi: &FactorGraph,
    path: &InducedPath,
) -> Result<Vec<CheckResult>> {
    let path = InducedPath::new(phi, path.vertices().to_vec())?;
    let c = Ctx::new(graph, phi);
    let items = [
        Check::PathInclusionChain,
        Check::PathUnionCollapse,
        Check::PathParityMonotone,
        Check::PathMinDegreeEnd,
    ];
    let mut tallies = Tallies::new(&[&[Check::PathMaxDegreeEnd][..], &items[..]].concat());
    let vs = path.vertices();
    tallies
        .get(Check::PathMaxDegreeEnd)
        .record(max_degree_end(&c, vs), || Witness::Path(vs.to_vec()));
    let reversed: Vec<usize> = vs.iter().rev().copied().collect();
    for oriented in [vs, &reversed[..]] {
        let anchor = if anchored(&c, oriented) {
            Some(oriented)
        } else if oriented.len() >= 3 && anchored(&c, &oriented[1..]) {
            Some(&oriented[1..])
        } else {
            None
        };
        if let Some(p) = anchor {
            for check in items {
                let f = path_predicate(check).expect("path check");
                tallies
                    .get(check)
                    .record(f(&c, p), || Witness::Path(p.to_vec()));
            }
        }
    }
    Ok(tallies.finish())
}

/// No induced 5-vertex path has its maximum `S`-degree at the middle vertex.
pub fn check_p5_forbidden(graph: &SplitGraph, phi: &FactorGraph) -> CheckResult {
    let c = Ctx::new(graph, phi);
    let mut tally = Tally::new(Check::P5MiddleMaxForbidden);
    for path in enumerate_induced_paths(phi, 5) {
        let vs = path.vertices();
        tally.record(p5_middle_max(&c, vs), || Witness::Path(vs.to_vec()));
    }
    tally.finish()
}

/// Divisibility of `σ_12` by `|∪N_i| − d_1` (and by `|K| − d_1` when `Φ` is
/// the path itself and `K` is covered), plus `|∪N_i| ≤ d_1 + √σ_12`.
pub fn check_divisibility(
    graph: &SplitGraph,
    phi: &FactorGraph,
    path: &InducedPath,
) -> Result<Vec<CheckResult>> {
    let path = InducedPath::new(phi, path.vertices().to_vec())?;
    let c = Ctx::new(graph, phi);
    let checks = [
        Check::PathUnionDivides,
        Check::SpanningPathDivides,
        Check::PathUnionSqrtBound,
    ];
    let mut tallies = Tallies::new(&checks);
    run_path(&c, path.vertices(), &mut tallies, &checks);
    Ok(tallies.finish())
}

/// Every induced cycle of `phi` has length 3 or 4.
pub fn check_cycle_bound(phi: &FactorGraph) -> CheckResult {
    let mut tally = Tally::new(Check::CycleLengthBound);
    for cycle in enumerate_induced_cycles(phi) {
        tally.record(cycle_bound(cycle.vertices()), || {
            Witness::Cycle(cycle.vertices().to_vec())
        });
    }
    tally.finish()
}

/// Only terminal edges of an induced path may be simple, together with the
/// degree-pattern exclusions on induced `P_4`s and the structure of induced
/// `P_3`s ending in a simple edge.
pub fn check_simple_edge_positions(graph: &SplitGraph, phi: &FactorGraph) -> Vec<CheckResult> {
    let c = Ctx::new(graph, phi);
    let checks = [
        Check::SimpleEdgeTerminal,
        Check::P4SimpleMiddlePeak,
        Check::P4SimpleMiddleValley,
        Check::P4SimpleMiddleAscending,
        Check::P3SimpleTailStructure,
    ];
    let mut tallies = Tallies::new(&checks);
    for path in enumerate_induced_paths(phi, phi.order()) {
        run_path(&c, path.vertices(), &mut tallies, &checks);
    }
    tallies.finish()
}

/// `diam Φ ≤ ⌈(deg(S) + 1)/2⌉` when `Φ` is connected; not applicable otherwise.
pub fn check_diameter_bound(graph: &SplitGraph, phi: &FactorGraph) -> CheckResult {
    match diameter_bound(phi, two_switch_degree(graph)) {
        Some(verdict) => {
            let mut t = Tally::new(Check::DiameterBound);
            t.record(verdict, || Witness::Instance);
            t.finish()
        }
        None => Tally::not_applicable(Check::DiameterBound, "factor graph is disconnected"),
    }
}

/// The four pairwise multiplicity/neighborhood relations, both directions.
pub fn check_pair_properties(graph: &SplitGraph, phi: &FactorGraph) -> Vec<CheckResult> {
    let c = Ctx::new(graph, phi);
    let mut tallies = Tallies::new(&PAIR_CHECKS.map(|(check, _)| check));
    run_pairs(&c, &mut tallies);
    tallies.finish()
}

/// Replays one check on a witness. `Some(true)` means the violation
/// reproduces; `None` means the check cannot be replayed from `(S, Φ)`.
pub fn recheck(
    graph: &SplitGraph,
    phi: &FactorGraph,
    check: Check,
    witness: &Witness,
) -> Option<bool> {
    let c = Ctx::new(graph, phi);
    let n = phi.order();
    match witness {
        Witness::Path(vs) => {
            let f = path_predicate(check)?;
            InducedPath::new(phi, vs.clone()).ok()?;
            Some(f(&c, vs).is_violated())
        }
        Witness::Pair(u, v) if *u < n && *v < n && u != v => {
            if check == Check::FormulaMatchesEnumeration {
                let formula = build_by_formula(graph);
                let enumerated = build_by_enumeration(graph);
                return Some(
                    formula_matches_enumeration(&formula, &enumerated, *u, *v).is_violated(),
                );
            }
            Some(pair_predicate(check)?(&c, *u, *v).is_violated())
        }
        Witness::Cycle(vs) if check == Check::CycleLengthBound => {
            InducedCycle::new(phi, vs.clone()).ok()?;
            Some(cycle_bound(vs).is_violated())
        }
        Witness::Instance => match check {
            Check::DiameterBound => {
                Some(diameter_bound(phi, two_switch_degree(graph))?.is_violated())
            }
            Check::SizeEqualsSwitchDegree => Some(phi.size() != two_switch_degree(graph)),
            _ => None,
        },
        _ => None,
    }
}

/// Diameter as used by the bound check, for reporting.
pub fn diameter_summary(phi: &FactorGraph) -> String {
    match phi.diameter() {
        Diameter::Empty => "0 (empty)".to_owned(),
        Diameter::Connected(d) => d.to_string(),
        Diameter::Disconnected(ds) => format!("disconnected {ds:?}"),
    }
}
