//! Brute-force oracles shared by the integration tests. None of them reuse
//! the library's enumeration code; they work from the definitions.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use splitfactor::{FactorGraph, SimpleGraph, SplitGraph};

/// Per-pair 2-switch counts from the definition on the whole graph: ordered
/// 4-tuples `(a, b, c, d)` of distinct vertices with `ab, cd ∈ E` and
/// `ad, bc ∉ E`. Each switch appears as `(a,b,c,d)`, `(c,d,a,b)`,
/// `(b,a,d,c)` and `(d,c,b,a)`, so tuple counts are divided by 4.
///
/// Panics if a switch deletes an edge that does not join `I` to `K`.
pub fn quartic_switch_counts(s: &SplitGraph) -> BTreeMap<(usize, usize), u64> {
    let n = s.order();
    let mut tuples: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if b == a || !s.is_adjacent(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c || !s.is_adjacent(c, d) {
                        continue;
                    }
                    if s.is_adjacent(a, d) || s.is_adjacent(b, c) {
                        continue;
                    }
                    let end = |p: usize, q: usize| {
                        let (pi, qi) = (s.is_independent_vertex(p), s.is_independent_vertex(q));
                        assert!(pi != qi, "deleted edge {p}-{q} does not join I to K");
                        if pi {
                            p
                        } else {
                            q
                        }
                    };
                    let (u, v) = (end(a, b), end(c, d));
                    assert_ne!(u, v);
                    let key = (u.min(v) - s.k_len(), u.max(v) - s.k_len());
                    *tuples.entry(key).or_default() += 1;
                }
            }
        }
    }
    tuples
        .into_iter()
        .map(|(key, t)| {
            assert_eq!(t % 4, 0, "tuple count {t} for {key:?} not a multiple of 4");
            (key, t / 4)
        })
        .collect()
}

pub fn multiplicities(phi: &FactorGraph) -> BTreeMap<(usize, usize), u64> {
    phi.edges().map(|(u, v, m)| ((u, v), m)).collect()
}

/// Every sequence of distinct vertices of `0..n`, of length `1..=n`.
pub fn all_sequences(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                extend(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Induced paths with at least two vertices, each listed once with
/// `first < last`.
pub fn brute_induced_paths(phi: &FactorGraph) -> BTreeSet<Vec<usize>> {
    all_sequences(phi.order())
        .into_iter()
        .filter(|seq| seq.len() >= 2 && seq[0] < seq[seq.len() - 1])
        .filter(|seq| {
            (0..seq.len()).all(|i| {
                (i + 1..seq.len()).all(|j| phi.is_adjacent(seq[i], seq[j]) == (j == i + 1))
            })
        })
        .collect()
}

/// Induced cycles of length at least 3, each starting at its smallest
/// vertex with `second < last`.
pub fn brute_induced_cycles(phi: &FactorGraph) -> BTreeSet<Vec<usize>> {
    all_sequences(phi.order())
        .into_iter()
        .filter(|seq| {
            let n = seq.len();
            n >= 3 && seq.iter().all(|&v| v >= seq[0]) && seq[1] < seq[n - 1]
        })
        .filter(|seq| {
            let n = seq.len();
            (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                    phi.is_adjacent(seq[i], seq[j]) == consecutive
                })
            })
        })
        .collect()
}

/// Diameter of the underlying simple graph by Floyd–Warshall; `None` if
/// disconnected, `Some(0)` for at most one vertex.
pub fn floyd_diameter(phi: &FactorGraph) -> Option<usize> {
    let n = phi.order();
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v, _) in phi.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

/// Every clique/independent-set bipartition, as the set of clique vertices.
pub fn split_partitions(g: &SimpleGraph) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter_map(|mask| {
            let inside = |v: usize| mask >> v & 1 == 1;
            let ok = (0..n).all(|u| {
                (u + 1..n).all(|v| match (inside(u), inside(v)) {
                    (true, true) => g.is_adjacent(u, v),
                    (false, false) => !g.is_adjacent(u, v),
                    _ => true,
                })
            });
            ok.then(|| (0..n).filter(|&v| inside(v)).collect())
        })
        .collect()
}

/// The partition the recognizer must return: maximum `|K|`, and among
/// those the one whose clique holds the smallest-labelled vertex that is in
/// some but not all maximum cliques.
pub fn expected_partition(g: &SimpleGraph) -> Option<BTreeSet<usize>> {
    let all = split_partitions(g);
    let best = all.iter().map(BTreeSet::len).max()?;
    let maximum: Vec<&BTreeSet<usize>> = all.iter().filter(|k| k.len() == best).collect();
    let union: BTreeSet<usize> = maximum.iter().flat_map(|k| k.iter().copied()).collect();
    let common: BTreeSet<usize> = union
        .iter()
        .copied()
        .filter(|v| maximum.iter().all(|k| k.contains(v)))
        .collect();
    let swing = union
        .difference(&common)
        .min_by(|&&a, &&b| g.label(a).cmp(g.label(b)));
    Some(match swing {
        None => maximum[0].clone(),
        Some(&s) => {
            let holding: Vec<_> = maximum.iter().filter(|k| k.contains(&s)).collect();
            assert_eq!(holding.len(), 1, "swing vertex picks a unique partition");
            (*holding[0]).clone()
        }
    })
}

/// Split graph from `K`-neighborhood bit-masks, labelled `x1 … xk` and
/// `1 … i`.
pub fn from_masks(k: usize, masks: &[u64]) -> SplitGraph {
    SplitGraph::from_neighborhoods(
        (1..=k).map(|x| format!("x{x}")).collect(),
        (1..=masks.len()).map(|v| v.to_string()).collect(),
        masks
            .iter()
            .map(|&m| (0..k).filter(move |&x| m >> x & 1 == 1)),
    )
    .unwrap()
}
