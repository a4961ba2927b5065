mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use splitfactor::{
    apply_two_switch, build_by_enumeration, build_by_formula, enumerate_induced_cycles,
    enumerate_induced_paths, enumerate_two_switches, recognize_split, two_switch_degree,
    verify_all, SimpleGraph, SplitGraph,
};

use common::*;

fn split_graph(max_k: usize, max_i: usize) -> impl Strategy<Value = SplitGraph> {
    (0..=max_k, 0..=max_i).prop_flat_map(|(k, i)| {
        let limit = 1u64 << k;
        proptest::collection::vec(0..limit, i).prop_map(move |masks| from_masks(k, &masks))
    })
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges: Vec<_> = pairs
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e)
                    .collect();
                SimpleGraph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn eta_is_symmetric_and_bounded(s in split_graph(6, 6)) {
        for p in 0..s.i_len() {
            prop_assert!(s.eta(s.i_vertex(p), s.i_vertex(p)).is_err());
            for q in p + 1..s.i_len() {
                let (u, v) = (s.i_vertex(p), s.i_vertex(q));
                let eta = s.eta(u, v).unwrap();
                prop_assert_eq!(eta, s.eta(v, u).unwrap());
                prop_assert!(eta <= s.degree(u).min(s.degree(v)));
            }
        }
    }

    #[test]
    fn moves_preserve_degrees_and_reverse(s in split_graph(5, 5)) {
        let degrees = s.degree_sequence();
        for mv in enumerate_two_switches(&s) {
            let t = apply_two_switch(&s, mv).unwrap();
            t.check_invariants().unwrap();
            prop_assert_eq!(t.degree_sequence(), degrees.clone());
            prop_assert_eq!(t.edge_count(), s.edge_count());
            prop_assert_ne!(&t, &s);
            let back = apply_two_switch(&t, mv.reverse()).unwrap();
            prop_assert_eq!(&back, &s);
        }
    }

    #[test]
    fn formula_enumeration_and_quartic_agree(s in split_graph(5, 5)) {
        let formula = build_by_formula(&s);
        let enumerated = build_by_enumeration(&s);
        prop_assert_eq!(&formula, &enumerated);
        prop_assert_eq!(multiplicities(&formula), quartic_switch_counts(&s));
        prop_assert_eq!(formula.size(), two_switch_degree(&s));
    }

    #[test]
    fn multiplicity_bounded_by_degree_product(s in split_graph(7, 6)) {
        let phi = build_by_formula(&s);
        for (p, q, m) in phi.edges() {
            let (du, dv) = (s.degree(s.i_vertex(p)) as u64, s.degree(s.i_vertex(q)) as u64);
            prop_assert!(m >= 1 && m <= du * dv);
        }
    }

    #[test]
    fn enumerators_match_brute_force(s in split_graph(6, 6)) {
        let phi = build_by_formula(&s);
        let paths: BTreeSet<Vec<usize>> = enumerate_induced_paths(&phi, phi.order())
            .iter()
            .map(|p| p.vertices().to_vec())
            .collect();
        prop_assert_eq!(paths, brute_induced_paths(&phi));
        let cycles: BTreeSet<Vec<usize>> = enumerate_induced_cycles(&phi)
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        prop_assert_eq!(cycles, brute_induced_cycles(&phi));
    }

    #[test]
    fn diameter_matches_floyd(s in split_graph(6, 7)) {
        let phi = build_by_formula(&s);
        prop_assert_eq!(phi.diameter().value(), floyd_diameter(&phi));
    }

    #[test]
    fn every_instance_verifies(s in split_graph(6, 6)) {
        let report = verify_all(&s);
        prop_assert!(report.passed(), "{}\n{}", s.to_text(), report.human());
    }

    #[test]
    fn text_format_round_trips(s in split_graph(6, 6)) {
        let back: SplitGraph = s.to_text().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn recognizer_matches_brute_force(g in simple_graph(8)) {
        let expected = expected_partition(&g);
        let got = recognize_split(&g);
        prop_assert_eq!(got.is_some(), expected.is_some());
        if let (Some((s, part)), Some(k)) = (got, expected) {
            prop_assert_eq!(part.clique.iter().copied().collect::<BTreeSet<_>>(), k);
            prop_assert_eq!(s.k_len() + s.i_len(), g.order());
            prop_assert_eq!(s.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn forgetting_the_partition_keeps_it_split(s in split_graph(5, 5)) {
        let g = SimpleGraph::from(&s);
        let (r, _) = recognize_split(&g).expect("split graphs are recognized");
        prop_assert!(r.k_len() >= s.k_len());
        prop_assert_eq!(r.edge_count(), s.edge_count());
    }
}

#[test]
fn recognizer_matches_brute_force_on_every_small_graph() {
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = SimpleGraph::from_edges(n, &edges).unwrap();
            let got =
                recognize_split(&g).map(|(_, p)| p.clique.into_iter().collect::<BTreeSet<_>>());
            assert_eq!(got, expected_partition(&g), "n={n} edges={edges:?}");
        }
    }
}

#[test]
fn quartic_oracle_on_the_worked_example() {
    let s = from_masks(4, &[0b0001, 0b0010, 0b0101, 0b1011]);
    let counts = quartic_switch_counts(&s);
    assert_eq!(
        counts.into_iter().collect::<Vec<_>>(),
        vec![((0, 1), 1), ((1, 2), 2), ((2, 3), 2)]
    );
}
