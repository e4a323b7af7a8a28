//! Property tests for the invariants of covers, walks, canonical forms,
//! parameter reductions and graph6.

use proptest::prelude::*;

use tricirc::families::{self, family_automorphism, FamilyAutomorphism, FamilyParams, TricirculantType};
use tricirc::graph::SimpleGraph;
use tricirc::io::{decode_graph6, encode_graph6};
use tricirc::pregraph::{delta, reduced_closed_walks};
use tricirc::symmetry::{automorphism_group, canonical, cycles_through_edge, count_cycles, isomorphism, OrbitSet};
use tricirc::verify::parameter_images;
use tricirc::voltage::{quotient, symbolic_walk_sum, SymbolicVoltage};

fn params() -> impl Strategy<Value = FamilyParams> {
    (1usize..=4, 1u64..=12, any::<u64>(), any::<u64>())
        .prop_map(|(t, k, r, s)| FamilyParams::new(TricirculantType::from_index(t).unwrap(), k, r, s).unwrap())
}

fn random_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..40).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let mut edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort();
            edges.dedup();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covers_are_cubic_tricirculants(p in params()) {
        if let Ok(inst) = families::build(p) {
            let g = &inst.graph;
            prop_assert_eq!(g.num_vertices() as u64, 6 * p.k);
            prop_assert!(g.is_cubic());
            let rho = family_automorphism(FamilyAutomorphism::Rho, p.k).unwrap();
            prop_assert!(rho.is_automorphism(g));
            let orbits = OrbitSet::from_generators(g.num_vertices(), &[rho]);
            prop_assert_eq!(orbits.sizes(), vec![2 * p.k as usize; 3]);
            prop_assert_eq!(inst.connected, g.is_connected());
        }
    }

    #[test]
    fn quotient_recovers_the_cover(p in params()) {
        if let Ok(inst) = families::build(p) {
            let rho = family_automorphism(FamilyAutomorphism::Rho, p.k).unwrap();
            let z = quotient(&inst.graph, &rho).unwrap();
            let back = z.derived_cover().unwrap();
            prop_assert!(isomorphism(&back.plain(), &inst.graph.plain()).unwrap().is_some());
        }
    }

    #[test]
    fn reduced_closed_walks_are_closed_under_inversion(d in 1usize..=4, v in 0usize..3, len in 1usize..=9) {
        let p = delta(d).unwrap();
        let walks = reduced_closed_walks(&p, v, len).unwrap();
        for w in &walks {
            let inv = w.inverse(&p);
            prop_assert!(inv.is_reduced(&p) && inv.is_closed(&p));
            prop_assert!(walks.iter().any(|x| x.darts() == inv.darts()));
            prop_assert_eq!(symbolic_walk_sum(&p, &inv).unwrap(), symbolic_walk_sum(&p, w).unwrap().negate());
        }
    }

    #[test]
    fn walk_voltages_evaluate_like_cover_walks(p in params()) {
        let z = p.voltages();
        let base = delta(p.ty.index()).unwrap();
        for w in reduced_closed_walks(&base, 0, 5).unwrap() {
            let symbolic = symbolic_walk_sum(&base, &w).unwrap();
            prop_assert_eq!(symbolic.evaluate(p.k, p.r, p.s), z.net_voltage(&w).unwrap());
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in random_graph(), seed in any::<u64>()) {
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle from the seed
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical(&g).unwrap().graph, canonical(&h).unwrap().graph);
        let iso = isomorphism(&g, &h).unwrap().unwrap();
        for (a, b) in g.edges() {
            prop_assert!(h.has_edge(iso.apply(a), iso.apply(b)));
        }
    }

    #[test]
    fn group_generators_are_automorphisms(g in random_graph()) {
        let group = automorphism_group(&g).unwrap();
        for gen in group.generators() {
            prop_assert!(gen.is_automorphism(&g));
        }
        let mut count = 0u128;
        group.for_each_element(1 << 20, |p| { count += 1; p.is_automorphism(&g) }).ok();
        if let Some(order) = group.order().filter(|&o| o <= 1 << 20) {
            prop_assert_eq!(count, order);
        }
    }

    #[test]
    fn edge_cycle_counts_double_count(g in random_graph(), c in 3usize..8) {
        let total: u64 = g.edges().into_iter().map(|e| cycles_through_edge(&g, e, c)).sum();
        prop_assert_eq!(total, c as u64 * count_cycles(&g, c));
    }

    #[test]
    fn graph6_round_trip(g in random_graph()) {
        let text = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(&text).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_cover_structure(p in params(), perm in (1u64..=6).prop_flat_map(|k| permutation(6 * k as usize))) {
        if perm.len() as u64 == 6 * p.k {
            if let Ok(inst) = families::build(p) {
                let h = inst.graph.relabel(&perm);
                prop_assert_eq!(h.num_edges(), inst.graph.num_edges());
                prop_assert!(isomorphism(&inst.graph, &h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn symbolic_voltages_round_trip(eps in 0u8..2, r in -9i64..9, s in -9i64..9) {
        let v = SymbolicVoltage::new(eps, r, s);
        prop_assert_eq!(v.to_string().parse::<SymbolicVoltage>().unwrap(), v);
        prop_assert_eq!(v.normalized(), v.negate().normalized());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parameter_images_are_isomorphic(p in params()) {
        if let Ok(inst) = families::build(p) {
            let f = canonical(&inst.graph).unwrap().graph;
            for q in parameter_images(p) {
                let other = families::build(q).unwrap();
                prop_assert_eq!(&canonical(&other.graph).unwrap().graph, &f, "{} vs {}", p, q);
            }
        }
    }

    #[test]
    fn graph6_round_trip_large(n in 40usize..=600, seed in any::<u64>()) {
        let mut x = seed | 1;
        let mut edges = Vec::new();
        for a in 0..n {
            for _ in 0..2 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let b = (x % n as u64) as usize;
                if a != b {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort();
        edges.dedup();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}
