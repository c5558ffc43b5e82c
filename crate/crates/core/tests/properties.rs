mod common;

use homdens::engine::count_homomorphisms_with;
use homdens::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use homdens::{
    count_homomorphisms, count_homomorphisms_naive, count_injective, count_mappings,
    count_ordered_cliques, count_proper_colorings, density, injective_density, Count, Density,
    EngineConfig, Graph,
};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::chromatic_deletion_contraction;

/// A labelled graph on `lo..=hi` vertices, each pair present independently.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engine_agrees_with_naive(g in graph(0, 6), f in graph(0, 5)) {
        let naive = count_homomorphisms_naive(&g, &f).unwrap();
        prop_assert_eq!(count_homomorphisms(&g, &f).0, naive);
    }

    #[test]
    fn stats_do_not_depend_on_threads(g in graph(1, 7), f in graph(1, 6), threads in 2usize..6) {
        let one = count_homomorphisms(&g, &f).1;
        let config = EngineConfig { threads, ..EngineConfig::default() };
        let (count, many) = count_homomorphisms_with(&g, &f, &config);
        prop_assert_eq!(count, count_homomorphisms(&g, &f).0);
        prop_assert_eq!((one.nodes_expanded, one.prunes, one.fast_path),
                        (many.nodes_expanded, many.prunes, many.fast_path));
    }

    #[test]
    fn hom_sits_between_zero_and_mappings(g in graph(1, 6), f in graph(1, 6)) {
        let hom = count_homomorphisms(&g, &f).0;
        prop_assert!(hom <= count_mappings(&g, &f));
        let t = density(&g, &f).unwrap();
        prop_assert!(t >= Density::zero() && t <= Density::one());
        prop_assert_eq!(t.is_one(), g.is_edgeless());
    }

    #[test]
    fn complete_domain_and_codomain_bounds(g in graph(0, 5), n in 0usize..5, m in 1usize..6) {
        let kn = Graph::complete(n);
        let km = Graph::complete(m);
        prop_assert!(density(&kn, &km).unwrap() == injective_density(&kn, &km).unwrap());
        prop_assert!(density(&g, &km).unwrap() >= injective_density(&g, &km).unwrap());
        if g.vertex_count() > 0 {
            prop_assert!(density(&kn, &g).unwrap() <= injective_density(&kn, &g).unwrap());
            prop_assert_eq!(count_ordered_cliques(&g, n), count_homomorphisms_naive(&kn, &g).unwrap());
        }
        prop_assert!(count_injective(&g, &km) <= count_homomorphisms(&g, &km).0);
    }

    #[test]
    fn isolated_vertices_scale_hom(g in graph(0, 5), f in graph(1, 5), k in 0usize..3) {
        let base = count_homomorphisms_naive(&g, &f).unwrap();
        let padded = g.with_isolated(k);
        let scale = num_traits::pow(Count::from(f.vertex_count()), k);
        prop_assert_eq!(count_homomorphisms(&padded, &f).0, base * scale);
        prop_assert_eq!(density(&padded, &f).unwrap(), density(&g, &f).unwrap());
    }

    #[test]
    fn colorings_match_chromatic_polynomial(g in graph(0, 6), m in 0usize..5) {
        let colorings = count_proper_colorings(&g, m);
        prop_assert_eq!(BigInt::from(colorings.clone()), chromatic_deletion_contraction(&g, m));
        prop_assert_eq!(colorings, count_homomorphisms_naive(&g, &Graph::complete(m)).unwrap());
    }

    #[test]
    fn formats_round_trip(g in graph(0, 25)) {
        let g6 = write_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(&g6).unwrap(), &g);
        let el = write_edge_list(&g);
        prop_assert_eq!(&parse_edge_list(el.as_bytes()).unwrap(), &g);
    }

    #[test]
    fn complement_swaps_edges(g in graph(0, 8)) {
        let c = g.complement();
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
