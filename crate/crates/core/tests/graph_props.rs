use chibound::graph::distance_layers;
use chibound::io::{parse_dimacs, parse_graph6, to_dimacs, to_graph6};
use chibound::{complement, disjoint_union, expansion, join, make_basic, mycielskian, BasicKind, Graph};
use proptest::prelude::*;

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_irreflexive(g in graph(14)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn complement_is_an_involution(g in graph(14)) {
        let c = complement(&g);
        let n = g.order();
        prop_assert_eq!(c.size() + g.size(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn join_and_union_sizes(g in graph(9), h in graph(9)) {
        let j = join(&g, &h);
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        let u = disjoint_union(&g, &h);
        prop_assert_eq!(u.size(), g.size() + h.size());
    }

    #[test]
    fn complete_expansion_is_iterated_join(h in graph(5), k in 1usize..4) {
        let kk = make_basic(BasicKind::Complete(k)).unwrap();
        let e = expansion(&kk, &vec![h.clone(); k]).unwrap();
        let mut j = h.clone();
        for _ in 1..k {
            j = join(&j, &h);
        }
        prop_assert_eq!(e, j);
    }

    #[test]
    fn mycielskian_edge_count(g in graph(10)) {
        let m = mycielskian(&g);
        prop_assert_eq!(m.order(), 2 * g.order() + 1);
        prop_assert_eq!(m.size(), 3 * g.size() + g.order());
    }

    #[test]
    fn distance_layers_partition_reachable_part(g in graph(12), seed in any::<u64>()) {
        prop_assume!(g.order() > 0);
        let x = g.set_of([seed as usize % g.order()]);
        let layers = distance_layers(&g, &x);
        let mut seen = g.empty_set();
        for l in &layers {
            prop_assert!(l.is_disjoint(&seen));
            seen.union_with(l);
        }
        for v in &seen.complement() {
            prop_assert!(g.neighbors(v).is_disjoint(&seen));
        }
    }

    #[test]
    fn formats_round_trip(g in graph(30)) {
        prop_assert_eq!(&parse_graph6(&to_graph6(&g)).unwrap(), &g);
        let text = to_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_dimacs(&back), text);
    }
}
