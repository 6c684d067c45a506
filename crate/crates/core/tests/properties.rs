use alphak::bounds::{bound_report, brooks_distance_bound, theorem2_bound, firby_haviland_bound, Direction};
use alphak::coloring::{chi_k_exact, chi_k_greedy};
use alphak::io::{parse_graph6, write_graph6};
use alphak::layers::{check_lemma1, is_k_independent, layer_decomposition};
use alphak::power::{alpha_k_bruteforce, alpha_k_exact, alpha_k_greedy, graph_power};
use alphak::{Diameter, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(prop::bool::weighted(0.3), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.6, any::<u64>())
        .prop_map(|(n, p, seed)| alphak::random_connected_graph(n, p, seed).unwrap())
}

fn min_distance_to_set(g: &Graph, s: &[usize]) -> Vec<Option<usize>> {
    let mut best = vec![None; g.vertex_count()];
    for &v in s {
        for (w, d) in g.bfs_distances(v).unwrap().dist.into_iter().enumerate() {
            if let Some(d) = d {
                best[w] = Some(best[w].map_or(d, |b: usize| b.min(d)));
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn distances_are_symmetric(g in graph_strategy(14)) {
        let all: Vec<_> = (0..g.vertex_count()).map(|v| g.bfs_distances(v).unwrap().dist).collect();
        for u in 0..g.vertex_count() {
            prop_assert_eq!(all[u][u], Some(0));
            for v in 0..g.vertex_count() {
                prop_assert_eq!(all[u][v], all[v][u]);
            }
        }
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(70)) {
        let text = write_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), text);
    }

    #[test]
    fn diameter_finite_iff_connected(g in graph_strategy(12)) {
        let finite = g.diameter() != Diameter::Infinite;
        prop_assert_eq!(finite, g.connected_components().len() <= 1);
    }

    #[test]
    fn disjoint_copies_are_unreachable(g in graph_strategy(6), t in 1usize..4) {
        let n = g.vertex_count();
        let u = g.disjoint_union(t).unwrap();
        prop_assert_eq!(u.vertex_count(), n * t);
        prop_assert_eq!(u.edge_count(), g.edge_count() * t);
        for v in 0..u.vertex_count() {
            let d = u.bfs_distances(v).unwrap().dist;
            for w in 0..u.vertex_count() {
                if v / n != w / n {
                    prop_assert_eq!(d[w], None);
                }
            }
        }
    }

    #[test]
    fn layers_match_bfs_levels(g in connected_strategy(14), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let n = g.vertex_count();
        let seed: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        let d = layer_decomposition(&g, &seed).unwrap();
        let dist = min_distance_to_set(&g, &seed);
        for v in 0..n {
            let j = dist[v].unwrap();
            prop_assert!(d.layers[j].contains(&v));
        }
        prop_assert_eq!(d.layers.iter().map(Vec::len).sum::<usize>(), n);
    }

    #[test]
    fn layers_around_independent_sets_do_not_shrink(g in connected_strategy(14), k in 1usize..6) {
        let witness = alpha_k_exact(&g, k).unwrap().witness;
        prop_assume!(witness.len() >= 2);
        let d = layer_decomposition(&g, &witness).unwrap();
        for i in 0..=k / 2 {
            prop_assert!(d.layer_size(i) >= witness.len(), "layer {} smaller than seed", i);
        }
    }

    #[test]
    fn alpha_is_monotone_and_witnesses_valid(g in graph_strategy(12)) {
        let mut prev = usize::MAX;
        for k in 1..=6 {
            let r = alpha_k_exact(&g, k).unwrap();
            prop_assert!(r.alpha <= prev);
            prop_assert_eq!(r.witness.len(), r.alpha);
            prop_assert!(is_k_independent(&g, &r.witness, k).unwrap());
            let greedy = alpha_k_greedy(&g, k).unwrap();
            prop_assert!(greedy.alpha <= r.alpha);
            prop_assert!(is_k_independent(&g, &greedy.witness, k).unwrap());
            prev = r.alpha;
        }
    }

    #[test]
    fn exact_matches_bruteforce(g in graph_strategy(14), k in 1usize..6) {
        prop_assert_eq!(alpha_k_exact(&g, k).unwrap().alpha, alpha_k_bruteforce(&g, k).unwrap().alpha);
    }

    #[test]
    fn chromatic_relations(g in graph_strategy(11), k in 1usize..5) {
        let n = g.vertex_count();
        let chi = chi_k_exact(&g, k).unwrap();
        let chi1 = chi_k_exact(&g, 1).unwrap();
        let alpha = alpha_k_exact(&g, k).unwrap().alpha;
        prop_assert!(chi.is_proper_distance_coloring(&g, k));
        prop_assert!(chi.num_colors * alpha >= n);
        prop_assert!(chi.num_colors >= chi1.num_colors);
        let greedy = chi_k_greedy(&g, k).unwrap();
        prop_assert!(greedy.is_proper_distance_coloring(&g, k));
        prop_assert!(greedy.num_colors >= chi.num_colors);
    }

    #[test]
    fn solvers_are_deterministic(g in graph_strategy(14), k in 1usize..5) {
        prop_assert_eq!(alpha_k_exact(&g, k).unwrap(), alpha_k_exact(&g, k).unwrap());
        prop_assert_eq!(chi_k_greedy(&g, k).unwrap(), chi_k_greedy(&g, k).unwrap());
    }

    #[test]
    fn reported_bounds_are_sound(g in connected_strategy(12), k in 1usize..7) {
        let rep = bound_report(&g, k, true).unwrap();
        let alpha = rep.exact_alpha.unwrap();
        for b in rep.bounds.iter().filter(|b| b.applicable && b.quantity == alphak::Quantity::Alpha) {
            match b.direction {
                Direction::Upper => prop_assert!(alpha as i128 <= b.floor_value, "{:?}", b),
                Direction::Lower => prop_assert!(alpha as i128 >= b.floor_value, "{:?}", b),
            }
        }
        prop_assert!(rep.violations().is_empty());
    }

    #[test]
    fn brooks_dominates_power_degree(g in graph_strategy(14), k in 1usize..4) {
        let n = g.vertex_count();
        let delta = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        prop_assume!(delta >= 3);
        let p = graph_power(&g, k).unwrap();
        let power_delta = (0..n).map(|v| p.degree(v)).max().unwrap();
        prop_assert!((power_delta as u128) < brooks_distance_bound(delta, k).unwrap());
    }

    #[test]
    fn lemma_rows_hold(spine in 2usize..6, depth in 4usize..7, extra in 0usize..3) {
        // long combs keep the seed k-independent with diameter above k
        let k = 2 * depth;
        let g = alphak::constructions::subdivided_comb(k, spine + extra).unwrap();
        let tips = alphak::FamilyParams::SubdividedComb { k, spine: spine + extra }.designated_set().unwrap();
        let audit = check_lemma1(&g, &tips, k).unwrap();
        prop_assert!(audit.all_hold());
    }
}

#[test]
fn leaf_degree_case_matches_even_k_formula() {
    for n in 3..60 {
        for k in (2..16).step_by(2) {
            let t2 = theorem2_bound(n, k, 1, 2.min(n - 1)).unwrap();
            assert_eq!(t2.value, firby_haviland_bound(n, k).unwrap().value);
        }
    }
}
