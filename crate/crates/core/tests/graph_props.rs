use fdim_core::graph::{cartesian_product, color, is_isomorphic, ColoringMode, Graph};
use proptest::prelude::*;

fn graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (1..=max_nodes).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect::<Vec<_>>()).unwrap()
        })
    })
}

fn has_odd_cycle(g: &Graph) -> bool {
    // BFS layering: an edge inside a layer closes an odd cycle.
    let n = g.node_count();
    let mut depth = vec![usize::MAX; n];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if depth[v] == depth[u] {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #[test]
    fn relabeled_graphs_are_isomorphic(g in graph(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.node_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        let m = is_isomorphic(&g, &h).expect("relabeling is an isomorphism");
        prop_assert!(m.is_isomorphism(&g, &h));
    }

    #[test]
    fn isomorphism_answers_are_certified(g in graph(7), h in graph(7)) {
        if let Some(m) = is_isomorphic(&g, &h) {
            prop_assert!(m.is_isomorphism(&g, &h));
        } else {
            prop_assert!(g.node_count() != h.node_count() || g.edge_count() != h.edge_count()
                || g.degree_sequence() != h.degree_sequence() || !brute_isomorphic(&g, &h));
        }
    }

    #[test]
    fn exact_coloring_never_beats_greedy_upward(g in graph(10)) {
        let exact = color(&g, ColoringMode::Exact).unwrap();
        let greedy = color(&g, ColoringMode::Greedy).unwrap();
        prop_assert!(exact.k <= greedy.k);
        prop_assert!(exact.exact && !greedy.exact);
        for (u, v) in g.edges() {
            prop_assert_ne!(exact.class_of[u], exact.class_of[v]);
        }
        prop_assert!(exact.k >= g.clique_number());
    }

    #[test]
    fn products_commute_and_associate(a in graph(3), b in graph(3), c in graph(3)) {
        prop_assert!(is_isomorphic(&cartesian_product(&a, &b), &cartesian_product(&b, &a)).is_some());
        let left = cartesian_product(&cartesian_product(&a, &b), &c);
        let right = cartesian_product(&a, &cartesian_product(&b, &c));
        prop_assert!(is_isomorphic(&left, &right).is_some());
    }

    #[test]
    fn bipartite_iff_no_odd_cycle(g in graph(12)) {
        let p = g.properties();
        prop_assert_eq!(p.bipartite, !has_odd_cycle(&g));
        if let Some(side) = g.two_coloring() {
            prop_assert!(g.edges().all(|(u, v)| side[u] != side[v]));
        }
    }
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = image.len();
        if u == g.node_count() {
            return true;
        }
        for t in 0..h.node_count() {
            if used[t] || (0..u).any(|w| g.has_edge(w, u) != h.has_edge(image[w], t)) {
                continue;
            }
            used[t] = true;
            image.push(t);
            if rec(g, h, image, used) {
                return true;
            }
            image.pop();
            used[t] = false;
        }
        false
    }
    g.node_count() == h.node_count() && rec(g, h, &mut Vec::new(), &mut vec![false; h.node_count()])
}
