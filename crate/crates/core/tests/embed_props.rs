use std::collections::BTreeSet;

use fdim_core::embed::{
    embed_apex, embed_chromatic, embed_complete_multipartite, embed_cycle, embed_dps, embed_path, embed_product,
    embed_simplex, find_dps_point_set, is_distinct_pair_sum, DpsPointSet, Embedding,
};
use fdim_core::fiber::FiberGraph;
use fdim_core::graph::{all_graphs, color, is_isomorphic, ColoringMode, Graph};
use fdim_core::{Limits, MoveSet};

fn corpus(max_nodes: usize) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=max_nodes).flat_map(all_graphs).collect();
    graphs.push(Graph::petersen());
    graphs
}

/// The fiber graph of the certificate is the source graph, through the
/// vertex map and independently of it.
fn round_trip(e: &Embedding, g: &Graph) {
    let l = Limits::default();
    e.verify(&l).unwrap();
    assert!(e.polytope.is_full_dimensional());
    let fg = FiberGraph::build(&e.polytope, &e.moves, &l).unwrap();
    assert!(is_isomorphic(&fg.graph, g).is_some(), "{:?} lost or gained edges on {g:?}", e.method);
    assert_eq!(fg.graph.edge_count(), g.edge_count());
}

#[test]
#[allow(clippy::int_plus_one)]
fn simplex_and_chromatic_round_trip() {
    let l = Limits::default();
    for g in corpus(7) {
        let s = embed_simplex(&g, &l).unwrap();
        round_trip(&s, &g);
        assert_eq!(s.dimension(), g.node_count() - 1);
        for mode in [ColoringMode::Exact, ColoringMode::Greedy] {
            let c = color(&g, mode).unwrap();
            let e = embed_chromatic(&g, &c, &l).unwrap();
            round_trip(&e, &g);
            assert!(e.dimension() <= 2 * c.k - c.singleton_classes() - 1);
            if mode == ColoringMode::Exact {
                assert!(e.dimension() < 2 * c.k);
            }
        }
    }
}

#[test]
fn apex_and_product_round_trip() {
    let l = Limits::default();
    let k2 = embed_path(2, &l).unwrap();
    for g in corpus(6) {
        if g.node_count() >= 2 {
            for v in [0, g.node_count() - 1] {
                let sub = embed_simplex(&g.remove_node(v), &l).unwrap();
                match embed_apex(&g, v, &sub, &l) {
                    Ok(e) => {
                        round_trip(&e, &g);
                        assert_eq!(e.dimension(), sub.dimension() + 1);
                    }
                    Err(err) => assert!(matches!(err, fdim_core::Error::MoveSet(_)), "{err}"),
                }
            }
        }
        if g.node_count() <= 5 {
            let base = embed_simplex(&g, &l).unwrap();
            let p = embed_product(&[base.clone(), k2.clone()], &l).unwrap();
            assert_eq!(p.dimension(), base.dimension() + 1);
            round_trip(&p, &fdim_core::graph::cartesian_product(&g, &k2.graph));
        }
    }
}

#[test]
fn cycle_dimensions() {
    let l = Limits::default();
    for n in 3..=50 {
        let e = embed_cycle(n, &l).unwrap();
        round_trip(&e, &Graph::cycle(n));
        assert_eq!(e.dimension() == 1, ![3, 4, 6].contains(&n), "C_{n}");
        assert!(e.dimension() <= 2);
    }
}

#[test]
fn multipartite_dimensions() {
    let l = Limits::default();
    let log2 = |n: usize| (n as f64).log2().ceil() as usize;
    for sizes in [vec![1, 1, 1], vec![2, 2], vec![1, 3], vec![3, 3, 2], vec![1, 1, 1, 1, 1], vec![4, 1], vec![2, 3, 4, 1]] {
        let e = embed_complete_multipartite(&sizes, &l).unwrap();
        round_trip(&e, &Graph::complete_multipartite(&sizes));
        assert!(e.dimension() <= log2(sizes.len()) + log2(*sizes.iter().max().unwrap()));
        let fg = FiberGraph::build(&e.polytope, &e.moves, &l).unwrap();
        assert!(fg.unused_moves().is_empty());
    }
}

fn assert_sums_injective(s: &DpsPointSet) {
    let pts = s.points();
    let mut seen = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            assert!(seen.insert(&pts[i] + &pts[j]));
        }
    }
    assert_eq!(seen.len(), s.pair_sum_count());
}

#[test]
fn dps_embeddings() {
    let l = Limits::default();
    let found = find_dps_point_set(4, 2, 2, &l).unwrap().unwrap();
    assert_sums_injective(&found);
    for g in all_graphs(4) {
        let e = embed_dps(&g, &found, &l).unwrap();
        round_trip(&e, &g);
        assert!(e.dimension() <= 2);
        MoveSet::validate(e.moves.ambient_dim(), e.moves.all()).unwrap();
    }
    for n in 1..=6 {
        let simplex = DpsPointSet::simplex(n, &l).unwrap();
        assert_sums_injective(&simplex);
        for g in all_graphs(n) {
            let a = embed_dps(&g, &simplex, &l).unwrap();
            let b = embed_simplex(&g, &l).unwrap();
            assert_eq!(a.dimension(), b.dimension());
            assert_eq!(a.moves.len(), b.moves.len());
            let fa = FiberGraph::build(&a.polytope, &a.moves, &l).unwrap();
            let fb = FiberGraph::build(&b.polytope, &b.moves, &l).unwrap();
            assert!(is_isomorphic(&fa.graph, &fb.graph).is_some());
        }
    }
    let r = is_distinct_pair_sum(found.points(), &l).unwrap();
    assert!(r.dps);
}
