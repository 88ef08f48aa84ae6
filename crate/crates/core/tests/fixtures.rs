//! Named polytopes and graphs with frozen expected values.

use fdim_core::fiber::{is_markov_basis, min_markov_basis_size};
use fdim_core::graph::{is_isomorphic, Graph};
use fdim_core::lattice::{is_normal_point_set, lattice_quotient_distinct, LatticePolytope, Sublattice};
use fdim_core::{embed, Limits, MoveSet, Point};

fn triangle() -> LatticePolytope {
    LatticePolytope::from_coords(&[[-1, 0], [3, -1], [2, 2]]).unwrap()
}

#[test]
fn triangle_has_eight_points() {
    let pts = triangle().lattice_points(&Limits::default()).unwrap();
    let expected: Vec<Point> =
        [[-1, 0], [0, 0], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, -1]].into_iter().map(Point::from).collect();
    assert_eq!(pts, expected);
    assert_eq!(triangle().dimension(), 2);
}

/// The smallest Markov basis of the triangle, found by the exhaustive
/// search and checked independently here.
#[test]
fn triangle_markov_witness() {
    let l = Limits::default();
    let witness = MoveSet::from_representatives(2, [[1, 0], [0, 1], [1, -3]].map(Point::from)).unwrap();
    assert!(is_markov_basis(&triangle(), &witness, &l).unwrap());
    assert_eq!(min_markov_basis_size(&triangle(), 6, &l).unwrap(), Some(6));
    assert_eq!(min_markov_basis_size(&triangle(), 4, &l).unwrap(), None);
}

#[test]
fn named_difference_graphs() {
    assert!(is_isomorphic(&Graph::difference(5, &[2, 3]), &Graph::cycle(5)).is_some());
    assert!(is_isomorphic(&Graph::difference(10, &[3, 7]), &Graph::cycle(10)).is_some());
}

#[test]
fn normal_sets() {
    let l = Limits::default();
    let cube: Vec<Point> = LatticePolytope::unit_cube(3).generators().to_vec();
    for mask in 1u32..256 {
        let subset: Vec<Point> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| cube[i].clone()).collect();
        assert!(is_normal_point_set(&subset, &l).unwrap());
    }
    assert!(!is_normal_point_set(&[Point::from([0]), Point::from([2])], &l).unwrap());
    // chromatic construction for classes of sizes (2, 2, 1)
    let w = [[1, 0, 0, 0, 0, 0], [1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 0]];
    assert!(is_normal_point_set(&w.map(|r| Point(r.to_vec())), &l).unwrap());
}

#[test]
fn complete_graph_embeddings_are_parity_distinct() {
    let l = Limits::default();
    for n in 2..=16 {
        let e = embed::embed_complete_multipartite(&vec![1; n], &l).unwrap();
        let two = Sublattice::scaled(e.dimension(), 2).unwrap();
        assert!(lattice_quotient_distinct(&e.vertex_map, &two).unwrap().distinct, "K_{n}");
    }
}
