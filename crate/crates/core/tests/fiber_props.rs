use fdim_core::fiber::{check_bipartite_criterion, is_markov_basis, min_markov_basis_size, FiberGraph};
use fdim_core::lattice::{IntMatrix, LatticePolytope};
use fdim_core::{Limits, MoveSet, Point};
use num_integer::Integer;
use proptest::prelude::*;

fn polytope() -> impl Strategy<Value = LatticePolytope> {
    (1..=3usize).prop_flat_map(|d| {
        proptest::collection::vec(proptest::collection::vec(0i64..=4, d).prop_map(Point), 1..=5)
            .prop_map(move |g| LatticePolytope::new(d, g).unwrap())
    })
}

fn moves(d: usize) -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, d).prop_map(Point), 0..=4)
}

fn with_moves() -> impl Strategy<Value = (LatticePolytope, Vec<Point>)> {
    polytope().prop_flat_map(|p| {
        let d = p.ambient_dim();
        (Just(p), moves(d))
    })
}

proptest! {
    #[test]
    fn edges_match_pair_scan((p, reps) in with_moves()) {
        let Ok(m) = MoveSet::from_representatives(p.ambient_dim(), reps) else { return Ok(()) };
        let fg = FiberGraph::build(&p, &m, &Limits::default()).unwrap();
        let pts = &fg.points;
        let mut pairs = 0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let inm = m.contains(&(&pts[j] - &pts[i]));
                pairs += usize::from(inm);
                prop_assert_eq!(inm, fg.graph.has_edge(i, j));
            }
        }
        prop_assert_eq!(pairs, fg.graph.edge_count());
        prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validation_is_idempotent((p, reps) in with_moves()) {
        let d = p.ambient_dim();
        if let Ok(m) = MoveSet::from_representatives(d, reps) {
            let again = MoveSet::validate(d, m.all()).unwrap();
            prop_assert_eq!(&again, &m);
            prop_assert_eq!(MoveSet::validate(d, again.all()).unwrap(), again);
        }
    }

    /// Markov bases with linearly independent moves and `|M| = 2 dim P`
    /// always give bipartite fiber graphs.
    #[test]
    fn independent_markov_bases_are_bipartite((p, reps) in with_moves()) {
        let d = p.ambient_dim();
        let Ok(m) = MoveSet::from_representatives(d, reps) else { return Ok(()) };
        let rows: Vec<Vec<i64>> = m.positive().iter().map(|x| x.0.clone()).collect();
        if !rows.is_empty() && IntMatrix::from_rows(&rows).rank() != rows.len() {
            return Ok(());
        }
        let r = check_bipartite_criterion(&p, &m, &Limits::default()).unwrap();
        if r.applies {
            prop_assert!(r.bipartite);
        }
    }

    /// A connected one-dimensional fiber graph on at least two points has
    /// moves with gcd 1.
    #[test]
    fn connected_difference_graphs_have_gcd_one(n in 2i64..=12, dset in proptest::collection::btree_set(1i64..=11, 1..=3)) {
        let p = LatticePolytope::interval(1, n);
        let Ok(m) = MoveSet::from_representatives(1, dset.iter().map(|&d| Point::from([d]))) else { return Ok(()) };
        let fg = FiberGraph::build(&p, &m, &Limits::default()).unwrap();
        if fg.graph.properties().connected {
            prop_assert_eq!(dset.iter().fold(0i64, |g, d| g.gcd(d)), 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn markov_size_is_at_least_dimension(p in polytope()) {
        let l = Limits::default();
        if p.lattice_points(&l).unwrap().len() > 9 {
            return Ok(());
        }
        if let Some(size) = min_markov_basis_size(&p, 8, &l).unwrap() {
            prop_assert!(size >= p.dimension());
            prop_assert!(size >= 2 * p.dimension());
        }
    }
}

#[test]
fn non_converse_witness() {
    let l = Limits::default();
    let p = LatticePolytope::interval(1, 8);
    let m = MoveSet::from_representatives(1, [Point::from([3]), Point::from([5])]).unwrap();
    assert!(is_markov_basis(&p, &m, &l).unwrap());
    let r = check_bipartite_criterion(&p, &m, &l).unwrap();
    assert!(!r.applies);
    assert!(r.bipartite);
}
