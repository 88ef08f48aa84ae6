use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::{Embedding, Method};
use crate::error::{Error, Result};
use crate::fiber::MoveSet;
use crate::graph::{cartesian_product, Coloring, Graph};
use crate::lattice::LatticePolytope;
use crate::limits::Limits;
use crate::point::Point;

pub(crate) fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

fn edge_moves(g: &Graph, vertex_map: &[Point], dim: usize) -> Result<MoveSet> {
    Ok(MoveSet::from_representatives(dim, g.edges().map(|(u, v)| &vertex_map[v] - &vertex_map[u]))?)
}

fn check_dimension(e: &Embedding, bound: usize, what: &str) -> Result<()> {
    if e.dimension() > bound {
        return Err(Error::Verification(format!("{what} embedding has dimension {} above its bound {bound}", e.dimension())));
    }
    Ok(())
}

/// Nodes go to the unit vectors `e_i`, edges to the moves `e_i - e_j`.
/// The result has dimension `n - 1`.
pub fn embed_simplex(g: &Graph, limits: &Limits) -> Result<Embedding> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let vertex_map: Vec<Point> = (0..n).map(|i| Point::unit(n, i)).collect();
    let moves = edge_moves(g, &vertex_map, n)?;
    Embedding::reduced(g.clone(), LatticePolytope::standard_simplex(n), moves, vertex_map, Method::Simplex, limits)
}

/// The `j`-th node (by index) of color class `i` goes to `(e_i, j e_i)` in
/// `Z^{2k}`. After reduction the dimension is at most `2k - r - 1`, where
/// `r` counts singleton classes.
pub fn embed_chromatic(g: &Graph, c: &Coloring, limits: &Limits) -> Result<Embedding> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let c = Coloring::from_labels(g, &c.class_of, c.exact)?;
    let k = c.k;
    let mut vertex_map = vec![Point::zero(0); n];
    for (i, class) in c.classes().iter().enumerate() {
        for (j, &u) in class.iter().enumerate() {
            let e = Point::unit(k, i);
            vertex_map[u] = e.concat(&e.scaled(j as i64));
        }
    }
    let moves = edge_moves(g, &vertex_map, 2 * k)?;
    let polytope = LatticePolytope::new(2 * k, vertex_map.clone())?;
    let e = Embedding::reduced(g.clone(), polytope, moves, vertex_map, Method::Chromatic, limits)?;
    check_dimension(&e, 2 * k - c.singleton_classes() - 1, "chromatic")?;
    Ok(e)
}

/// Cartesian product of embeddings: the polytope is the product polytope and
/// the moves are padded with zeros blockwise. Node indices follow
/// [`cartesian_product`].
pub fn embed_product(parts: &[Embedding], limits: &Limits) -> Result<Embedding> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::Unsupported("a product needs at least one factor".into()))?;
    let mut graph = first.graph.clone();
    let mut vertex_map = first.vertex_map.clone();
    let mut generators = first.polytope.vertices();
    let mut moves: Vec<Point> = first.moves.positive().to_vec();
    let mut dim = first.dimension();
    for part in rest {
        let d2 = part.dimension();
        graph = cartesian_product(&graph, &part.graph);
        vertex_map = vertex_map.iter().flat_map(|x| part.vertex_map.iter().map(move |y| x.concat(y))).collect();
        let verts = part.polytope.vertices();
        generators = generators.iter().flat_map(|x| verts.iter().map(move |y| x.concat(y))).collect();
        moves = moves
            .iter()
            .map(|m| m.concat(&Point::zero(d2)))
            .chain(part.moves.positive().iter().map(|m| Point::zero(dim).concat(m)))
            .collect();
        dim += d2;
    }
    let moves = MoveSet::from_representatives(dim, moves)?;
    let polytope = LatticePolytope::new(dim, generators)?;
    let e = Embedding::new(graph, polytope, moves, vertex_map, Method::Product, limits)?;
    let expected: usize = parts.iter().map(Embedding::dimension).sum();
    if e.dimension() != expected {
        return Err(Error::Verification(format!("product has dimension {} instead of {expected}", e.dimension())));
    }
    Ok(e)
}

/// Adds back the node `v` of `g` on top of an embedding `sub` of `g - v`.
///
/// `v` goes to the origin, every other node `u` to `(1, φ(u))`. The old moves
/// become `(0, m)` and each neighbor `u` of `v` contributes the move
/// `(1, φ(u))`. A collision between these (one a multiple of another) is
/// reported as a move-set error.
pub fn embed_apex(g: &Graph, v: usize, sub: &Embedding, limits: &Limits) -> Result<Embedding> {
    let n = g.node_count();
    if v >= n {
        return Err(Error::NodeOutOfRange { index: v, nodes: n });
    }
    if sub.graph != g.remove_node(v) {
        return Err(Error::Verification(format!("sub-embedding is not an embedding of the graph minus node {v}")));
    }
    let d = sub.dimension();
    let origin = Point::zero(d + 1);
    let lift = |x: &Point| Point::from([1]).concat(x);
    let vertex_map: Vec<Point> =
        (0..n).map(|u| if u == v { origin.clone() } else { lift(&sub.vertex_map[if u > v { u - 1 } else { u }]) }).collect();
    let generators = core::iter::once(origin).chain(sub.polytope.generators().iter().map(lift)).collect::<Vec<_>>();
    let moves = sub
        .moves
        .positive()
        .iter()
        .map(|m| Point::from([0]).concat(m))
        .chain(g.neighbors(v).iter().map(|&u| vertex_map[u].clone()))
        .collect::<Vec<_>>();
    let moves = MoveSet::from_representatives(d + 1, moves)?;
    let polytope = LatticePolytope::new(d + 1, generators)?;
    let e = Embedding::new(g.clone(), polytope, moves, vertex_map, Method::Apex, limits)?;
    check_dimension(&e, d + 1, "apex")?;
    Ok(e)
}

/// The path `0 - 1 - ... - (n-1)` as the interval `[0, n-1]` with moves `±1`.
pub fn embed_path(n: usize, limits: &Limits) -> Result<Embedding> {
    embed_difference(&Graph::path(n), &(0..n).collect::<Vec<_>>(), &[1], limits)
}

/// `n` isolated nodes on the interval `[0, n-1]` with no moves.
pub fn embed_edgeless(n: usize, limits: &Limits) -> Result<Embedding> {
    embed_difference(&Graph::empty(n), &(0..n).collect::<Vec<_>>(), &[], limits)
}

/// One-dimensional embedding from a node ordering: node `u` sits at
/// `position[u]` in `[0, n-1]` and the moves are `±d` for `d` in `dset`.
pub fn embed_difference(g: &Graph, position: &[usize], dset: &[usize], limits: &Limits) -> Result<Embedding> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if position.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: position.len() });
    }
    let vertex_map: Vec<Point> = position.iter().map(|&p| Point::from([p as i64])).collect();
    let dset: Vec<usize> = if n == 1 { Vec::new() } else { dset.iter().copied().filter(|&d| d < n).collect() };
    let moves = MoveSet::from_representatives(1, dset.iter().map(|&d| Point::from([d as i64])))?;
    let polytope = LatticePolytope::interval(0, n as i64 - 1);
    Embedding::reduced(g.clone(), polytope, moves, vertex_map, Method::Difference, limits)
}

/// The cycle `C_n` of [`Graph::cycle`].
///
/// For `n` outside `{3, 4, 6}` this is the difference graph
/// `D(n, {k, n-k})` with the smallest `k`, `2 <= k < n/2`, coprime to `n`;
/// node `i` sits at `i k mod n`. For `n` in `{3, 4, 6}` no such `k` exists
/// and the cycle is built as an apex over a path.
pub fn embed_cycle(n: usize, limits: &Limits) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::Unsupported(format!("a cycle needs at least 3 nodes, got {n}")));
    }
    let g = Graph::cycle(n);
    let mut e = match (2..n).take_while(|k| 2 * k < n).find(|k| k.gcd(&n) == 1) {
        Some(k) => {
            let position: Vec<usize> = (0..n).map(|i| i * k % n).collect();
            embed_difference(&g, &position, &[k, n - k], limits)?
        }
        None => embed_apex(&g, n - 1, &embed_path(n - 1, limits)?, limits)?,
    };
    e.method = Method::Cycle;
    Ok(e)
}

/// `K_{n_1, ..., n_r}` of [`Graph::complete_multipartite`] inside
/// `{0,1}^{s+m}` with `s = ⌈log2 r⌉`, `m = ⌈log2 max n_i⌉`.
///
/// Part `i` uses the code `c_i` = binary expansion of `i` and its `j`-th node
/// gets `(c_i, w_j)` where `w_j` is the binary expansion of `j`. Moves are the
/// differences realized by edges.
pub fn embed_complete_multipartite(sizes: &[usize], limits: &Limits) -> Result<Embedding> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Unsupported("every part needs at least one node".into()));
    }
    let s = ceil_log2(sizes.len());
    let m = ceil_log2(*sizes.iter().max().unwrap());
    let bits = |x: usize, width: usize| Point((0..width).rev().map(|b| ((x >> b) & 1) as i64).collect());
    let g = Graph::complete_multipartite(sizes);
    let vertex_map: Vec<Point> =
        sizes.iter().enumerate().flat_map(|(i, &size)| (0..size).map(move |j| bits(i, s).concat(&bits(j, m)))).collect();
    let moves = edge_moves(&g, &vertex_map, s + m)?;
    let polytope = LatticePolytope::new(s + m, vertex_map.clone())?;
    let e = Embedding::reduced(g, polytope, moves, vertex_map, Method::CompleteMultipartite, limits)?;
    check_dimension(&e, s + m, "complete multipartite")?;
    Ok(e)
}
