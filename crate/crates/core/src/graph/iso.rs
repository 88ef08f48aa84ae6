use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// A bijection between node sets; `image[u]` is the node `u` maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeMapping {
    pub image: Vec<usize>,
}

impl NodeMapping {
    /// True when the mapping is a bijection carrying edges to edges and
    /// non-edges to non-edges. Scans every pair.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.node_count();
        if h.node_count() != n || self.image.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &t in &self.image {
            if t >= n || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.image[u], self.image[v])))
    }
}

/// Stable color refinement run on both graphs at once so colors are
/// comparable across them. Returns per-node colors for `g` and `h`.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: [Vec<usize>; 2] = [
        g.adj.iter().map(Vec::len).collect(),
        h.adj.iter().map(Vec::len).collect(),
    ];
    let mut classes = usize::MAX;
    loop {
        let mut signatures: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for side in 0..2 {
            for (v, ns) in graphs[side].adj.iter().enumerate() {
                let mut around: Vec<usize> = ns.iter().map(|&w| colors[side][w]).collect();
                around.sort_unstable();
                signatures[side].push((colors[side][v], around));
            }
        }
        let mut names = BTreeMap::new();
        for sig in signatures.iter().flatten() {
            names.entry(sig.clone()).or_insert(0usize);
        }
        for (i, name) in names.values_mut().enumerate() {
            *name = i;
        }
        for side in 0..2 {
            colors[side] = signatures[side].iter().map(|s| names[s]).collect();
        }
        if names.len() == classes {
            break;
        }
        classes = names.len();
    }
    let [cg, ch] = colors;
    (cg, ch)
}

/// Finds an isomorphism `g -> h` if one exists.
///
/// Color refinement first splits nodes into classes that any isomorphism
/// must respect, then a backtracking search extends a partial map node by
/// node, always picking the unmapped node with the most mapped neighbors.
/// Any mapping returned has been checked pair by pair.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<NodeMapping> {
    let n = g.node_count();
    if n != h.node_count() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (cg, ch) = refine(g, h);
    let histogram = |colors: &[usize]| {
        let mut m = BTreeMap::new();
        for &c in colors {
            *m.entry(c).or_insert(0usize) += 1;
        }
        m
    };
    let class_size = histogram(&cg);
    if class_size != histogram(&ch) {
        return None;
    }

    // Fixed search order: connectivity-first, rarest color breaking ties.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (core::cmp::Reverse(links[v]), class_size[&cg[v]], v))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &cg, &ch, &order, 0, &mut image, &mut used) {
        let mapping = NodeMapping { image };
        debug_assert!(mapping.is_isomorphism(g, h));
        mapping.is_isomorphism(g, h).then_some(mapping)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for t in 0..h.node_count() {
        if used[t] || ch[t] != cg[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| g.has_edge(u, w) == h.has_edge(t, image[w]));
        if !consistent {
            continue;
        }
        image[u] = t;
        used[t] = true;
        if extend(g, h, cg, ch, order, depth + 1, image, used) {
            return true;
        }
        used[t] = false;
        image[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_not_a_path() {
        assert!(is_isomorphic(&Graph::complete(3), &Graph::path(3)).is_none());
    }

    #[test]
    fn relabeled_petersen_is_found() {
        let g = Graph::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 8, 2, 6, 4];
        let h = g.permuted(&perm);
        let m = is_isomorphic(&g, &h).unwrap();
        assert!(m.is_isomorphism(&g, &h));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C_6 and two disjoint triangles are both 2-regular on 6 nodes.
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(is_isomorphic(&Graph::cycle(6), &two_triangles).is_none());
        // K_{3,3} and the triangular prism are both 3-regular on 6 nodes.
        let prism = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_isomorphic(&Graph::complete_multipartite(&[3, 3]), &prism).is_none());
    }
}
