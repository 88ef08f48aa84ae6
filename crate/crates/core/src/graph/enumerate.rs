use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{is_isomorphic, Graph};

/// Isomorphism invariant used to bucket candidates: for each node its degree
/// and the sorted degrees of its neighbors, all sorted.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.node_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// One representative of every isomorphism class of graphs on `n` nodes.
///
/// Built by adding a node with every possible neighborhood to each class on
/// `n - 1` nodes and discarding isomorphic repeats. Practical up to `n = 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut classes = alloc::vec![Graph::empty(0)];
    for k in 1..=n {
        let mut buckets: BTreeMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = BTreeMap::new();
        let mut out = Vec::new();
        for g in &classes {
            let old: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let new = (0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1));
                let h = Graph::new(k, old.iter().copied().chain(new)).unwrap();
                let bucket = buckets.entry(invariant(&h)).or_default();
                if bucket.iter().all(|b| is_isomorphic(b, &h).is_none()) {
                    bucket.push(h.clone());
                    out.push(h);
                }
            }
        }
        classes = out;
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }
}
