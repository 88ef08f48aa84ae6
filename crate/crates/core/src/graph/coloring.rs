use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringMode {
    /// Minimum number of colors; bounded by the exact-coloring cap.
    Exact,
    /// Greedy by descending degree, ties by node index.
    Greedy,
}

/// A proper coloring. Colors are numbered by first appearance in node order,
/// so every class in `0..k` is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub class_of: Vec<usize>,
    pub k: usize,
    /// Set when `k` is the chromatic number.
    pub exact: bool,
}

impl Coloring {
    /// Builds a coloring from raw labels, renumbering them by first
    /// appearance. Fails if adjacent nodes share a label.
    pub fn from_labels(g: &Graph, labels: &[usize], exact: bool) -> Result<Self> {
        if labels.len() != g.node_count() {
            return Err(Error::SizeMismatch { expected: g.node_count(), found: labels.len() });
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| labels[u] == labels[v]) {
            return Err(Error::ImproperColoring(u, v));
        }
        let mut renumber = alloc::collections::BTreeMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|&c| {
                let next = renumber.len();
                *renumber.entry(c).or_insert(next)
            })
            .collect();
        Ok(Coloring { k: renumber.len(), class_of, exact })
    }

    /// Color classes in increasing node order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Number of classes with exactly one node.
    pub fn singleton_classes(&self) -> usize {
        self.classes().iter().filter(|c| c.len() == 1).count()
    }
}

pub fn color(g: &Graph, mode: ColoringMode) -> Result<Coloring> {
    color_with_cap(g, mode, crate::Limits::default().exact_coloring_cap)
}

pub fn color_with_cap(g: &Graph, mode: ColoringMode, cap: usize) -> Result<Coloring> {
    let greedy = greedy_labels(g);
    match mode {
        ColoringMode::Greedy => Coloring::from_labels(g, &greedy, false),
        ColoringMode::Exact => {
            let n = g.node_count();
            if n > cap {
                return Err(Error::CapExceeded { what: "node count for exact coloring", value: n as u64, cap: cap as u64 });
            }
            let upper = greedy.iter().max().map_or(0, |c| c + 1);
            let lower = g.clique_number();
            for k in lower..upper {
                if let Some(labels) = k_coloring(g, k) {
                    return Coloring::from_labels(g, &labels, true);
                }
            }
            Coloring::from_labels(g, &greedy, true)
        }
    }
}

fn greedy_labels(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut labels = vec![usize::MAX; n];
    for v in order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| labels[w] == c) {
            c += 1;
        }
        labels[v] = c;
    }
    labels
}

/// Backtracking k-colorability test in DSATUR order. A node may only open
/// the next unused color, which removes color-permutation symmetry.
fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.node_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut labels = vec![usize::MAX; n];
    fn step(g: &Graph, k: usize, labels: &mut [usize], colored: usize, used: usize) -> bool {
        let n = g.node_count();
        if colored == n {
            return true;
        }
        // Most saturated uncolored node, then highest degree, then index.
        let v = (0..n)
            .filter(|&v| labels[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen = vec![false; k];
                let mut saturation = 0;
                for &w in g.neighbors(v) {
                    let c = labels[w];
                    if c != usize::MAX && !seen[c] {
                        seen[c] = true;
                        saturation += 1;
                    }
                }
                (saturation, g.degree(v), core::cmp::Reverse(v))
            })
            .unwrap();
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().any(|&w| labels[w] == c) {
                continue;
            }
            labels[v] = c;
            if step(g, k, labels, colored + 1, used.max(c + 1)) {
                return true;
            }
        }
        labels[v] = usize::MAX;
        false
    }
    step(g, k, &mut labels, 0, 0).then_some(labels)
}
