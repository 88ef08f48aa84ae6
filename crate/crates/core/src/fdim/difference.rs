use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Witness that `g` is the difference graph `D(n, dset)`: node `u` sits at
/// position `position[u]` in `0..n` and two nodes are adjacent iff their
/// positions differ by an element of `dset`. No element of `dset` divides
/// another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCertificate {
    pub n: usize,
    pub dset: Vec<usize>,
    pub position: Vec<usize>,
}

pub(crate) fn anti_divisible(dset: &[usize]) -> bool {
    dset.iter().enumerate().all(|(i, &a)| dset[i + 1..].iter().all(|&b| a % b != 0 && b % a != 0))
}

impl DifferenceCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.node_count();
        if self.n != n || self.position.len() != n || !anti_divisible(&self.dset) {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in &self.position {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == self.dset.contains(&self.position[u].abs_diff(self.position[v])))
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Unknown,
    In,
    Out,
}

/// Decides whether `g` is a difference graph, by a complete search over node
/// orderings; `Ok(None)` is a proof that it is not.
///
/// Positions are filled left to right. Placing a node at position `p` fixes
/// the status of every difference to an earlier position, which must agree
/// with earlier decisions and keep the set anti-divisible. The number of
/// edges a placed node still needs to later positions is bounded by the
/// known and undecided differences that fit, and orderings whose reversal
/// was already covered are skipped.
pub fn is_difference_graph(g: &Graph, limits: &Limits) -> Result<Option<DifferenceCertificate>> {
    let n = g.node_count();
    if n > limits.difference_search_cap {
        return Err(Error::CapExceeded {
            what: "difference-graph search size",
            value: n as u64,
            cap: limits.difference_search_cap as u64,
        });
    }
    let mut s = Search { g, n, order: Vec::with_capacity(n), used: vec![false; n], status: vec![Status::Unknown; n.max(1)] };
    if !s.place() {
        return Ok(None);
    }
    let mut position = vec![0; n];
    for (p, &u) in s.order.iter().enumerate() {
        position[u] = p;
    }
    let dset: Vec<usize> = (1..n).filter(|&d| s.status[d] == Status::In).collect();
    let cert = DifferenceCertificate { n, dset, position };
    debug_assert!(cert.verify(g));
    Ok(Some(cert))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    status: Vec<Status>,
}

impl Search<'_> {
    fn place(&mut self) -> bool {
        let p = self.order.len();
        if p == self.n {
            return true;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            // Reversal symmetry: the last node has a larger index than the first.
            if p + 1 == self.n && p > 0 && v < self.order[0] {
                continue;
            }
            let mut set_here = Vec::new();
            if self.try_place(v, p, &mut set_here) {
                self.used[v] = true;
                self.order.push(v);
                if self.place() {
                    return true;
                }
                self.order.pop();
                self.used[v] = false;
            }
            for d in set_here {
                self.status[d] = Status::Unknown;
            }
        }
        false
    }

    fn try_place(&mut self, v: usize, p: usize, set_here: &mut Vec<usize>) -> bool {
        for (q, &u) in self.order.iter().enumerate() {
            let d = p - q;
            let want = if self.g.has_edge(u, v) { Status::In } else { Status::Out };
            match self.status[d] {
                Status::Unknown => {
                    if want == Status::In && (1..self.n).any(|e| self.status[e] == Status::In && (e.is_multiple_of(d) || d.is_multiple_of(e))) {
                        return false;
                    }
                    self.status[d] = want;
                    set_here.push(d);
                }
                s if s != want => return false,
                _ => {}
            }
        }
        let back = self.order.iter().filter(|&&u| self.g.has_edge(u, v)).count();
        let need = self.g.degree(v) - back;
        let (mut lo, mut hi) = (0, 0);
        for d in 1..self.n - p {
            match self.status[d] {
                Status::In => {
                    lo += 1;
                    hi += 1;
                }
                Status::Unknown => hi += 1,
                Status::Out => {}
            }
        }
        lo <= need && need <= hi
    }
}
