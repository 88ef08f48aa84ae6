//! Graphviz output with a stable node order.

use fdim_core::fiber::FiberGraph;
use fdim_core::Graph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(g: &Graph, label: impl Fn(usize) -> String) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.node_count() {
        out.push_str(&format!("  n{v} [label={}];\n", quote(&label(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  n{u} -- n{v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &Graph, labels: &[String]) -> String {
    render(g, |v| labels[v].clone())
}

/// Nodes are labeled by their lattice points.
pub fn fiber_to_dot(fg: &FiberGraph) -> String {
    render(&fg.graph, |v| fg.points[v].to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fdim_core::{LatticePolytope, Limits, MoveSet, Point};

    #[test]
    fn interval_path() {
        let m = MoveSet::from_representatives(1, [Point::from([1])]).unwrap();
        let fg = FiberGraph::build(&LatticePolytope::interval(0, 2), &m, &Limits::default()).unwrap();
        assert_eq!(
            fiber_to_dot(&fg),
            "graph G {\n  n0 [label=\"(0)\"];\n  n1 [label=\"(1)\"];\n  n2 [label=\"(2)\"];\n  n0 -- n1;\n  n1 -- n2;\n}\n"
        );
    }

    #[test]
    fn labels_are_escaped() {
        let dot = graph_to_dot(&Graph::path(2), &["a\"b".into(), "c".into()]);
        assert!(dot.contains("[label=\"a\\\"b\"]"));
    }
}
