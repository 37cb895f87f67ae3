//! Graphviz output. Color classes become node shapes (circle / box) and a
//! symmetric edge pair collapses into one bold double-arrow edge, so the
//! symmetric-edge structure is visible at a glance.

use crate::graph::ColoredDigraph;

pub fn to_dot(g: &ColoredDigraph) -> String {
    let mut s = String::from("digraph bmg {\n");
    for u in g.vertices() {
        let shape = if g.color_of(u) == 0 { "circle" } else { "box" };
        s.push_str(&format!("  {u} [shape={shape}];\n"));
    }
    for (u, v) in g.symmetric_edges() {
        s.push_str(&format!("  {u} -> {v} [dir=both, style=bold];\n"));
    }
    for (u, v) in g.edges() {
        if !g.has_edge(v, u) {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
    }
    s.push_str("}\n");
    s
}
