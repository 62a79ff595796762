//! Graphviz export of Hasse digraphs.

use std::fmt::Write;

use cobweb_core::cobweb::HasseDigraph;

/// One `rank=same` subgraph per level, vertices labelled `j:s`, arcs upward.
pub fn hasse_to_dot(g: &HasseDigraph, title: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph cobweb {{");
    let _ = writeln!(out, "  label={};", quote(title));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    for level in g.levels() {
        let Some(first) = level.first() else { continue };
        let _ = writeln!(out, "  subgraph level_{} {{", first.level);
        let _ = writeln!(out, "    rank=same;");
        for v in level {
            let _ = writeln!(out, "    {};", quote(&v.to_string()));
        }
        let _ = writeln!(out, "  }}");
    }
    for (a, b) in g.arcs() {
        let _ = writeln!(out, "  {} -> {};", quote(&a.to_string()), quote(&b.to_string()));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
