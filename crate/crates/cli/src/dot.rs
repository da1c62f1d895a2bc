//! Graphviz export.

use std::fmt::Write;

use bnfix_core::{BooleanNetwork, Digraph, Result};

/// DOT text for a digraph on `1..=n`; vertices and arcs in ascending order.
pub fn digraph_dot(g: &Digraph, name: &str) -> String {
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, j) in g.arcs() {
        writeln!(out, "  {i} -> {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT text for the asynchronous graph, states labeled by their bit strings.
/// Fixed points are drawn with a double circle.
pub fn async_dot(f: &BooleanNetwork) -> Result<String> {
    let graph = f.async_graph()?;
    let mut out = String::from("digraph async {\n  node [shape=circle];\n");
    for x in bnfix_core::State::all(f.n()) {
        if f.is_fixed_point(x) {
            writeln!(out, "  \"{x}\" [shape=doublecircle];").unwrap();
        } else {
            writeln!(out, "  \"{x}\";").unwrap();
        }
    }
    for (x, y) in graph.arcs() {
        writeln!(out, "  \"{x}\" -> \"{y}\";").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
