//! Graphviz output. Node labels are the integer, or `base^exponent` in power
//! form; layout is left to the renderer.

use std::fmt::Write;

use dcl_core::{Frame, Graph, Labeling};

fn push_graph<'a>(out: &mut String, name: &str, g: &Graph, labels: impl Iterator<Item = (usize, String)> + 'a) {
    writeln!(out, "graph {name} {{").unwrap();
    for (v, label) in labels {
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
}

pub fn labeling(g: &Graph, f: &Labeling) -> String {
    let mut out = String::new();
    push_graph(&mut out, "t0", g, f.iter().map(|(v, x)| (v, x.to_string())));
    out
}

pub fn unlabeled(g: &Graph) -> String {
    let mut out = String::new();
    push_graph(&mut out, "g", g, g.vertices().map(|v| (v, v.to_string())));
    out
}

/// One `graph tN { ... }` block per frame.
pub fn frames(g: &Graph, frames: &[Frame]) -> String {
    let mut out = String::new();
    for frame in frames {
        let name = format!("t{}", frame.t);
        push_graph(&mut out, &name, g, frame.labels.iter().map(|(v, l)| (*v, l.to_string())));
    }
    out
}
