//! Graphviz output. The Hasse diagram is drawn with arcs from the lower
//! biclique to the higher one; compact output adds one digraph per
//! arborescence.

use std::fmt::Write;

use crate::json::{ArcJson, LatticeJson};

fn set(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn render(l: &LatticeJson) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for b in &l.bicliques {
        writeln!(out, "  b{} [label=\"X={}\\nY={}\"];", b.id, set(&b.x), set(&b.y)).unwrap();
    }
    for [lo, hi] in &l.covers {
        writeln!(out, "  b{lo} -> b{hi};").unwrap();
    }
    out.push_str("}\n");
    if let Some(trees) = &l.arborescences {
        render_tree(&mut out, "t_x", &trees.x);
        render_tree(&mut out, "t_y", &trees.y);
    }
    out
}

/// Each arc becomes an edge into a node named after the arc; the root arc
/// starts at a point node.
fn render_tree(out: &mut String, name: &str, arcs: &[ArcJson]) {
    writeln!(out, "digraph {name} {{\n  node [shape=point];\n  root;").unwrap();
    for a in arcs {
        let tail = match a.parent {
            Some(p) => format!("e{p}"),
            None => "root".to_string(),
        };
        writeln!(out, "  {tail} -> e{} [label=\"{}\"];", a.arc, a.vertex).unwrap();
    }
    out.push_str("}\n");
}
