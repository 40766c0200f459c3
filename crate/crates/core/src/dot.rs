//! Graphviz export.

use std::fmt::Write as _;

use crate::classes::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::path::Path;

const PATH_STYLES: [(&str, &str); 8] = [
    ("darkgreen", "bold"),
    ("orange", "bold"),
    ("purple", "dashed"),
    ("brown", "dashed"),
    ("deeppink", "dotted"),
    ("cyan4", "dotted"),
    ("gold3", "bold"),
    ("gray30", "dashed"),
];

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// DOT text for `d`. `V1` vertices are red diamonds and `V2` vertices blue
/// circles. Each highlighted path draws its arcs in its own colour and style;
/// an arc on no highlighted path is drawn in light gray. Styles cycle after
/// eight paths, with the pen width growing on every cycle so they stay
/// distinct.
pub fn export_dot(d: &Digraph, partition: Option<&SplitPartition>, highlight: &[Path]) -> Result<String> {
    if let Some(p) = partition {
        if p.v1().len() + p.v2().len() != d.order() || p.v1().iter().chain(p.v2()).any(|&x| !d.contains(x)) {
            return Err(Error::domain("partition does not match the digraph"));
        }
    }
    for (i, p) in highlight.iter().enumerate() {
        Path::new(d, p.vertices().to_vec()).map_err(|e| Error::domain(format!("highlight path {}: {e}", i + 1)))?;
    }
    let mut out = String::from("digraph D {\n");
    for x in d.vertices() {
        let attrs = match partition {
            Some(p) if p.in_v1(x) => " [shape=diamond, color=red, style=filled, fillcolor=mistyrose]",
            Some(_) => " [shape=circle, color=blue]",
            None => "",
        };
        let _ = writeln!(out, "  {}{attrs};", quote(&d.name(x)));
    }
    let mut on_path = vec![false; d.order() * d.order()];
    for (i, p) in highlight.iter().enumerate() {
        let (color, style) = PATH_STYLES[i % PATH_STYLES.len()];
        let width = 2 + i / PATH_STYLES.len();
        for w in p.vertices().windows(2) {
            on_path[w[0].index() * d.order() + w[1].index()] = true;
            let _ = writeln!(
                out,
                "  {} -> {} [color={color}, style={style}, penwidth={width}, label={}];",
                quote(&d.name(w[0])),
                quote(&d.name(w[1])),
                quote(&format!("P{}", i + 1)),
            );
        }
    }
    for (a, b) in d.arcs() {
        if !on_path[a.index() * d.order() + b.index()] {
            let gray = if highlight.is_empty() { "" } else { " [color=gray70]" };
            let _ = writeln!(out, "  {} -> {}{gray};", quote(&d.name(a)), quote(&d.name(b)));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
