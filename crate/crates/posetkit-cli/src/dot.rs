//! DOT emitter: the cover relation as a digraph, elements grouped by
//! height so Hasse-style layers render on the same rank.

use std::collections::BTreeMap;

use posetkit_core::Poset;

pub fn to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let mut layers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..p.size() {
        layers.entry(p.height(x)).or_default().push(x);
    }
    for (_, xs) in &layers {
        out.push_str("  { rank=same;");
        for &x in xs {
            out.push_str(&format!(" \"{}\";", p.name(x)));
        }
        out.push_str(" }\n");
    }
    for (x, y) in p.cover_pairs() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", p.name(x), p.name(y)));
    }
    out.push_str("}\n");
    out
}
