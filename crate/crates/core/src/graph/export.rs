use std::fmt::Write;

use serde_json::{json, Value};

use super::components::components;
use super::twins::closed_twin_partition;
use super::SimpleGraph;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    pub name: String,
    /// Draw each nontrivial closed-twin class as a cluster.
    pub twin_clusters: bool,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text. Nodes carry their component id as `class` and are
/// coloured by component.
pub fn to_dot(g: &SimpleGraph, opts: &DotOptions) -> String {
    let name = if opts.name.is_empty() { "G" } else { &opts.name };
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    out.push_str("  node [style=filled, fontname=\"Helvetica\"];\n");
    let mut component_of = vec![0; g.vertex_count()];
    for r in components(g) {
        for &v in &r.vertices {
            component_of[v] = r.id;
        }
    }
    let node = |out: &mut String, v: usize, indent: &str| {
        let c = component_of[v];
        writeln!(
            out,
            "{indent}{} [class=\"component{c}\", fillcolor=\"{}\"];",
            quote(g.label(v)),
            PALETTE[c % PALETTE.len()]
        )
        .unwrap();
    };
    if opts.twin_clusters {
        let t = closed_twin_partition(g);
        for (k, class) in t.classes.iter().enumerate() {
            if class.len() > 1 {
                writeln!(out, "  subgraph cluster_twins{k} {{").unwrap();
                out.push_str("    style=dashed;\n");
                for &v in class {
                    node(&mut out, v, "    ");
                }
                out.push_str("  }\n");
            } else {
                node(&mut out, class[0], "  ");
            }
        }
    } else {
        for v in 0..g.vertex_count() {
            node(&mut out, v, "  ");
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `{vertices: [{label, kind}], edges: [[a, b]], components: [...]}`.
pub fn to_json(g: &SimpleGraph) -> Value {
    let reports = components(g);
    let mut kinds = vec![""; g.vertex_count()];
    for r in &reports {
        for (&v, role) in r.vertices.iter().zip(&r.roles) {
            kinds[v] = role.name();
        }
    }
    json!({
        "vertices": (0..g.vertex_count())
            .map(|v| json!({"label": g.label(v), "kind": kinds[v]}))
            .collect::<Vec<_>>(),
        "edges": g.edges().map(|(u, v)| json!([g.label(u), g.label(v)])).collect::<Vec<_>>(),
        "components": reports
            .iter()
            .map(|r| json!({
                "id": r.id,
                "vertices": r.vertices.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                "diameter": r.diameter,
                "complete": r.is_complete,
            }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_shape() {
        let mut g = SimpleGraph::complete(3);
        let dot = to_dot(&g, &DotOptions::default());
        assert!(dot.starts_with("graph \"G\" {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        g = SimpleGraph::from_edges(4, [(0, 1)]);
        let dot = to_dot(&g, &DotOptions { name: "x".into(), twin_clusters: true });
        assert!(dot.contains("cluster_twins0"));
        assert!(dot.contains("class=\"component2\""));
    }

    #[test]
    fn json_shape() {
        let v = to_json(&SimpleGraph::path(3));
        assert_eq!(v["edges"].as_array().unwrap().len(), 2);
        assert_eq!(v["components"][0]["diameter"], 2);
        assert_eq!(v["vertices"][1]["kind"], "independent");
        assert_eq!(v["vertices"][0]["kind"], "subordinate");
    }
}
