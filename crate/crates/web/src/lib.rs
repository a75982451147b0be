//! Browser bindings: build a group from a compact spec, lay out one of its
//! graphs, run verifier checks, and compare two groups.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cgraph::builders::{
    centralizer_graph, centralizer_graph_class2, commuting_graph, star_graph, star_graph_class2, GraphKind,
    LabeledGroupGraph, QuotientModel,
};
use cgraph::constructions::{BuiltGroup, FamilySpec};
use cgraph::fp::DEFAULT_ENUMERATION_LIMIT;
use cgraph::graph::{closed_twin_partition, components, isomorphic};
use cgraph::verifier::{run_suite, Corpus, CorpusEntry, EntrySource};

/// Largest graph handed to the page.
pub const MAX_DRAWN_VERTICES: usize = 400;

fn parse(spec: &str) -> Result<(FamilySpec, BuiltGroup), String> {
    let f: FamilySpec = spec.parse().map_err(|e| format!("{spec}: {e}"))?;
    let g = f.build().map_err(|e| format!("{spec}: {e}"))?;
    Ok((f, g))
}

fn labeled(g: &BuiltGroup, kind: GraphKind) -> Result<LabeledGroupGraph, String> {
    let limit = DEFAULT_ENUMERATION_LIMIT;
    let r = match (g, kind) {
        (BuiltGroup::Table(t), GraphKind::Commuting) => commuting_graph(t),
        (BuiltGroup::Table(t), GraphKind::Star) => star_graph(t),
        (BuiltGroup::Table(t), GraphKind::Centralizer) => centralizer_graph(t),
        (BuiltGroup::Class2(c), GraphKind::Commuting) => c.expand_to_table(limit).and_then(|t| commuting_graph(&t)),
        (BuiltGroup::Class2(c), GraphKind::Star) => star_graph_class2(c, limit),
        (BuiltGroup::Class2(c), GraphKind::Centralizer) => centralizer_graph_class2(c, limit),
    };
    r.map_err(|e| e.to_string())
}

fn model(g: &BuiltGroup) -> Result<QuotientModel, String> {
    match g {
        BuiltGroup::Table(t) => QuotientModel::from_table(t),
        BuiltGroup::Class2(c) => QuotientModel::from_class2(c, DEFAULT_ENUMERATION_LIMIT),
    }
    .map_err(|e| e.to_string())
}

/// `{group, order, index, kind, vertices: [{id, label, component, role, twin}],
/// edges: [[i, j]], components: [{id, size, diameter, complete}]}`.
pub fn graph_report(spec: &str, kind: &str) -> Result<String, String> {
    let kind: GraphKind = kind.parse().map_err(|e: cgraph::Error| e.to_string())?;
    let (_, g) = parse(spec)?;
    let m = model(&g)?;
    let lg = labeled(&g, kind)?;
    let n = lg.graph.vertex_count();
    if n > MAX_DRAWN_VERTICES {
        return Err(format!("{n} vertices is too many to draw (limit {MAX_DRAWN_VERTICES})"));
    }
    let reports = components(&lg.graph);
    let mut component = vec![0; n];
    let mut role = vec![""; n];
    for r in &reports {
        for (&v, ro) in r.vertices.iter().zip(&r.roles) {
            component[v] = r.id;
            role[v] = ro.name();
        }
    }
    let twins = closed_twin_partition(&lg.graph);
    let mut twin = vec![0; n];
    for (k, class) in twins.classes.iter().enumerate() {
        for &v in class {
            twin[v] = k;
        }
    }
    let v = json!({
        "group": g.name(),
        "order": m.order().to_string(),
        "index": m.index(),
        "kind": kind.name(),
        "vertices": (0..n).map(|v| json!({
            "id": v,
            "label": lg.graph.label(v),
            "component": component[v],
            "role": role[v],
            "twin": twin[v],
        })).collect::<Vec<_>>(),
        "edges": lg.graph.edges().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "components": reports.iter().map(|r| json!({
            "id": r.id,
            "size": r.len(),
            "diameter": r.diameter,
            "complete": r.is_complete,
        })).collect::<Vec<_>>(),
    });
    Ok(v.to_string())
}

/// Runs the single-group checks (`all` or comma-separated ids) on one group.
pub fn check_report(spec: &str, checks: &str) -> Result<String, String> {
    let (f, g) = parse(spec)?;
    let mut c = Corpus::new(g.name());
    c.entries.push(CorpusEntry { name: None, source: EntrySource::Family(f) });
    let ids: Vec<&str> = checks.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let report = run_suite(&c, &ids).map_err(|e| e.to_string())?;
    let mut v = report.to_json();
    if let Some(results) = v["results"].as_array_mut() {
        for r in results {
            if let Value::Object(m) = r {
                m.remove("ms");
            }
        }
    }
    Ok(v.to_string())
}

/// Whether two groups have isomorphic commuting, star and centralizer graphs.
pub fn compare_report(left: &str, right: &str) -> Result<String, String> {
    let (_, a) = parse(left)?;
    let (_, b) = parse(right)?;
    let mut out = json!({ "left": a.name(), "right": b.name() });
    for kind in [GraphKind::Commuting, GraphKind::Star, GraphKind::Centralizer] {
        let entry = match (labeled(&a, kind), labeled(&b, kind)) {
            (Ok(x), Ok(y)) => match isomorphic(&x.graph, &y.graph) {
                Ok(f) => json!({
                    "isomorphic": f.is_some(),
                    "vertices": [x.graph.vertex_count(), y.graph.vertex_count()],
                    "edges": [x.graph.edge_count(), y.graph.edge_count()],
                }),
                Err(e) => json!({ "error": e.to_string() }),
            },
            (Err(e), _) | (_, Err(e)) => json!({ "error": e }),
        };
        out[kind.name()] = entry;
    }
    Ok(out.to_string())
}

#[wasm_bindgen(js_name = graphReport)]
pub fn graph_report_js(spec: &str, kind: &str) -> Result<String, JsValue> {
    graph_report(spec, kind).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkReport)]
pub fn check_report_js(spec: &str, checks: &str) -> Result<String, JsValue> {
    check_report(spec, checks).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = compareReport)]
pub fn compare_report_js(left: &str, right: &str) -> Result<String, JsValue> {
    compare_report(left, right).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn gothic_graph_has_a_diameter_three_component() {
        let v = parsed(graph_report("gothic:3:3", "centralizer").unwrap());
        assert_eq!(v["vertices"].as_array().unwrap().len(), 27);
        let big: Vec<&Value> = v["components"].as_array().unwrap().iter().filter(|c| c["size"] == 9).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0]["diameter"], 3);
    }

    #[test]
    fn oversized_and_bad_inputs_are_errors() {
        assert!(graph_report("gothic:3:3", "commuting").unwrap_err().contains("too many"));
        assert!(graph_report("cyclic:6", "centralizer").is_err());
        assert!(graph_report("dihedral:8", "noncommuting").is_err());
        assert!(graph_report("nope:1", "star").is_err());
    }

    #[test]
    fn checks_run_on_one_group() {
        let v = parsed(check_report("dihedral:16", "classN,derivedBound").unwrap());
        assert_eq!(v["summary"]["fail"], 0);
        assert_eq!(v["results"].as_array().unwrap().len(), 2);
        assert!(v["results"][0].get("ms").is_none());
    }

    #[test]
    fn d18_and_its_generalized_twin_share_a_commuting_graph() {
        let v = parsed(compare_report("dihedral:18", "gdihedral:3x3").unwrap());
        assert_eq!(v["commuting"]["isomorphic"], true);
        assert_eq!(v["centralizer"]["isomorphic"], true);
        let v = parsed(compare_report("quaternion:8", "dihedral:6").unwrap());
        assert_eq!(v["commuting"]["isomorphic"], false);
    }
}
