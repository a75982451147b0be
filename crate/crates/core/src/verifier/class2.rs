use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::checks::Outcome;
use super::subject::Subject;
use crate::builders::cross_check_class2;
use crate::fp::{predict_vertex_kind, Class2Group, PredictedRole, SubspaceFp, VecFp, VertexKind};
use crate::graph::{classify_all, closed_twin_partition, component_diameter, connected_components, SimpleGraph};

/// Largest G(p,n,S) expanded to a table for the brute-force comparison.
pub const CROSS_CHECK_ORDER: u128 = 6561;

struct Findings(Vec<String>);

impl Findings {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.0.len() < 20 {
            self.0.push(what());
        }
    }
}

fn mask_of(space: &SubspaceFp, p: u32, m: usize) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(m);
    for w in space.elements() {
        mask.insert(w.lex_index(p));
    }
    mask
}

fn kind_name(k: VertexKind) -> &'static str {
    match k {
        VertexKind::Clique => "clique",
        VertexKind::TypeTwo => "typeTwo",
        VertexKind::Isolated => "isolated",
        VertexKind::Central => "central",
        VertexKind::Unclassified => "unclassified",
    }
}

/// Every structural prediction about Γ_Z(G(p,n,S)) read off S̄, compared
/// with the centralizers computed from the commutator pairing, and the
/// pairing itself compared with the expanded table when it is small enough.
pub(crate) fn class2_predictions(s: &Subject, limit: usize) -> Outcome {
    let Some(g) = &s.class2 else {
        return Outcome::vacuous(json!({ "reason": "not a G(p,n,S) instance" }));
    };
    if !g.is_nondegenerate() {
        return Outcome::vacuous(json!({ "reason": "S has isolated vertices" }));
    }
    let (p, n) = (g.p(), g.n());
    let m = s.model.index();
    let sbar = g.edges().complement_graph();
    let twins = closed_twin_partition(&sbar);
    let sbar_roles = classify_all(&sbar);
    let coset = |v: &VecFp| v.lex_index(p);
    let unit_class: Vec<usize> = (0..n).map(|i| s.class_of_coset[coset(&VecFp::unit(n, i))]).collect();
    let mut f = Findings(Vec::new());

    for i in 0..n {
        let predicted = SubspaceFp::span(
            p,
            n,
            std::iter::once(VecFp::unit(n, i)).chain(sbar.neighbors(i).map(|j| VecFp::unit(n, j))),
        );
        f.expect(mask_of(&predicted, p, m) == *s.model.row(coset(&VecFp::unit(n, i))), || {
            format!("C(x{}) is not spanned by x{} and its S̄-neighbours", i + 1, i + 1)
        });
        f.expect(
            !s.gamma_roles[unit_class[i]].is_subordinate() == !sbar_roles[i].is_subordinate(),
            || format!("independence of C(x{}) differs from vertex {} of S̄", i + 1, i + 1),
        );
        for j in i + 1..n {
            let twin = twins.class_of[i] == twins.class_of[j];
            f.expect((unit_class[i] == unit_class[j]) == twin, || {
                format!("C(x{}) = C(x{}) disagrees with twins in S̄", i + 1, j + 1)
            });
            if !twin {
                f.expect(s.gamma.has_edge(unit_class[i], unit_class[j]) == sbar.has_edge(i, j), || {
                    format!("adjacency of C(x{}) and C(x{}) differs from S̄", i + 1, j + 1)
                });
            }
        }
    }

    let sbar_components = connected_components(&sbar);
    let mut component_of_generator = vec![0; n];
    for (c, vs) in sbar_components.iter().enumerate() {
        for &v in vs {
            component_of_generator[v] = c;
        }
    }
    let mut covered = vec![false; s.classes.len()];
    let mut kind_counts = std::collections::BTreeMap::new();
    for c in 1..m {
        let v = VecFp::from_lex_index(c, n, p);
        let pred = predict_vertex_kind(g, &v);
        *kind_counts.entry(kind_name(pred.kind)).or_insert(0usize) += 1;
        let k = s.class_of_coset[c];
        if let Some(space) = &pred.centralizer {
            f.expect(mask_of(space, p, m) == *s.model.row(c), || {
                format!("predicted centralizer of {} is wrong", v.word())
            });
        }
        match pred.role {
            Some(PredictedRole::Isolated) => {
                f.expect(s.gamma.degree(k) == 0, || format!("Z({}) should be isolated", v.word()))
            }
            Some(PredictedRole::Subordinate) => f.expect(s.gamma_roles[k].is_subordinate(), || {
                format!("Z({}) should be subordinate", v.word())
            }),
            None => {}
        }
        let one_component = pred.support.iter().all(|&i| component_of_generator[i] == component_of_generator[pred.support[0]]);
        if matches!(pred.kind, VertexKind::Clique | VertexKind::TypeTwo) && one_component {
            covered[k] = true;
        }
    }

    let mut stars = Vec::new();
    let mut expected_nontrivial = 0;
    for vs in &sbar_components {
        let comp_graph: SimpleGraph = sbar.induced_subgraph(vs);
        let l = component_diameter(&comp_graph, &(0..vs.len()).collect::<Vec<_>>());
        let complete = vs.len() == 1 || l <= 1;
        if complete {
            for &i in vs {
                f.expect(s.gamma.degree(unit_class[i]) == 0, || {
                    format!("C(x{}) lies in a complete S̄ component but is not isolated", i + 1)
                });
            }
            continue;
        }
        expected_nontrivial += 1;
        let zc = s.gamma_component_of[unit_class[vs[0]]];
        let same = vs.iter().all(|&i| s.gamma_component_of[unit_class[i]] == zc);
        f.expect(same, || format!("generators of S̄ component at x{} split in Γ_Z", vs[0] + 1));
        let comp = &s.gamma_components[zc];
        f.expect(comp.diameter >= l && comp.diameter <= l + 2, || {
            format!("component at x{} has diameter {} outside [{l}, {}]", vs[0] + 1, comp.diameter, l + 2)
        });
        for &k in &comp.vertices {
            let is_unit = vs.iter().any(|&i| unit_class[i] == k);
            f.expect(is_unit || covered[k], || {
                format!("{} in the component at x{} has no clique or type-two representative", s.vertex_label(k), vs[0] + 1)
            });
        }
        stars.push(json!({
            "generators": vs.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "sbarDiameter": l,
            "diameter": comp.diameter,
            "vertices": comp.len(),
            "diameterAboveSbar": comp.diameter > l,
        }));
    }
    let nontrivial = s.nontrivial_components().len();
    f.expect(nontrivial == expected_nontrivial, || {
        format!("{nontrivial} nontrivial components, {expected_nontrivial} non-complete S̄ components")
    });

    let cross = cross_check(g, limit);
    if let Some(Err(e)) = &cross {
        f.expect(false, || e.clone());
    }
    let mut witness = json!({
        "nontrivialComponents": nontrivial,
        "components": stars,
        "kinds": kind_counts,
        "crossChecked": cross.as_ref().map(|r| r.is_ok()).unwrap_or(false),
    });
    if let Some(Ok(v)) = cross {
        witness["crossCheck"] = v;
    }
    if !f.0.is_empty() {
        witness["failures"] = json!(f.0);
    }
    Outcome::verdict(f.0.is_empty(), witness)
}

fn cross_check(g: &Class2Group, limit: usize) -> Option<Result<Value, String>> {
    let order = g.order().filter(|&o| o <= CROSS_CHECK_ORDER)?;
    Some(match cross_check_class2(g, limit.max(order as usize)) {
        Ok(r) if r.passed() => Ok(json!({ "elements": r.elements_checked, "centers": r.centers_checked })),
        Ok(r) => Err(format!("table comparison: {}", r.mismatches.join("; "))),
        Err(e) => Err(format!("table comparison: {e}")),
    })
}
