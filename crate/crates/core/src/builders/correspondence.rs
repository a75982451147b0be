use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::graphs::{centralizer_graph_class2, commuting_graph, star_graph, LabeledGroupGraph, VertexPayload};
use super::model::QuotientModel;
use crate::error::Result;
use crate::fp::{Class2Group, VecFp};
use crate::graph::{closed_twin_partition, components, quotient_by_twins, SimpleGraph};
use crate::group::GroupTable;

/// Diameters of a component of 𝔠(G) and of its image in Γ_Z(G).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPair {
    pub commuting_size: usize,
    pub commuting_diameter: usize,
    pub centralizer_size: usize,
    pub centralizer_diameter: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub group: String,
    pub commuting_vertices: usize,
    pub star_vertices: usize,
    pub centralizer_vertices: usize,
    pub components: Vec<ComponentPair>,
    /// Empty when every map checked out.
    pub failures: Vec<String>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Γ_Z vertex of each element, via the centralizer of its coset.
fn vertex_of_elements(g: &GroupTable, model: &QuotientModel, gamma: &LabeledGroupGraph) -> Vec<Option<usize>> {
    let mut by_row: HashMap<&FixedBitSet, usize> = HashMap::new();
    for (k, p) in gamma.payload.iter().enumerate() {
        if let VertexPayload::Class(c) = p {
            by_row.insert(&c.centralizer, k);
        }
    }
    let mut out = vec![None; g.order()];
    for coset in 1..model.index() {
        let k = by_row[model.row(coset)];
        for &x in model.coset_members(coset).expect("table model") {
            out[x as usize] = Some(k);
        }
    }
    out
}

/// Checks that `f`, sending each twin class of `source` to a vertex of
/// `target`, is well defined and an isomorphism `source/∼ → target`.
fn check_quotient_map(
    what: &str,
    source: &SimpleGraph,
    target: &SimpleGraph,
    f: impl Fn(usize) -> usize,
    failures: &mut Vec<String>,
) {
    let t = closed_twin_partition(source);
    let q = match quotient_by_twins(source, &t) {
        Ok(q) => q,
        Err(e) => {
            failures.push(format!("{what}: {e}"));
            return;
        }
    };
    let mut image = Vec::with_capacity(t.len());
    for class in &t.classes {
        let a = f(class[0]);
        if let Some(&v) = class.iter().find(|&&v| f(v) != a) {
            failures.push(format!(
                "{what}: twins {} and {} map to {} and {}",
                source.label(class[0]),
                source.label(v),
                target.label(a),
                target.label(f(v))
            ));
            return;
        }
        image.push(a);
    }
    if t.len() != target.vertex_count() {
        failures.push(format!(
            "{what}: {} twin classes but {} target vertices",
            t.len(),
            target.vertex_count()
        ));
        return;
    }
    let mut hit = vec![None; target.vertex_count()];
    for (k, &a) in image.iter().enumerate() {
        if let Some(j) = hit[a] {
            failures.push(format!(
                "{what}: classes of {} and {} both map to {}",
                q.label(j),
                q.label(k),
                target.label(a)
            ));
            return;
        }
        hit[a] = Some(k);
    }
    for a in 0..q.vertex_count() {
        for b in (a + 1)..q.vertex_count() {
            if q.has_edge(a, b) != target.has_edge(image[a], image[b]) {
                failures.push(format!(
                    "{what}: adjacency of [{}], [{}] differs from {}, {}",
                    q.label(a),
                    q.label(b),
                    target.label(image[a]),
                    target.label(image[b])
                ));
                return;
            }
        }
    }
}

/// Builds 𝔠(G), 𝔠*(G) and Γ_Z(G), checks that g ↦ Z(g) induces
/// isomorphisms 𝔠(G)/∼ ≅ Γ_Z(G) ≅ 𝔠*(G)/∼, and that components of 𝔠(G)
/// correspond to components of Γ_Z(G) with complete ones collapsing to
/// isolated vertices and all other diameters preserved.
pub fn verify_correspondence(g: &GroupTable) -> Result<CorrespondenceReport> {
    let model = QuotientModel::from_table(g)?;
    let gamma = model.centralizer_graph();
    let commuting = commuting_graph(g)?;
    let star = star_graph(g)?;
    let vertex_of = vertex_of_elements(g, &model, &gamma);
    let element = |graph: &LabeledGroupGraph, v: usize| match &graph.payload[v] {
        VertexPayload::Element(x) => *x as usize,
        _ => unreachable!("element payload"),
    };
    let mut failures = Vec::new();
    let to_gamma = |graph: &LabeledGroupGraph, v: usize| vertex_of[element(graph, v)].expect("noncentral");
    check_quotient_map("commuting/~ -> centralizer", &commuting.graph, &gamma.graph, |v| to_gamma(&commuting, v), &mut failures);
    check_quotient_map("star/~ -> centralizer", &star.graph, &gamma.graph, |v| to_gamma(&star, v), &mut failures);

    let c_reports = components(&commuting.graph);
    let z_reports = components(&gamma.graph);
    let mut z_component = vec![0; gamma.graph.vertex_count()];
    for r in &z_reports {
        for &v in &r.vertices {
            z_component[v] = r.id;
        }
    }
    let mut matched = vec![None; z_reports.len()];
    let mut pairs = Vec::new();
    for r in &c_reports {
        let zc = z_component[to_gamma(&commuting, r.vertices[0])];
        if let Some(&v) = r.vertices.iter().find(|&&v| z_component[to_gamma(&commuting, v)] != zc) {
            failures.push(format!(
                "component of {} in the commuting graph meets two centralizer components (via {})",
                commuting.graph.label(r.vertices[0]),
                commuting.graph.label(v)
            ));
            continue;
        }
        if let Some(prev) = matched[zc].replace(r.id) {
            failures.push(format!(
                "commuting components {prev} and {} map to the same centralizer component",
                r.id
            ));
        }
        let z = &z_reports[zc];
        let ok = if r.is_complete { z.is_trivial() } else { z.diameter == r.diameter };
        if !ok {
            failures.push(format!(
                "commuting component of {} has diameter {} but its image has diameter {}",
                commuting.graph.label(r.vertices[0]),
                r.diameter,
                z.diameter
            ));
        }
        pairs.push(ComponentPair {
            commuting_size: r.len(),
            commuting_diameter: r.diameter,
            centralizer_size: z.len(),
            centralizer_diameter: z.diameter,
        });
    }
    if let Some(zc) = matched.iter().position(Option::is_none) {
        failures.push(format!(
            "centralizer component of {} has no preimage",
            gamma.graph.label(z_reports[zc].vertices[0])
        ));
    }
    Ok(CorrespondenceReport {
        group: g.name().to_string(),
        commuting_vertices: commuting.graph.vertex_count(),
        star_vertices: star.graph.vertex_count(),
        centralizer_vertices: gamma.graph.vertex_count(),
        components: pairs,
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Class2CrossCheck {
    pub group: String,
    pub order: usize,
    /// Noncentral table elements whose centralizer was compared.
    pub elements_checked: usize,
    /// Distinct centralizers whose center was compared.
    pub centers_checked: usize,
    pub mismatches: Vec<String>,
}

impl Class2CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Expands G(p,n,S) to its Cayley table and compares, element by element,
/// the nullspace centralizers and their centers with the brute-force ones,
/// then checks that the two centralizer graphs match under the embedding.
pub fn cross_check_class2(g: &Class2Group, limit: usize) -> Result<Class2CrossCheck> {
    let t = g.expand_to_table(limit)?;
    let (p, n) = (g.p(), g.n());
    let xs = (p as usize).pow(n as u32);
    let vectors: Vec<VecFp> = (0..xs).map(|i| VecFp::from_lex_index(i, n, p)).collect();
    let to_mask = |space: &crate::fp::SubspaceFp| -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(xs);
        for w in space.elements() {
            m.insert(w.lex_index(p));
        }
        m
    };
    let predicted: Vec<Option<(FixedBitSet, FixedBitSet)>> = vectors
        .par_iter()
        .map(|v| {
            let c = g.centralizer_space(v).ok()?;
            let z = g.center_of_space(&c);
            Some((to_mask(&c), to_mask(&z)))
        })
        .collect();
    let rows = t.commuting_rows();
    let center = t.center();
    let mut mismatches = Vec::new();
    let mut by_row: HashMap<&FixedBitSet, usize> = HashMap::new();
    let mut checked = 0;
    for h in 0..t.order() {
        let x = h % xs;
        match (&predicted[x], center.contains(h)) {
            (None, true) => continue,
            (None, false) | (Some(_), true) => {
                mismatches.push(format!("g{h}: centrality of {} disagrees", vectors[x].word()));
                continue;
            }
            (Some((c, _)), false) => {
                checked += 1;
                if let Some(y) = (0..t.order()).find(|&y| rows[h].contains(y) != c.contains(y % xs)) {
                    mismatches.push(format!(
                        "g{h} ({}): membership of g{y} in the centralizer disagrees",
                        vectors[x].word()
                    ));
                }
                by_row.entry(&rows[h]).or_insert(h);
            }
        }
    }
    let mut reps: Vec<usize> = by_row.values().copied().collect();
    reps.sort_unstable();
    let z_mismatch: Vec<String> = reps
        .par_iter()
        .filter_map(|&h| {
            let z = t.z_of(h.into()).ok()?;
            let (_, pz) = predicted[h % xs].as_ref()?;
            (0..t.order())
                .find(|&y| z.contains(y) != pz.contains(y % xs))
                .map(|y| format!("g{h}: membership of g{y} in Z(g) disagrees"))
        })
        .collect();
    mismatches.extend(z_mismatch);

    let from_subspaces = centralizer_graph_class2(g, limit)?;
    let from_table = QuotientModel::from_table(&t)?.centralizer_graph();
    let mut table_vertex: HashMap<&FixedBitSet, usize> = HashMap::new();
    for (k, pl) in from_table.payload.iter().enumerate() {
        if let VertexPayload::Class(c) = pl {
            table_vertex.insert(&c.centralizer, k);
        }
    }
    let model = QuotientModel::from_table(&t)?;
    let f: Vec<usize> = from_subspaces
        .payload
        .iter()
        .map(|pl| match pl {
            VertexPayload::Subspace(v) => {
                let coset = (1..model.index())
                    .find(|&c| model.coset_members(c).unwrap().contains(&(g.embed(&v.representative) as u32)))
                    .expect("noncentral coset");
                table_vertex[model.row(coset)]
            }
            _ => unreachable!("subspace payload"),
        })
        .collect();
    if !crate::graph::is_isomorphism(&from_subspaces.graph, &from_table.graph, &f) {
        mismatches.push("centralizer graphs differ under the embedding".into());
    }
    Ok(Class2CrossCheck {
        group: g.name().to_string(),
        order: t.order(),
        elements_checked: checked,
        centers_checked: reps.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, gpns, two_group, TwoGroupKind};

    #[test]
    fn q8_and_s3() {
        let q8 = two_group(TwoGroupKind::Quaternion, 8).unwrap();
        let r = verify_correspondence(&q8).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.commuting_vertices, r.star_vertices, r.centralizer_vertices), (6, 3, 3));

        let s3 = dihedral(6).unwrap();
        let r = verify_correspondence(&s3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.commuting_vertices, r.star_vertices, r.centralizer_vertices), (5, 5, 4));
        assert_eq!(r.components.len(), 4);
        assert!(r.components.iter().all(|c| c.centralizer_size == 1));
    }

    #[test]
    fn small_class2_cross_check() {
        let g = gpns(3, 3, "1-2,2-3").unwrap();
        let r = cross_check_class2(&g, 1000).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.elements_checked, 243 - 9);
    }
}
