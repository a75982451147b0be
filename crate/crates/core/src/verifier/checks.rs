use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::subject::{is_prime_number, Subject};
use crate::group::Nilpotence;

/// Raw verdict of one check before timing and bookkeeping.
#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub witness: Value,
}

impl Outcome {
    pub fn vacuous(witness: Value) -> Self {
        Outcome { hypothesis: false, conclusion: true, witness }
    }

    pub fn verdict(conclusion: bool, witness: Value) -> Self {
        Outcome { hypothesis: true, conclusion, witness }
    }
}

fn max_nontrivial_diameter(s: &Subject) -> usize {
    s.nontrivial_components().iter().map(|c| c.diameter).max().unwrap_or(0)
}

fn only_center(mask: &FixedBitSet) -> bool {
    mask.count_ones(..) == 1 && mask.contains(0)
}

fn intersect(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut x = a.clone();
    x.intersect_with(b);
    x
}

/// Noncentral cosets of a mask.
fn noncentral(mask: &FixedBitSet) -> impl Iterator<Item = usize> + '_ {
    mask.ones().filter(|&c| c != 0)
}

pub(crate) fn derived_bound(s: &Subject) -> Outcome {
    let base = json!({ "derivedOrder": s.derived_order.to_string(), "index": s.index().to_string() });
    if s.derived_order * s.derived_order >= s.index() {
        return Outcome::vacuous(base);
    }
    let count = s.gamma_components.len();
    let diameter = s.gamma_components.iter().map(|c| c.diameter).max().unwrap_or(0);
    Outcome::verdict(
        count == 1 && diameter <= 2,
        json!({ "derivedOrder": s.derived_order.to_string(), "index": s.index().to_string(),
                "components": count, "diameter": diameter }),
    )
}

pub(crate) fn p3_ca(s: &Subject) -> Outcome {
    let e = s.prime_exponent(s.index());
    if !matches!(e, Some(e) if e <= 3) {
        return Outcome::vacuous(json!({ "index": s.index().to_string() }));
    }
    let bad = (0..s.classes.len()).find(|&k| !s.model.is_abelian_mask(&s.classes[k].centralizer));
    Outcome::verdict(
        bad.is_none(),
        json!({ "index": s.index().to_string(), "nonabelianCentralizer": bad.map(|k| s.vertex_label(k)) }),
    )
}

pub(crate) fn p45_diameter(s: &Subject) -> Outcome {
    let e = s.prime_exponent(s.index());
    if !matches!(e, Some(4 | 5)) {
        return Outcome::vacuous(json!({ "index": s.index().to_string() }));
    }
    let ca = s.model.is_ca();
    let nontrivial = s.nontrivial_components().len();
    let diameter = max_nontrivial_diameter(s);
    Outcome::verdict(
        ca || (nontrivial <= 1 && diameter <= 4),
        json!({ "ca": ca, "nontrivialComponents": nontrivial, "diameter": diameter }),
    )
}

/// Isolated vertices left when the nonisolated component is headed by the
/// single independent vertex `g`: the noncentral cosets outside C_G(g), each
/// isolated centralizer holding p − 1 of them.
pub fn unique_independent_isolated(p: u128, index: u128, centralizer_index: u128) -> u128 {
    (index - centralizer_index) / (p - 1)
}

/// Upper bound on isolated vertices with two independent vertices: at least
/// 2p³ − p² cosets lie in the nonisolated component.
pub fn two_independent_bound(p: u128) -> u128 {
    let index = p.pow(4);
    (index - (2 * p.pow(3) - p * p)) / (p - 1)
}

pub(crate) fn p4_isolated(s: &Subject) -> Outcome {
    if s.prime_exponent(s.index()) != Some(4) || s.model.is_ca() {
        return Outcome::vacuous(json!({ "index": s.index().to_string() }));
    }
    let p = s.prime.expect("p-group") as u128;
    let isolated: Vec<usize> = (0..s.gamma.vertex_count()).filter(|&k| s.gamma.degree(k) == 0).collect();
    let wrong_size: Vec<&str> = isolated
        .iter()
        .filter(|&&k| s.centralizer_index(k) as u128 != p)
        .map(|&k| s.vertex_label(k))
        .collect();
    let nontrivial = s.nontrivial_components();
    if nontrivial.len() != 1 {
        return Outcome::verdict(false, json!({ "nontrivialComponents": nontrivial.len() }));
    }
    let comp = nontrivial[0];
    let independent: Vec<usize> = comp
        .vertices
        .iter()
        .copied()
        .filter(|&k| !s.gamma_roles[k].is_subordinate())
        .collect();
    let count = isolated.len() as u128;
    let (branch, expected, ok) = if isolated.is_empty() {
        ("covers", Value::Null, true)
    } else if independent.len() == 1 {
        let g = independent[0];
        let closed = unique_independent_isolated(p, s.index(), s.centralizer_index(g) as u128);
        let want = p.pow(3);
        ("uniqueIndependent", json!({ "closedForm": closed.to_string(), "p3": want.to_string() }),
         closed == want && count == want)
    } else {
        let bound = two_independent_bound(p);
        ("twoIndependent", json!({ "bound": bound.to_string() }), bound == p * p * (p - 1) && count <= bound)
    };
    Outcome::verdict(
        wrong_size.is_empty() && ok,
        json!({ "branch": branch, "isolated": count.to_string(), "expected": expected,
                "independent": independent.iter().map(|&k| s.vertex_label(k)).collect::<Vec<_>>(),
                "isolatedWithIndexNotP": wrong_size }),
    )
}

pub(crate) fn class_n(s: &Subject) -> Outcome {
    let n = match s.nilpotence {
        Nilpotence::Class(n) => n,
        Nilpotence::NotNilpotent => 0,
    };
    let ok_index = s.last_term_index.and_then(|i| s.prime_exponent(i)).is_some_and(|e| e == 1 || e == 2);
    let base = json!({ "class": n, "lastTermIndex": s.last_term_index.map(|i| i.to_string()) });
    if n < 3 || s.prime.is_none() || !ok_index {
        return Outcome::vacuous(base);
    }
    let nontrivial = s.nontrivial_components().len();
    let diameter = max_nontrivial_diameter(s);
    Outcome::verdict(
        nontrivial <= 1 && diameter <= 8,
        json!({ "class": n, "lastTermIndex": s.last_term_index.map(|i| i.to_string()),
                "nontrivialComponents": nontrivial, "diameter": diameter }),
    )
}

/// Conditions of the isolated-vertex characterization for the Γ_Z vertex
/// `k`, in order.
pub fn isolated_conditions(s: &Subject, k: usize) -> [bool; 7] {
    let cl = &s.classes[k];
    let c = &cl.centralizer;
    let rep = cl.representative;
    let abelian = s.model.is_abelian_mask(c);
    let ev = s.elements.vertex_of_coset[rep];
    let z_of = |h: usize| &s.classes[s.class_of_coset[h]].z;
    [
        abelian && !s.elements.roles[ev].is_subordinate(),
        abelian && !s.gamma_roles[k].is_subordinate(),
        s.classes.iter().all(|h| &h.centralizer == c || only_center(&intersect(&h.centralizer, c))),
        noncentral(c).all(|h| s.model.row(h) == c),
        noncentral(c).all(|h| z_of(h) == &cl.z),
        noncentral(c).all(|h| z_of(h) == c),
        s.gamma.degree(k) == 0,
    ]
}

pub(crate) fn isolated_equiv(s: &Subject) -> Outcome {
    let mut isolated = 0;
    for k in 0..s.classes.len() {
        let conds = isolated_conditions(s, k);
        if conds.iter().any(|&b| b != conds[0]) {
            return Outcome::verdict(false, json!({ "vertex": s.vertex_label(k), "conditions": conds }));
        }
        isolated += conds[0] as usize;
    }
    Outcome::verdict(true, json!({ "vertices": s.classes.len(), "isolated": isolated }))
}

/// Conditions of the independent-vertex-component characterization for the
/// Γ_Z vertex `k`, in order.
pub fn independent_component_conditions(s: &Subject, k: usize) -> [bool; 5] {
    let cl = &s.classes[k];
    let c = &cl.centralizer;
    let eg = &s.elements;
    let ev = eg.vertex_of_coset[cl.representative];
    let own = eg.vertices_in(c);
    [
        s.classes.iter().all(|h| h.centralizer.is_subset(c) || only_center(&intersect(&h.centralizer, c))),
        noncentral(c).all(|h| s.model.row(h).is_subset(c)),
        noncentral(c).all(|h| cl.z.is_subset(&s.classes[s.class_of_coset[h]].z)),
        s.heads_component(k),
        own == eg.components[eg.component_of[ev]],
    ]
}

pub(crate) fn independent_component_equiv(s: &Subject) -> Outcome {
    let mut heads = 0;
    for k in 0..s.classes.len() {
        let conds = independent_component_conditions(s, k);
        if conds.iter().any(|&b| b != conds[0]) {
            return Outcome::verdict(false, json!({ "vertex": s.vertex_label(k), "conditions": conds }));
        }
        heads += conds[0] as usize;
    }
    Outcome::verdict(
        true,
        json!({ "vertices": s.classes.len(), "heads": heads, "elementGraph": s.elements.kind.name() }),
    )
}

pub(crate) fn ind_diam(s: &Subject) -> Outcome {
    let headed: Vec<usize> = (0..s.classes.len())
        .filter(|&k| s.gamma.degree(k) > 0 && s.heads_component(k))
        .collect();
    if headed.is_empty() {
        return Outcome::vacuous(json!({}));
    }
    let diameters: Vec<(String, usize)> = headed
        .iter()
        .map(|&k| (s.vertex_label(k).to_string(), s.gamma_components[s.gamma_component_of[k]].diameter))
        .collect();
    Outcome::verdict(diameters.iter().all(|(_, d)| *d == 2), json!({ "components": diameters }))
}

pub(crate) fn prime_index_isolated(s: &Subject) -> Outcome {
    let hits: Vec<usize> = (0..s.classes.len()).filter(|&k| is_prime_number(s.centralizer_index(k))).collect();
    if hits.is_empty() {
        return Outcome::vacuous(json!({}));
    }
    let bad: Vec<&str> = hits.iter().filter(|&&k| s.gamma.degree(k) > 0).map(|&k| s.vertex_label(k)).collect();
    Outcome::verdict(bad.is_empty(), json!({ "primeIndexVertices": hits.len(), "notIsolated": bad }))
}

pub(crate) fn ca_empty(s: &Subject) -> Outcome {
    let ca = s.model.is_ca();
    let empty = s.gamma.edge_count() == 0;
    let complete = (0..s.elements.components.len()).all(|c| s.elements.is_complete_component(c));
    Outcome::verdict(
        ca == empty && empty == complete,
        json!({ "ca": ca, "emptyGraph": empty, "allComplete": complete, "elementGraph": s.elements.kind.name() }),
    )
}

pub(crate) fn f_group_independent(s: &Subject) -> Outcome {
    let f = s.model.is_f();
    let subordinate = s.gamma_roles.iter().position(|r| r.is_subordinate());
    Outcome::verdict(
        f == subordinate.is_none(),
        json!({ "fGroup": f, "subordinateVertex": subordinate.map(|k| s.vertex_label(k)) }),
    )
}

pub(crate) fn sub_nonabelian(s: &Subject) -> Outcome {
    let mut pairs = 0;
    for (i, h) in s.classes.iter().enumerate() {
        for (j, g) in s.classes.iter().enumerate() {
            if i != j && h.centralizer.is_subset(&g.centralizer) {
                pairs += 1;
                if s.model.is_abelian_mask(&g.centralizer) {
                    return Outcome::verdict(
                        false,
                        json!({ "smaller": s.vertex_label(i), "abelianLarger": s.vertex_label(j) }),
                    );
                }
            }
        }
    }
    if pairs == 0 {
        return Outcome::vacuous(json!({}));
    }
    Outcome::verdict(true, json!({ "strictPairs": pairs }))
}

pub(crate) fn component_union_subgroup(s: &Subject) -> Outcome {
    let nontrivial = s.nontrivial_components();
    if nontrivial.is_empty() {
        return Outcome::vacuous(json!({}));
    }
    let rows: Vec<Value> = nontrivial
        .iter()
        .map(|comp| {
            let mut union = FixedBitSet::with_capacity(s.model.index());
            for &k in &comp.vertices {
                union.union_with(&s.classes[k].centralizer);
            }
            let headed = comp.vertices.iter().any(|&k| s.heads_component(k));
            json!({
                "component": s.vertex_label(comp.vertices[0]),
                "size": comp.len(),
                "diameter": comp.diameter,
                "unionCosets": union.count_ones(..),
                "unionIsSubgroup": s.model.is_subgroup_mask(&union),
                "singleIndependentHead": headed,
            })
        })
        .collect();
    let all = rows.iter().all(|r| r["unionIsSubgroup"] == true);
    Outcome::verdict(all, json!({ "components": rows }))
}
