use rayon::prelude::*;

use super::twins::{closed_twin_partition, quotient_by_twins};
use super::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Isolated,
    /// Every vertex whose closed neighbourhood strictly contains this one's.
    SubordinateTo(Vec<usize>),
    Independent,
}

impl VertexRole {
    pub fn is_isolated(&self) -> bool {
        matches!(self, VertexRole::Isolated)
    }

    pub fn is_independent(&self) -> bool {
        matches!(self, VertexRole::Independent)
    }

    pub fn is_subordinate(&self) -> bool {
        matches!(self, VertexRole::SubordinateTo(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            VertexRole::Isolated => "isolated",
            VertexRole::SubordinateTo(_) => "subordinate",
            VertexRole::Independent => "independent",
        }
    }
}

pub fn classify_vertex(g: &SimpleGraph, v: usize) -> VertexRole {
    if g.degree(v) == 0 {
        return VertexRole::Isolated;
    }
    let mine = g.closed_neighborhood(v);
    let size = mine.count_ones(..);
    // N[v] ⊆ N[w] forces w ∈ N(v), so only neighbours can dominate.
    let dominators: Vec<usize> = g
        .neighbors(v)
        .filter(|&w| g.degree(w) + 1 > size && mine.is_subset(&g.closed_neighborhood(w)))
        .collect();
    if dominators.is_empty() {
        VertexRole::Independent
    } else {
        VertexRole::SubordinateTo(dominators)
    }
}

/// Roles of every vertex. Twins share roles, so the work is done once per
/// twin class.
pub fn classify_all(g: &SimpleGraph) -> Vec<VertexRole> {
    let t = closed_twin_partition(g);
    if t.len() == g.vertex_count() {
        return (0..g.vertex_count())
            .into_par_iter()
            .map(|v| classify_vertex(g, v))
            .collect();
    }
    let q = quotient_by_twins(g, &t).expect("closed twin partition is consistent");
    let class_roles: Vec<VertexRole> = (0..q.vertex_count())
        .into_par_iter()
        .map(|c| match classify_vertex(&q, c) {
            VertexRole::SubordinateTo(ws) => {
                let mut all: Vec<usize> = ws.iter().flat_map(|&w| t.classes[w].iter().copied()).collect();
                all.sort_unstable();
                VertexRole::SubordinateTo(all)
            }
            VertexRole::Isolated if t.classes[c].len() > 1 => VertexRole::Independent,
            r => r,
        })
        .collect();
    t.class_of.iter().map(|&c| class_roles[c].clone()).collect()
}
