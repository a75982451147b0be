use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::classify::{classify_all, VertexRole};
use super::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub id: usize,
    pub vertices: Vec<usize>,
    /// 0 for a singleton.
    pub diameter: usize,
    pub is_complete: bool,
    /// Parallel to `vertices`.
    pub roles: Vec<VertexRole>,
}

impl ComponentReport {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = FixedBitSet::with_capacity(n);
        comp.insert(start);
        let mut frontier = comp.clone();
        while !frontier.is_clear() {
            let mut next = FixedBitSet::with_capacity(n);
            for u in frontier.ones() {
                next.union_with(g.neighbor_set(u));
            }
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        seen.union_with(&comp);
        out.push(comp.ones().collect());
    }
    out
}

/// Longest shortest path inside one connected component.
///
/// Closed twins have the same distances to every third vertex, so one BFS
/// per distinct closed neighbourhood suffices once the component is known
/// not to be complete.
pub fn component_diameter(g: &SimpleGraph, component: &[usize]) -> usize {
    if component.len() <= 1 {
        return 0;
    }
    let size = component.len();
    if component.iter().all(|&v| g.degree(v) + 1 == size) {
        return 1;
    }
    let mut seen = HashSet::new();
    let sources: Vec<usize> = component
        .iter()
        .copied()
        .filter(|&v| seen.insert(g.closed_neighborhood(v)))
        .collect();
    sources
        .par_iter()
        .map(|&s| g.distances_from(s).into_iter().flatten().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

pub fn components(g: &SimpleGraph) -> Vec<ComponentReport> {
    let roles = classify_all(g);
    connected_components(g)
        .into_iter()
        .enumerate()
        .map(|(id, vertices)| {
            let diameter = component_diameter(g, &vertices);
            ComponentReport {
                id,
                diameter,
                is_complete: diameter <= 1,
                roles: vertices.iter().map(|&v| roles[v].clone()).collect(),
                vertices,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        let reports = components(&SimpleGraph::empty(5));
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.is_trivial() && r.diameter == 0 && r.is_complete));
        assert!(reports.iter().all(|r| r.roles == vec![VertexRole::Isolated]));
    }

    #[test]
    fn path_diameter() {
        let reports = components(&SimpleGraph::path(4));
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].diameter, 3);
        assert!(!reports[0].is_complete);
    }

    #[test]
    fn twin_heavy_diameter_matches_plain_bfs() {
        // Path of length 3 with the inner vertices blown up into cliques.
        let mut g = SimpleGraph::empty(8);
        let blocks: [&[usize]; 4] = [&[0], &[1, 2, 3], &[4, 5], &[6, 7]];
        for b in blocks {
            for (k, &u) in b.iter().enumerate() {
                for &v in &b[k + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        for w in blocks.windows(2) {
            for &u in w[0] {
                for &v in w[1] {
                    g.add_edge(u, v);
                }
            }
        }
        let comp: Vec<usize> = (0..8).collect();
        let brute = (0..8)
            .map(|s| g.distances_from(s).into_iter().flatten().max().unwrap())
            .max()
            .unwrap();
        assert_eq!(component_diameter(&g, &comp), brute);
        assert_eq!(brute, 3);
    }
}
