use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Classes of the closed-twin relation: u ∼ v iff u = v, or u and v are
/// adjacent with N[u] = N[v].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    /// Sorted members, classes ordered by least member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

pub fn closed_twin_partition(g: &SimpleGraph) -> TwinPartition {
    let n = g.vertex_count();
    let mut by_nbhd: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for v in 0..n {
        let id = *by_nbhd.entry(g.closed_neighborhood(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
        class_of[v] = id;
    }
    // Equal closed neighbourhoods force adjacency, hence transitivity.
    debug_assert!(classes
        .iter()
        .all(|c| c.iter().all(|&u| c.iter().all(|&v| u == v || g.has_edge(u, v)))));
    TwinPartition { classes, class_of }
}

/// The graph on twin classes. Each class is labelled by its least member.
pub fn quotient_by_twins(g: &SimpleGraph, t: &TwinPartition) -> Result<SimpleGraph> {
    let n = g.vertex_count();
    if t.class_of.len() != n {
        return Err(Error::NotTwinPartition(format!(
            "partition covers {} vertices, graph has {n}",
            t.class_of.len()
        )));
    }
    let mut seen = vec![false; n];
    for (k, class) in t.classes.iter().enumerate() {
        let Some(&rep) = class.first() else {
            return Err(Error::NotTwinPartition(format!("class {k} is empty")));
        };
        let nbhd = g.closed_neighborhood(rep);
        for &v in class {
            if v >= n || seen[v] || t.class_of[v] != k {
                return Err(Error::NotTwinPartition(format!("vertex {v} is misassigned")));
            }
            seen[v] = true;
            if g.closed_neighborhood(v) != nbhd {
                return Err(Error::NotTwinPartition(format!(
                    "{} and {} are not closed twins",
                    g.label(rep),
                    g.label(v)
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::NotTwinPartition(format!("vertex {v} is in no class")));
    }
    let mut q = SimpleGraph::new(t.classes.iter().map(|c| g.label(c[0]).to_string()).collect());
    for (u, v) in g.edges() {
        let (a, b) = (t.class_of[u], t.class_of[v]);
        if a != b {
            q.add_edge(a, b);
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_collapses() {
        let g = SimpleGraph::complete(5);
        let t = closed_twin_partition(&g);
        assert_eq!(t.classes, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(quotient_by_twins(&g, &t).unwrap().vertex_count(), 1);
    }

    #[test]
    fn empty_and_path_are_twin_free() {
        assert_eq!(closed_twin_partition(&SimpleGraph::empty(4)).len(), 4);
        let p = SimpleGraph::path(4);
        let t = closed_twin_partition(&p);
        assert_eq!(t.len(), 4);
        assert_eq!(quotient_by_twins(&p, &t).unwrap(), p);
    }

    #[test]
    fn open_twins_are_not_closed_twins() {
        // Leaves of a star share N but are not adjacent.
        let t = closed_twin_partition(&SimpleGraph::star(3));
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn rejects_bad_partitions() {
        let p = SimpleGraph::path(3);
        let bad = TwinPartition {
            classes: vec![vec![0, 1], vec![2]],
            class_of: vec![0, 0, 1],
        };
        assert!(matches!(quotient_by_twins(&p, &bad), Err(Error::NotTwinPartition(_))));
        let short = TwinPartition {
            classes: vec![vec![0], vec![1]],
            class_of: vec![0, 1],
        };
        assert!(quotient_by_twins(&p, &short).is_err());
    }
}
