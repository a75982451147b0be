use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

/// Undirected simple graph with bitset rows and unique vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// Edgeless graph on the given labels.
    ///
    /// # Panics
    /// If two labels coincide.
    pub fn new(labels: Vec<String>) -> Self {
        let mut seen = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                panic!("duplicate vertex label `{l}` at {j} and {i}");
            }
        }
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Graph from symmetric, loop-free adjacency rows.
    ///
    /// # Panics
    /// If two labels coincide, a row has the wrong length, or the rows are
    /// not symmetric and loop-free.
    pub fn from_adjacency(labels: Vec<String>, adj: Vec<FixedBitSet>) -> Self {
        let mut g = Self::new(labels);
        let n = g.vertex_count();
        assert_eq!(adj.len(), n, "adjacency has {} rows for {n} vertices", adj.len());
        for (u, row) in adj.iter().enumerate() {
            assert_eq!(row.len(), n, "row {u} has length {}", row.len());
            assert!(!row.contains(u), "self-loop at {u}");
            for v in row.ones() {
                assert!(adj[v].contains(u), "edge {u}-{v} is not symmetric");
            }
        }
        g.adj = adj;
        g
    }

    /// Edgeless graph labelled "0", "1", ...
    pub fn empty(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// K_{1,leaves} with the hub at 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.iter().map(|&v| self.labels[v].clone()).collect());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(source);
        dist[source] = Some(0);
        let mut frontier = vec![source];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next_mask = FixedBitSet::with_capacity(n);
            for &u in &frontier {
                next_mask.union_with(&self.adj[u]);
            }
            next_mask.difference_with(&seen);
            seen.union_with(&next_mask);
            frontier = next_mask.ones().collect();
            for &v in &frontier {
                dist[v] = Some(depth);
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({} vertices, edges: [", self.vertex_count())?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", self.labels[u], self.labels[v])?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.has_edge(3, 0));
        let p = SimpleGraph::path(4);
        assert_eq!(p.distance(0, 3), Some(3));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let e = SimpleGraph::empty(3);
        assert_eq!(e.distance(0, 2), None);
    }

    #[test]
    #[should_panic(expected = "duplicate vertex label")]
    fn duplicate_labels_panic() {
        SimpleGraph::new(vec!["a".into(), "a".into()]);
    }

    #[test]
    fn induced() {
        let p = SimpleGraph::path(5);
        let h = p.induced_subgraph(&[1, 2, 4]);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.label(2), "4");
    }
}
