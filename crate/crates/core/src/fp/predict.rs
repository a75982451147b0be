//! Reading C(g) off the support of g in S̄ without solving a linear system.

use super::class2::Class2Group;
use super::linalg::{SubspaceFp, VecFp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// The support is a clique of S̄.
    Clique,
    /// The non-dominating part of the support is pairwise at distance 2 in S̄.
    TypeTwo,
    /// No vertex is S̄-adjacent to the whole support, and S restricted to
    /// the support is connected: C(g) = ⟨g⟩Z(G).
    Isolated,
    Central,
    /// None of the above shapes applies; the centralizer comes from the
    /// general component formula.
    Unclassified,
}

/// What the prediction says about the vertex Z(g) of Γ_Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedRole {
    Isolated,
    Subordinate,
}

/// Vertex sets are 0-based generator indices.
#[derive(Clone, Debug)]
pub struct VertexKindPrediction {
    pub kind: VertexKind,
    pub support: Vec<usize>,
    pub common_neighbors: Vec<usize>,
    pub dominators: Vec<usize>,
    /// `None` only for central vectors.
    pub centralizer: Option<SubspaceFp>,
    pub role: Option<PredictedRole>,
}

struct Complement<'a>(&'a Class2Group);

impl Complement<'_> {
    fn adj(&self, i: usize, j: usize) -> bool {
        self.0.edges().in_complement(i, j)
    }

    fn common_neighbors(&self, set: &[usize]) -> Vec<usize> {
        (0..self.0.n())
            .filter(|v| !set.contains(v) && set.iter().all(|&c| self.adj(*v, c)))
            .collect()
    }

    fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| self.adj(a, b)))
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !self.adj(a, b)))
    }

    /// Connected components of S (not S̄) restricted to `set`.
    fn s_components(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; set.len()];
        let mut out = Vec::new();
        for start in 0..set.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(k) = stack.pop() {
                comp.push(set[k]);
                for m in 0..set.len() {
                    if !seen[m] && self.0.edges().in_s(set[k], set[m]) {
                        seen[m] = true;
                        stack.push(m);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn restrict(a: &VecFp, set: &[usize]) -> VecFp {
    let mut v = VecFp::zeros(a.len());
    for &i in set {
        v.0[i] = a.0[i];
    }
    v
}

fn units(n: usize, set: &[usize]) -> impl Iterator<Item = VecFp> + '_ {
    set.iter().map(move |&i| VecFp::unit(n, i))
}

/// Classifies `a` by the shape of its support in S̄, trying clique, then
/// type two, then isolated.
pub fn predict_vertex_kind(group: &Class2Group, a: &VecFp) -> VertexKindPrediction {
    let (p, n) = (group.p(), group.n());
    let graph = Complement(group);
    let support = a.support();
    let mut out = VertexKindPrediction {
        kind: VertexKind::Central,
        support: support.clone(),
        common_neighbors: Vec::new(),
        dominators: Vec::new(),
        centralizer: None,
        role: None,
    };
    if a.len() != n || group.is_central(a) {
        return out;
    }
    let common = graph.common_neighbors(&support);

    if graph.is_clique(&support) {
        out.kind = VertexKind::Clique;
        out.centralizer = Some(SubspaceFp::span(p, n, units(n, &support).chain(units(n, &common))));
        out.common_neighbors = common;
        return out;
    }

    let (core, attached): (Vec<usize>, Vec<usize>) = support.iter().partition(|&&c| {
        !support.iter().all(|&d| d == c || graph.adj(c, d))
    });
    if core.len() >= 2 && graph.is_independent(&core) {
        let d = graph.common_neighbors(&core);
        let e: Vec<usize> = d
            .iter()
            .copied()
            .filter(|&x| d.iter().all(|&y| y == x || graph.adj(x, y)))
            .collect();
        if !d.is_empty() && attached.iter().all(|x| e.contains(x)) {
            out.kind = VertexKind::TypeTwo;
            out.role = Some(if e.is_empty() {
                PredictedRole::Isolated
            } else {
                PredictedRole::Subordinate
            });
            out.centralizer = Some(SubspaceFp::span(
                p,
                n,
                std::iter::once(restrict(a, &core)).chain(units(n, &d)),
            ));
            out.common_neighbors = d;
            out.dominators = e;
            return out;
        }
    }

    let components = graph.s_components(&support);
    if common.is_empty() && components.len() == 1 {
        out.kind = VertexKind::Isolated;
        out.role = Some(PredictedRole::Isolated);
        out.centralizer = Some(SubspaceFp::span(p, n, [a.clone()]));
        return out;
    }

    out.kind = VertexKind::Unclassified;
    out.centralizer = Some(SubspaceFp::span(
        p,
        n,
        components
            .iter()
            .map(|k| restrict(a, k))
            .chain(units(n, &common)),
    ));
    out.common_neighbors = common;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{EdgeSet, DEFAULT_ENUMERATION_LIMIT};

    fn gothic3(p: u32) -> Class2Group {
        let s = EdgeSet::from_complement(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        Class2Group::new(p, s).unwrap()
    }

    fn v(c: &[u32]) -> VecFp {
        VecFp(c.to_vec())
    }

    #[test]
    fn path_examples() {
        let g = gothic3(3);
        let pr = predict_vertex_kind(&g, &v(&[1, 0, 1, 0]));
        assert_eq!(pr.kind, VertexKind::TypeTwo);
        assert_eq!(pr.common_neighbors, vec![1]);
        assert_eq!(pr.role, Some(PredictedRole::Subordinate));
        assert_eq!(
            pr.centralizer.unwrap(),
            SubspaceFp::span(3, 4, [v(&[1, 0, 1, 0]), v(&[0, 1, 0, 0])])
        );

        let pr = predict_vertex_kind(&g, &v(&[1, 1, 0, 0]));
        assert_eq!(pr.kind, VertexKind::Clique);
        assert!(pr.common_neighbors.is_empty());
        assert_eq!(pr.centralizer.unwrap().dim(), 2);

        let pr = predict_vertex_kind(&g, &v(&[1, 0, 0, 1]));
        assert_eq!(pr.kind, VertexKind::Isolated);
        assert_eq!(pr.centralizer.unwrap(), SubspaceFp::span(3, 4, [v(&[1, 0, 0, 1])]));

        // x1x2x3: 2 is adjacent to the rest of the support and dominates D = {2}.
        let pr = predict_vertex_kind(&g, &v(&[1, 1, 1, 0]));
        assert_eq!(pr.kind, VertexKind::TypeTwo);

        assert_eq!(predict_vertex_kind(&g, &VecFp::zeros(4)).kind, VertexKind::Central);
    }

    #[test]
    fn unclassified_support_on_a_four_cycle() {
        let s = EdgeSet::from_complement(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let g = Class2Group::new(3, s).unwrap();
        let a = v(&[1, 1, 1, 0]);
        let pr = predict_vertex_kind(&g, &a);
        assert_eq!(pr.kind, VertexKind::Unclassified);
        assert_eq!(pr.centralizer.unwrap(), g.centralizer_space(&a).unwrap());
    }

    #[test]
    fn predictions_match_nullspaces() {
        let shapes: [&[(usize, usize)]; 4] = [
            &[(1, 2), (2, 3), (3, 4)],
            &[(1, 2), (2, 3), (2, 4)],
            &[(1, 2), (1, 3), (2, 3)],
            &[(1, 3), (2, 3), (3, 4), (4, 5)],
        ];
        for (k, complement) in shapes.iter().enumerate() {
            let n = if k == 3 { 5 } else { 4 };
            let s = EdgeSet::from_complement(n, complement.iter().copied()).unwrap();
            let g = Class2Group::new(3, s).unwrap();
            for a in g.noncentral_vectors(DEFAULT_ENUMERATION_LIMIT).unwrap() {
                let pr = predict_vertex_kind(&g, &a);
                assert_eq!(
                    pr.centralizer.as_ref().unwrap(),
                    &g.centralizer_space(&a).unwrap(),
                    "{:?} {}",
                    pr.kind,
                    a.word()
                );
            }
        }
    }
}
