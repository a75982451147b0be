use std::collections::HashMap;
use std::fmt;

use super::linalg::{mul, sub, SubspaceFp, VecFp};
use super::is_prime;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::{GroupTable, MAX_TABLE_ORDER};

/// Default cap on p^n for enumerating F_p^n.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 6561;
/// Default cap on p^(n+|S|) for expanding to a Cayley table.
pub const DEFAULT_EXPANSION_LIMIT: usize = 6561;

/// The graph S on vertices 1..=n, stored with 0-based adjacency for both S
/// and its complement S̄.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSet {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacent: Vec<Vec<bool>>,
}

impl EdgeSet {
    /// `edges` are 1-based unordered pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacent = vec![vec![false; n]; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidEdges(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidEdges(format!("edge {a}-{b} has an endpoint outside 1..={n}")));
            }
            let (i, j) = (a.min(b), a.max(b));
            if adjacent[i - 1][j - 1] {
                return Err(Error::InvalidEdges(format!("duplicate edge {i}-{j}")));
            }
            adjacent[i - 1][j - 1] = true;
            adjacent[j - 1][i - 1] = true;
            list.push((i, j));
        }
        list.sort_unstable();
        Ok(EdgeSet { n, edges: list, adjacent })
    }

    /// Parses `"1-3,1-4,2-4"`. An empty string is the empty edge set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::InvalidEdges(format!("`{tok}` is not of the form i-j")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidEdges(format!("`{tok}` has a non-integer endpoint")))
            };
            pairs.push((parse(a)?, parse(b)?));
        }
        Self::new(n, pairs)
    }

    /// The complement of `complement_edges` on n vertices.
    pub fn from_complement(n: usize, complement_edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let keep = EdgeSet::new(n, complement_edges)?;
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !keep.adjacent[i - 1][j - 1] {
                    pairs.push((i, j));
                }
            }
        }
        Self::new(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// 0-based adjacency in S.
    pub fn in_s(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    /// 0-based adjacency in S̄.
    pub fn in_complement(&self, i: usize, j: usize) -> bool {
        i != j && !self.adjacent[i][j]
    }

    /// 0-based vertices with no S-edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.adjacent[i].iter().any(|&x| x)).collect()
    }

    /// S̄ as a graph labelled "1".."n".
    pub fn complement_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new((1..=self.n).map(|i| i.to_string()).collect());
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.in_complement(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn to_text(&self) -> String {
        self.edges
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet(n={}, {{{}}})", self.n, self.to_text())
    }
}

/// One vertex of the transversal grouping: all nonzero vectors sharing a
/// centralizer.
#[derive(Clone, Debug)]
pub struct TransversalVertex {
    pub centralizer: SubspaceFp,
    pub z: SubspaceFp,
    /// Lexicographically least vector in the class.
    pub representative: VecFp,
    pub multiplicity: usize,
}

/// G(p, n, S): the class-2 p-group on x_1..x_n with [x_i, x_j] = z_{ij}
/// central for {i, j} ∈ S and x_i, x_j commuting otherwise.
///
/// Elements are x-exponent vectors times central words; everything here
/// works modulo the central words.
#[derive(Clone, Debug)]
pub struct Class2Group {
    p: u32,
    edges: EdgeSet,
    name: String,
}

impl Class2Group {
    pub fn new(p: u32, edges: EdgeSet) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if edges.n() == 0 {
            return Err(Error::InvalidParameters("G(p,n,S) needs n >= 1".into()));
        }
        let name = format!("G({},{},{{{}}})", p, edges.n(), edges.to_text());
        Ok(Class2Group { p, edges, name })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.edges.n()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// No generator is central, i.e. S has no isolated vertex.
    pub fn is_nondegenerate(&self) -> bool {
        self.edges.isolated_vertices().is_empty()
    }

    /// |G| = p^(n + |S|).
    pub fn order_exponent(&self) -> usize {
        self.n() + self.edges.len()
    }

    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.order_exponent() as u32)
    }

    /// log_p |Z(G)|: the z's plus the central generators.
    pub fn center_exponent(&self) -> usize {
        self.edges.len() + self.edges.isolated_vertices().len()
    }

    /// log_p |G : Z(G)|.
    pub fn central_quotient_exponent(&self) -> usize {
        self.n() - self.edges.isolated_vertices().len()
    }

    fn check_len(&self, v: &VecFp) -> Result<()> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Exponent of z_{ij} in [g, h] for each edge of S, in edge order:
    /// a_i b_j − a_j b_i mod p.
    pub fn commutator_exponents(&self, a: &VecFp, b: &VecFp) -> Result<Vec<u32>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.pairing(a.coords(), b.coords()))
    }

    pub(crate) fn pairing(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        self.edges
            .edges()
            .iter()
            .map(|&(i, j)| sub(mul(a[i - 1], b[j - 1], p), mul(a[j - 1], b[i - 1], p), p))
            .collect()
    }

    pub fn commute(&self, a: &VecFp, b: &VecFp) -> bool {
        let p = self.p;
        self.edges.edges().iter().all(|&(i, j)| {
            mul(a.0[i - 1], b.0[j - 1], p) == mul(a.0[j - 1], b.0[i - 1], p)
        })
    }

    /// Per-edge linear forms b ↦ a_i b_j − a_j b_i.
    fn constraint_rows(&self, a: &VecFp) -> Vec<Vec<u32>> {
        let (p, n) = (self.p, self.n());
        self.edges
            .edges()
            .iter()
            .map(|&(i, j)| {
                let mut row = vec![0u32; n];
                row[j - 1] = (row[j - 1] + a.0[i - 1]) % p;
                row[i - 1] = sub(row[i - 1], a.0[j - 1], p);
                row
            })
            .filter(|row| row.iter().any(|&x| x != 0))
            .collect()
    }

    pub fn is_central(&self, a: &VecFp) -> bool {
        self.constraint_rows(a).is_empty()
    }

    /// C_G(g)/Z(G) as the subspace of exponent vectors commuting with `a`.
    /// Directions along central generators are included.
    pub fn centralizer_space(&self, a: &VecFp) -> Result<SubspaceFp> {
        self.check_len(a)?;
        let rows = self.constraint_rows(a);
        if rows.is_empty() {
            return Err(Error::CentralElement(a.word()));
        }
        Ok(SubspaceFp::nullspace(self.p, self.n(), rows))
    }

    /// Z(g)/Z(G): vectors of the centralizer commuting with all of it.
    pub fn z_space(&self, a: &VecFp) -> Result<SubspaceFp> {
        let c = self.centralizer_space(a)?;
        Ok(self.center_of_space(&c))
    }

    /// The vectors of `space` that commute with every vector of `space`.
    pub fn center_of_space(&self, space: &SubspaceFp) -> SubspaceFp {
        let basis: Vec<VecFp> = space.basis().collect();
        let d = basis.len();
        let p = self.p;
        // Σ λ_k c_k commutes with c_l iff Σ λ_k pairing_e(c_k, c_l) = 0 for every edge e.
        let mut constraints = Vec::new();
        for cl in &basis {
            let per_k: Vec<Vec<u32>> = basis.iter().map(|ck| self.pairing(&ck.0, &cl.0)).collect();
            for e in 0..self.edges.len() {
                let row: Vec<u32> = (0..d).map(|k| per_k[k][e]).collect();
                if row.iter().any(|&x| x != 0) {
                    constraints.push(row);
                }
            }
        }
        let coeffs = SubspaceFp::nullspace(p, d, constraints);
        let vectors = coeffs.basis().map(|lam| {
            let mut v = vec![0u32; self.n()];
            for (l, ck) in lam.0.iter().zip(&basis) {
                for j in 0..self.n() {
                    v[j] = (v[j] + mul(*l, ck.0[j], p)) % p;
                }
            }
            VecFp(v)
        });
        SubspaceFp::span(p, self.n(), vectors)
    }

    /// Every subspace vector commutes with every other.
    pub fn is_abelian_space(&self, space: &SubspaceFp) -> bool {
        let basis: Vec<VecFp> = space.basis().collect();
        basis
            .iter()
            .all(|a| basis.iter().all(|b| self.commute(a, b)))
    }

    /// Nonzero vectors, in lexicographic order, with zero coordinates on
    /// central generators: one representative per noncentral coset of Z(G).
    pub fn noncentral_vectors(&self, limit: usize) -> Result<Vec<VecFp>> {
        let n = self.n();
        let total = (self.p as u128).pow(n as u32);
        if total > limit as u128 {
            return Err(Error::SizeLimit {
                order: total,
                limit: limit as u128,
            });
        }
        let isolated = self.edges.isolated_vertices();
        Ok((1..total as usize)
            .map(|idx| VecFp::from_lex_index(idx, n, self.p))
            .filter(|v| isolated.iter().all(|&k| v.0[k] == 0) && !v.is_zero())
            .collect())
    }

    /// Groups all noncentral vectors by centralizer. Vertices come out in
    /// order of their lexicographically least member.
    pub fn transversal_vertices(&self, limit: usize) -> Result<Vec<TransversalVertex>> {
        let mut index: HashMap<SubspaceFp, usize> = HashMap::new();
        let mut out: Vec<TransversalVertex> = Vec::new();
        for v in self.noncentral_vectors(limit)? {
            let c = self.centralizer_space(&v)?;
            match index.get(&c) {
                Some(&k) => out[k].multiplicity += 1,
                None => {
                    index.insert(c.clone(), out.len());
                    let z = self.center_of_space(&c);
                    out.push(TransversalVertex {
                        centralizer: c,
                        z,
                        representative: v,
                        multiplicity: 1,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Table index of the element x^a (central part trivial).
    pub fn embed(&self, a: &VecFp) -> usize {
        a.lex_index(self.p)
    }

    /// The full Cayley table. Element `x + p^n·c` is ∏ x_i^{a_i} · ∏ z_e^{c_e}
    /// with `x`, `c` lexicographic indices of the exponent vectors.
    pub fn expand_to_table(&self, limit: usize) -> Result<GroupTable> {
        let p = self.p as usize;
        let n = self.n();
        let s = self.edges.len();
        let limit = limit.min(MAX_TABLE_ORDER);
        let order = self.order().filter(|&o| o <= limit as u128).ok_or(Error::SizeLimit {
            order: self.order().unwrap_or(u128::MAX),
            limit: limit as u128,
        })? as usize;
        let xs = p.pow(n as u32);
        let cs = p.pow(s as u32);
        let xvec: Vec<VecFp> = (0..xs).map(|i| VecFp::from_lex_index(i, n, self.p)).collect();
        let cvec: Vec<VecFp> = (0..cs).map(|i| VecFp::from_lex_index(i, s, self.p)).collect();
        let xadd: Vec<usize> = (0..xs * xs)
            .map(|k| xvec[k / xs].add(&xvec[k % xs], self.p).lex_index(self.p))
            .collect();
        let cadd: Vec<usize> = (0..cs * cs)
            .map(|k| cvec[k / cs].add(&cvec[k % cs], self.p).lex_index(self.p))
            .collect();
        // Reordering x_j^{a_j} past x_i^{b_i} (i < j) contributes z_{ij}^{-a_j b_i}.
        let cocycle: Vec<usize> = (0..xs * xs)
            .map(|k| {
                let (a, b) = (&xvec[k / xs], &xvec[k % xs]);
                let c: Vec<u32> = self
                    .edges
                    .edges()
                    .iter()
                    .map(|&(i, j)| sub(0, mul(a.0[j - 1], b.0[i - 1], self.p), self.p))
                    .collect();
                VecFp(c).lex_index(self.p)
            })
            .collect();
        GroupTable::from_fn_with_limits(self.name.clone(), order, false, limit, 0, |g, h| {
            let (a, c1) = (g % xs, g / xs);
            let (b, c2) = (h % xs, h / xs);
            let c = cadd[cadd[c1 * cs + c2] * cs + cocycle[a * xs + b]];
            xadd[a * xs + b] + xs * c
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1(p: u32) -> Class2Group {
        Class2Group::new(p, EdgeSet::parse(4, "1-3,1-4,2-4,3-4").unwrap()).unwrap()
    }

    #[test]
    fn edge_set_validation() {
        assert!(matches!(EdgeSet::parse(3, "1-4"), Err(Error::InvalidEdges(_))));
        assert!(matches!(EdgeSet::parse(3, "2-2"), Err(Error::InvalidEdges(_))));
        assert!(matches!(EdgeSet::parse(3, "1-2,2-1"), Err(Error::InvalidEdges(_))));
        assert!(matches!(EdgeSet::parse(3, "1:2"), Err(Error::InvalidEdges(_))));
        assert_eq!(EdgeSet::parse(3, "").unwrap().len(), 0);
        assert_eq!(EdgeSet::parse(4, "3-1, 2-4").unwrap().edges(), &[(1, 3), (2, 4)]);
    }

    #[test]
    fn rejects_non_prime() {
        let e = EdgeSet::parse(2, "1-2").unwrap();
        assert_eq!(Class2Group::new(4, e).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn orders_and_degeneracy() {
        let g = Class2Group::new(3, EdgeSet::parse(2, "1-2").unwrap()).unwrap();
        assert_eq!(g.order(), Some(27));
        assert!(g.is_nondegenerate());

        let g = example1(2);
        assert_eq!(g.order(), Some(256));
        assert_eq!(g.central_quotient_exponent(), 4);

        let g = Class2Group::new(2, EdgeSet::parse(3, "1-2").unwrap()).unwrap();
        assert!(!g.is_nondegenerate());
        assert_eq!(g.edges().isolated_vertices(), vec![2]);
    }

    #[test]
    fn commutator_exponents_examples() {
        let g = Class2Group::new(3, EdgeSet::parse(2, "1-2").unwrap()).unwrap();
        let c = g.commutator_exponents(&VecFp::unit(2, 0), &VecFp::unit(2, 1)).unwrap();
        assert_eq!(c, vec![1]);
        let a = VecFp(vec![1, 2]);
        assert_eq!(g.commutator_exponents(&a, &a.scaled(2, 3)).unwrap(), vec![0]);

        // example1, a = e2, b = e4: only edge 2-4 picks up exponent 1.
        let g = example1(2);
        let c = g.commutator_exponents(&VecFp::unit(4, 1), &VecFp::unit(4, 3)).unwrap();
        let edges = g.edges().edges();
        for (k, &(i, j)) in edges.iter().enumerate() {
            let expected = u32::from((i, j) == (2, 4));
            assert_eq!(c[k], expected, "edge {i}-{j}");
        }
        assert!(matches!(
            g.commutator_exponents(&VecFp::unit(3, 0), &VecFp::unit(4, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn example1_centralizers() {
        let g = example1(3);
        let e = |i| VecFp::unit(4, i);
        let c2 = g.centralizer_space(&e(1)).unwrap();
        assert_eq!(c2, SubspaceFp::span(3, 4, [e(0), e(1), e(2)]));
        assert_eq!(g.z_space(&e(1)).unwrap(), SubspaceFp::span(3, 4, [e(1)]));
        let c4 = g.centralizer_space(&e(3)).unwrap();
        assert_eq!(c4, SubspaceFp::span(3, 4, [e(3)]));
        assert_eq!(g.z_space(&e(3)).unwrap(), c4);
        assert!(matches!(g.centralizer_space(&VecFp::zeros(4)), Err(Error::CentralElement(_))));
    }

    #[test]
    fn gothic_three_z_of_x1() {
        // S̄ = path 1-2-3-4.
        let s = EdgeSet::from_complement(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let g = Class2Group::new(3, s).unwrap();
        let e = |i| VecFp::unit(4, i);
        assert_eq!(g.centralizer_space(&e(0)).unwrap(), SubspaceFp::span(3, 4, [e(0), e(1)]));
        assert_eq!(g.z_space(&e(0)).unwrap(), SubspaceFp::span(3, 4, [e(0), e(1)]));
    }

    #[test]
    fn extraspecial_transversal() {
        let g = Class2Group::new(3, EdgeSet::parse(2, "1-2").unwrap()).unwrap();
        let verts = g.transversal_vertices(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(verts.len(), 4);
        assert!(verts.iter().all(|v| v.multiplicity == 2));
        assert_eq!(verts.iter().map(|v| v.multiplicity).sum::<usize>(), 8);
    }

    #[test]
    fn enumeration_limit() {
        let g = example1(3);
        assert!(matches!(g.transversal_vertices(80), Err(Error::SizeLimit { order: 81, .. })));
    }

    #[test]
    fn degenerate_transversal_skips_central_directions() {
        let g = Class2Group::new(2, EdgeSet::parse(3, "1-2").unwrap()).unwrap();
        let verts = g.transversal_vertices(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(verts.iter().map(|v| v.multiplicity).sum::<usize>(), 3);
        assert!(g.is_central(&VecFp::unit(3, 2)));
    }
}
