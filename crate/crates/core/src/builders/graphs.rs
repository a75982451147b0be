use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::model::{CentralizerClass, QuotientModel};
use crate::error::{Error, Result};
use crate::fp::{Class2Group, TransversalVertex, VecFp};
use crate::graph::{to_dot, to_json, DotOptions, SimpleGraph};
use crate::group::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// 𝔠(G): noncentral elements, edges between commuting pairs.
    Commuting,
    /// 𝔠*(G): 𝔠(G) induced on a transversal of Z(G).
    Star,
    /// Γ_Z(G): the distinct Z(g), with Z₁–Z₂ when Z₂ ≤ C_G(Z₁).
    Centralizer,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Commuting => "commuting",
            GraphKind::Star => "star",
            GraphKind::Centralizer => "centralizer",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commuting" => Ok(GraphKind::Commuting),
            "star" => Ok(GraphKind::Star),
            "centralizer" => Ok(GraphKind::Centralizer),
            other => Err(Error::InvalidParameters(format!("unknown graph kind `{other}`"))),
        }
    }
}

/// What a vertex stands for.
#[derive(Clone, Debug)]
pub enum VertexPayload {
    /// An element id of a table.
    Element(u32),
    /// A coset of Z(G) in a class-2 group, by exponent vector.
    Vector(VecFp),
    /// A vertex of Γ_Z given by coset masks over Z(G).
    Class(CentralizerClass),
    /// A vertex of Γ_Z given by subspaces of G/Z(G).
    Subspace(TransversalVertex),
}

#[derive(Clone, Debug)]
pub struct LabeledGroupGraph {
    pub graph: SimpleGraph,
    pub kind: GraphKind,
    /// Group name and builder parameters.
    pub provenance: String,
    /// Parallel to the vertices of `graph`.
    pub payload: Vec<VertexPayload>,
}

impl LabeledGroupGraph {
    pub fn to_dot(&self, twin_clusters: bool) -> String {
        let opts = DotOptions {
            name: self.provenance.clone(),
            twin_clusters,
        };
        to_dot(&self.graph, &opts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = to_json(&self.graph);
        v["kind"] = self.kind.name().into();
        v["provenance"] = self.provenance.clone().into();
        v
    }
}

fn require_nonabelian(g: &GroupTable) -> Result<()> {
    if g.is_abelian() {
        Err(Error::AbelianGroup(g.name().to_string()))
    } else {
        Ok(())
    }
}

/// Adjacency rows of the graph induced on `vertices` by a commuting relation.
fn induced_rows(vertices: &[usize], commutes: impl Fn(usize, usize) -> bool + Sync) -> Vec<FixedBitSet> {
    let n = vertices.len();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            for j in 0..n {
                if i != j && commutes(vertices[i], vertices[j]) {
                    row.insert(j);
                }
            }
            row
        })
        .collect()
}

pub fn commuting_graph(g: &GroupTable) -> Result<LabeledGroupGraph> {
    require_nonabelian(g)?;
    let center = g.center();
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !center.contains(x)).collect();
    let rows = g.commuting_rows();
    let adj = induced_rows(&vertices, |a, b| rows[a].contains(b));
    Ok(LabeledGroupGraph {
        graph: SimpleGraph::from_adjacency(vertices.iter().map(|x| format!("g{x}")).collect(), adj),
        kind: GraphKind::Commuting,
        provenance: format!("{} commuting graph", g.name()),
        payload: vertices.iter().map(|&x| VertexPayload::Element(x as u32)).collect(),
    })
}

/// 𝔠*(G) on the least element of each noncentral coset.
pub fn star_graph(g: &GroupTable) -> Result<LabeledGroupGraph> {
    star_graph_with(g, "least element", |coset| coset[0])
}

/// 𝔠*(G) on the transversal chosen by `pick` from each noncentral coset
/// (given as its sorted element ids).
pub fn star_graph_with(
    g: &GroupTable,
    rule: &str,
    pick: impl Fn(&[u32]) -> u32,
) -> Result<LabeledGroupGraph> {
    require_nonabelian(g)?;
    let model = QuotientModel::from_table(g)?;
    let vertices: Vec<usize> = (1..model.index())
        .map(|c| pick(model.coset_members(c).expect("table model")) as usize)
        .collect();
    let rows = g.commuting_rows();
    let adj = induced_rows(&vertices, |a, b| rows[a].contains(b));
    Ok(LabeledGroupGraph {
        graph: SimpleGraph::from_adjacency(vertices.iter().map(|x| format!("g{x}")).collect(), adj),
        kind: GraphKind::Star,
        provenance: format!("{} star graph ({rule} transversal)", g.name()),
        payload: vertices.iter().map(|&x| VertexPayload::Element(x as u32)).collect(),
    })
}

pub fn centralizer_graph(g: &GroupTable) -> Result<LabeledGroupGraph> {
    Ok(QuotientModel::from_table(g)?.centralizer_graph())
}

/// Γ_Z(G(p,n,S)) with subspace payloads: Z_j is joined to Z_i when every
/// vector of Z_j lies in the nullspace C_G(g_i).
pub fn centralizer_graph_class2(g: &Class2Group, limit: usize) -> Result<LabeledGroupGraph> {
    let verts = g.transversal_vertices(limit)?;
    if verts.is_empty() {
        return Err(Error::AbelianGroup(g.name().to_string()));
    }
    let n = verts.len();
    let z_bases: Vec<Vec<VecFp>> = verts.iter().map(|v| v.z.basis().collect()).collect();
    let adj: Vec<FixedBitSet> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            let gi = &verts[i].representative;
            for j in 0..n {
                if i != j && z_bases[j].iter().all(|b| g.commute(gi, b)) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let labels = verts.iter().map(|v| format!("Z({})", v.representative.word())).collect();
    Ok(LabeledGroupGraph {
        graph: SimpleGraph::from_adjacency(labels, adj),
        kind: GraphKind::Centralizer,
        provenance: format!("{} centralizer graph (subspaces)", g.name()),
        payload: verts.into_iter().map(VertexPayload::Subspace).collect(),
    })
}

pub fn star_graph_class2(g: &Class2Group, limit: usize) -> Result<LabeledGroupGraph> {
    let vectors = g.noncentral_vectors(limit)?;
    if vectors.is_empty() {
        return Err(Error::AbelianGroup(g.name().to_string()));
    }
    let idx: Vec<usize> = (0..vectors.len()).collect();
    let adj = induced_rows(&idx, |a, b| g.commute(&vectors[a], &vectors[b]));
    Ok(LabeledGroupGraph {
        graph: SimpleGraph::from_adjacency(vectors.iter().map(VecFp::word).collect(), adj),
        kind: GraphKind::Star,
        provenance: format!("{} star graph (lexicographic transversal)", g.name()),
        payload: vectors.into_iter().map(VertexPayload::Vector).collect(),
    })
}

impl QuotientModel {
    /// 𝔠*(G) on the coset labels.
    pub fn star_graph(&self) -> LabeledGroupGraph {
        let cosets: Vec<usize> = (1..self.index()).collect();
        let adj = induced_rows(&cosets, |a, b| self.commutes(a, b));
        LabeledGroupGraph {
            graph: SimpleGraph::from_adjacency(cosets.iter().map(|&c| self.label(c).to_string()).collect(), adj),
            kind: GraphKind::Star,
            provenance: format!("{} star graph", self.name()),
            payload: cosets
                .iter()
                .map(|&c| match self.coset_members(c) {
                    Some(m) => VertexPayload::Element(m[0]),
                    None => VertexPayload::Vector(self.coset_vector(c).expect("class-2 model")),
                })
                .collect(),
        }
    }

    /// Γ_Z(G), vertices ordered by least coset; Z_i–Z_j when Z_j ≤ C_G(g_i).
    pub fn centralizer_graph(&self) -> LabeledGroupGraph {
        let classes = self.classes();
        let n = classes.len();
        let adj: Vec<FixedBitSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if i != j && classes[j].z.is_subset(&classes[i].centralizer) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let labels = classes
            .iter()
            .map(|c| format!("Z({})", self.label(c.representative)))
            .collect();
        LabeledGroupGraph {
            graph: SimpleGraph::from_adjacency(labels, adj),
            kind: GraphKind::Centralizer,
            provenance: format!("{} centralizer graph", self.name()),
            payload: classes.into_iter().map(VertexPayload::Class).collect(),
        }
    }
}
