use fixedbitset::FixedBitSet;

use crate::builders::{commuting_graph, CentralizerClass, GraphKind, QuotientModel, VertexPayload};
use crate::constructions::BuiltGroup;
use crate::error::Result;
use crate::fp::{prime_power, Class2Group};
use crate::graph::{classify_all, components, connected_components, ComponentReport, SimpleGraph, VertexRole};
use crate::group::{GroupTable, Nilpotence};

/// Everything the checks read about one nonabelian group, computed once.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub table: Option<GroupTable>,
    pub class2: Option<Class2Group>,
    pub model: QuotientModel,
    /// Vertices of Γ_Z, in graph order.
    pub classes: Vec<CentralizerClass>,
    /// Γ_Z vertex of every noncentral coset; `usize::MAX` at coset 0.
    pub class_of_coset: Vec<usize>,
    pub gamma: SimpleGraph,
    pub gamma_roles: Vec<VertexRole>,
    pub gamma_components: Vec<ComponentReport>,
    /// Γ_Z component of every vertex.
    pub gamma_component_of: Vec<usize>,
    /// 𝔠(G) for tables, 𝔠*(G) otherwise.
    pub elements: ElementGraph,
    pub prime: Option<u64>,
    pub derived_order: u128,
    pub nilpotence: Nilpotence,
    /// |G : C_G(G_{n−1})| for nilpotent tables of class n ≥ 3.
    pub last_term_index: Option<u128>,
}

/// The graph on noncentral elements (or coset representatives) that the
/// element-level conditions are read from.
#[derive(Clone, Debug)]
pub struct ElementGraph {
    pub kind: GraphKind,
    pub graph: SimpleGraph,
    pub roles: Vec<VertexRole>,
    /// Coset of every vertex.
    pub coset: Vec<usize>,
    /// Some vertex in each coset; `usize::MAX` at coset 0.
    pub vertex_of_coset: Vec<usize>,
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl ElementGraph {
    fn new(kind: GraphKind, graph: SimpleGraph, coset: Vec<usize>, index: usize) -> Self {
        let roles = classify_all(&graph);
        let components = connected_components(&graph);
        let mut component_of = vec![0; graph.vertex_count()];
        for (i, c) in components.iter().enumerate() {
            for &v in c {
                component_of[v] = i;
            }
        }
        let mut vertex_of_coset = vec![usize::MAX; index];
        for (v, &c) in coset.iter().enumerate().rev() {
            vertex_of_coset[c] = v;
        }
        ElementGraph { kind, graph, roles, coset, vertex_of_coset, component_of, components }
    }

    /// Vertices whose coset lies in `mask`, excluding the center.
    pub fn vertices_in(&self, mask: &FixedBitSet) -> Vec<usize> {
        (0..self.coset.len()).filter(|&v| mask.contains(self.coset[v])).collect()
    }

    pub fn is_complete_component(&self, c: usize) -> bool {
        let vs = &self.components[c];
        vs.iter().all(|&v| self.graph.degree(v) + 1 == vs.len())
    }
}

impl Subject {
    pub fn from_built(built: BuiltGroup, limit: usize) -> Result<Self> {
        match built {
            BuiltGroup::Table(t) => Self::from_table(t),
            BuiltGroup::Class2(g) => Self::from_class2(g, limit),
        }
    }

    pub fn from_table(t: GroupTable) -> Result<Self> {
        let model = QuotientModel::from_table(&t)?;
        let commuting = commuting_graph(&t)?;
        let (_, coset_of, _) = t.quotient(t.center())?;
        let coset: Vec<usize> = commuting
            .payload
            .iter()
            .map(|p| match p {
                VertexPayload::Element(x) => coset_of[*x as usize],
                _ => unreachable!("element payload"),
            })
            .collect();
        let elements = ElementGraph::new(GraphKind::Commuting, commuting.graph, coset, model.index());
        let derived_order = t.derived_subgroup().len() as u128;
        let nilpotence = t.nilpotence_class();
        let last_term_index = match nilpotence {
            Nilpotence::Class(n) if n >= 3 => {
                let lcs = t.lower_central_series();
                Some((t.order() / t.centralizer_of_set(&lcs[n - 2]).len()) as u128)
            }
            _ => None,
        };
        let prime = t.prime_power_order().map(|(p, _)| p);
        let mut s = Self::assemble(t.name().to_string(), model, elements, prime, derived_order, nilpotence);
        s.last_term_index = last_term_index;
        s.table = Some(t);
        Ok(s)
    }

    pub fn from_class2(g: Class2Group, limit: usize) -> Result<Self> {
        let model = QuotientModel::from_class2(&g, limit)?;
        let star = model.star_graph();
        let coset: Vec<usize> = (1..model.index()).collect();
        let elements = ElementGraph::new(GraphKind::Star, star.graph, coset, model.index());
        let derived_order = (g.p() as u128).pow(g.edges().len() as u32);
        let mut s = Self::assemble(
            g.name().to_string(),
            model,
            elements,
            Some(g.p() as u64),
            derived_order,
            Nilpotence::Class(2),
        );
        s.class2 = Some(g);
        Ok(s)
    }

    fn assemble(
        name: String,
        model: QuotientModel,
        elements: ElementGraph,
        prime: Option<u64>,
        derived_order: u128,
        nilpotence: Nilpotence,
    ) -> Self {
        let gamma_graph = model.centralizer_graph();
        let classes: Vec<CentralizerClass> = gamma_graph
            .payload
            .into_iter()
            .map(|p| match p {
                VertexPayload::Class(c) => c,
                _ => unreachable!("class payload"),
            })
            .collect();
        let gamma = gamma_graph.graph;
        let mut class_of_coset = vec![usize::MAX; model.index()];
        let mut by_row = std::collections::HashMap::new();
        for (k, c) in classes.iter().enumerate() {
            by_row.insert(c.centralizer.clone(), k);
        }
        for (c, slot) in class_of_coset.iter_mut().enumerate().skip(1) {
            *slot = by_row[model.row(c)];
        }
        let gamma_components = components(&gamma);
        let mut gamma_component_of = vec![0; gamma.vertex_count()];
        for r in &gamma_components {
            for &v in &r.vertices {
                gamma_component_of[v] = r.id;
            }
        }
        let gamma_roles = classify_all(&gamma);
        Subject {
            name,
            table: None,
            class2: None,
            model,
            classes,
            class_of_coset,
            gamma,
            gamma_roles,
            gamma_components,
            gamma_component_of,
            elements,
            prime,
            derived_order,
            nilpotence,
            last_term_index: None,
        }
    }

    /// |G : Z(G)|.
    pub fn index(&self) -> u128 {
        self.model.index() as u128
    }

    /// |C_G(g) : Z(G)| for the Γ_Z vertex `k`.
    pub fn centralizer_index(&self, k: usize) -> usize {
        self.classes[k].centralizer.count_ones(..)
    }

    pub fn vertex_label(&self, k: usize) -> &str {
        self.gamma.label(k)
    }

    pub fn nontrivial_components(&self) -> Vec<&ComponentReport> {
        self.gamma_components.iter().filter(|c| !c.is_trivial()).collect()
    }

    pub fn isolated_count(&self) -> usize {
        self.gamma_components.iter().filter(|c| c.is_trivial()).count()
    }

    /// Γ_Z vertices subordinate to `k`.
    pub fn subordinates(&self, k: usize) -> Vec<usize> {
        (0..self.gamma.vertex_count())
            .filter(|&j| matches!(&self.gamma_roles[j], VertexRole::SubordinateTo(d) if d.contains(&k)))
            .collect()
    }

    /// `k` is independent and its component is exactly `k` with its
    /// subordinates.
    pub fn heads_component(&self, k: usize) -> bool {
        if self.gamma_roles[k].is_subordinate() {
            return false;
        }
        let mut own = self.subordinates(k);
        own.push(k);
        own.sort_unstable();
        own == self.gamma_components[self.gamma_component_of[k]].vertices
    }

    /// `p^e` when `n` is a power of the subject's prime.
    pub fn prime_exponent(&self, n: u128) -> Option<u32> {
        let p = self.prime? as u128;
        let mut e = 0;
        let mut x = n;
        while x > 1 {
            if !x.is_multiple_of(p) {
                return None;
            }
            x /= p;
            e += 1;
        }
        Some(e)
    }
}

pub(crate) fn is_prime_number(n: usize) -> bool {
    prime_power(n as u64).is_some_and(|(_, a)| a == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gothic, two_group, TwoGroupKind};

    #[test]
    fn d16_subject() {
        let s = Subject::from_table(two_group(TwoGroupKind::Dihedral, 16).unwrap()).unwrap();
        assert_eq!(s.index(), 8);
        assert_eq!(s.derived_order, 4);
        assert_eq!(s.nilpotence, Nilpotence::Class(3));
        assert_eq!(s.last_term_index, Some(2));
        assert_eq!(s.elements.graph.vertex_count(), 14);
        assert_eq!(s.gamma.vertex_count(), 5);
        assert!(s.class_of_coset[1..].iter().all(|&k| k < 5));
    }

    #[test]
    fn gothic_subject() {
        let s = Subject::from_class2(gothic(3, &[3]).unwrap(), 1 << 16).unwrap();
        assert_eq!(s.prime, Some(3));
        assert_eq!(s.derived_order, 3u128.pow(3));
        assert_eq!(s.nontrivial_components().len(), 1);
        assert_eq!(s.elements.kind, GraphKind::Star);
        assert_eq!(s.prime_exponent(81), Some(4));
        assert_eq!(s.prime_exponent(18), None);
    }
}
