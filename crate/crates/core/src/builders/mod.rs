//! The commuting graph 𝔠(G), the transversal graph 𝔠*(G) and the
//! centralizer graph Γ_Z(G), built from either group representation.

mod correspondence;
mod graphs;
mod model;

pub use correspondence::{
    cross_check_class2, verify_correspondence, Class2CrossCheck, ComponentPair, CorrespondenceReport,
};
pub use graphs::{
    centralizer_graph, centralizer_graph_class2, commuting_graph, star_graph, star_graph_class2,
    star_graph_with, GraphKind, LabeledGroupGraph, VertexPayload,
};
pub use model::{CentralizerClass, QuotientModel};
