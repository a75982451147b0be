//! Simple graphs: components, diameters, closed twins, vertex roles,
//! isomorphism and export.

mod classify;
mod components;
mod export;
mod iso;
mod simple;
mod twins;

pub use classify::{classify_all, classify_vertex, VertexRole};
pub use components::{component_diameter, components, connected_components, ComponentReport};
pub use export::{to_dot, to_json, DotOptions};
pub use iso::{
    extend_iso_by_twin_permutations, is_isomorphism, isomorphic, isomorphic_with_limit,
    DEFAULT_ISO_LIMIT,
};
pub use simple::SimpleGraph;
pub use twins::{closed_twin_partition, quotient_by_twins, TwinPartition};
