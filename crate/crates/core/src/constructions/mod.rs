//! Factories for the groups used as test subjects: the class-2 families,
//! the 2-groups of maximal class, Frobenius groups and a few small extras.

mod class2;
mod frobenius;
mod spec;
mod tables;

pub use class2::{gothic, gothic_paths, gpns, named_example, NamedExample};
pub use frobenius::{frobenius, KernelKind};
pub use spec::{BuiltGroup, FamilySpec};
pub use tables::{
    cyclic, dihedral, extraspecial, generalized_dihedral, heisenberg, metacyclic, two_group,
    TwoGroupKind, CONSTRUCTION_LIMIT,
};
