//! Generic finite groups over explicit multiplication tables.

mod cayley;
mod subgroup;
mod table;

pub use cayley::{format_cayley, load_cayley_table, load_cayley_table_with_limits};
pub use subgroup::Subgroup;
pub use table::{
    CentralizerFamily, ElementId, FamilyEntry, GroupTable, Nilpotence, DEFAULT_TABLE_LIMIT,
    DEFAULT_VALIDATION_LIMIT, MAX_TABLE_ORDER,
};

#[cfg(test)]
mod tests;
