use std::fmt;

use fixedbitset::FixedBitSet;

/// A subgroup stored as an explicit sorted set of element ids of its parent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<u32>,
    mask: FixedBitSet,
}

impl Subgroup {
    /// Wraps a membership mask. The caller guarantees closure; use
    /// [`GroupTable::closure`](super::GroupTable::closure) to generate one.
    pub fn from_mask(mask: FixedBitSet) -> Self {
        let members = mask.ones().map(|i| i as u32).collect();
        Subgroup {
            parent_order: mask.len(),
            members,
            mask,
        }
    }

    pub fn trivial(parent_order: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        mask.insert(0);
        Self::from_mask(mask)
    }

    pub fn whole(parent_order: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        mask.insert_range(..);
        Self::from_mask(mask)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Subgroups always contain the identity, so this is never true for a
    /// well-formed value.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn contains(&self, g: usize) -> bool {
        g < self.parent_order && self.mask.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.len() < other.len() && self.is_subgroup_of(other)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Subgroup::from_mask(mask)
    }

    /// Index in the parent group.
    pub fn index(&self) -> usize {
        self.parent_order / self.len()
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}
