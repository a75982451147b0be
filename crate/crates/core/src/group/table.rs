use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::Subgroup;
use crate::error::{Error, Result};

/// Default cap on the order of any table the crate will hold.
pub const DEFAULT_TABLE_LIMIT: usize = 10_000;
/// Default cap on the order of a table whose associativity is validated.
pub const DEFAULT_VALIDATION_LIMIT: usize = 2048;
/// Table entries are stored as `u16`.
pub const MAX_TABLE_ORDER: usize = u16::MAX as usize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// Outcome of [`GroupTable::nilpotence_class`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Nilpotence {
    Class(usize),
    NotNilpotent,
}

/// One member of the family 𝒞(G) of centralizers of noncentral elements,
/// paired with its image Z(g) = Z(C_G(g)).
#[derive(Clone, Debug)]
pub struct FamilyEntry {
    pub representative: u32,
    pub centralizer: Subgroup,
    pub z: Subgroup,
}

#[derive(Clone, Debug)]
pub struct CentralizerFamily {
    pub entries: Vec<FamilyEntry>,
}

impl CentralizerFamily {
    /// C_i ≤ C_j exactly when Z_j ≤ Z_i, and distinct centralizers have
    /// distinct Z's.
    pub fn is_order_reversing_bijection(&self) -> bool {
        let n = self.entries.len();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&self.entries[i], &self.entries[j]);
                let c_le = a.centralizer.is_subgroup_of(&b.centralizer);
                let z_ge = b.z.is_subgroup_of(&a.z);
                if c_le != z_ge {
                    return false;
                }
                if i != j && a.z == b.z {
                    return false;
                }
            }
        }
        true
    }
}

/// A finite group given by its full multiplication table. Element 0 is the
/// identity.
pub struct GroupTable {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    name: String,
    commuting: OnceLock<Vec<FixedBitSet>>,
    center: OnceLock<Subgroup>,
}

impl Clone for GroupTable {
    fn clone(&self) -> Self {
        GroupTable {
            order: self.order,
            table: self.table.clone(),
            inverses: self.inverses.clone(),
            name: self.name.clone(),
            commuting: self.commuting.clone(),
            center: self.center.clone(),
        }
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl GroupTable {
    /// Builds a table from a product function on `0..order`.
    ///
    /// Latin-square and identity checks always run; `validate` additionally
    /// confirms associativity (only allowed up to [`DEFAULT_VALIDATION_LIMIT`]
    /// unless a larger `limit` is passed through [`GroupTable::from_fn_with_limits`]).
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        validate: bool,
        product: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        Self::from_fn_with_limits(
            name,
            order,
            validate,
            DEFAULT_TABLE_LIMIT,
            DEFAULT_VALIDATION_LIMIT,
            product,
        )
    }

    pub fn from_fn_with_limits(
        name: impl Into<String>,
        order: usize,
        validate: bool,
        limit: usize,
        validation_limit: usize,
        product: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be positive".into()));
        }
        let limit = limit.min(MAX_TABLE_ORDER);
        if order > limit {
            return Err(Error::SizeLimit {
                order: order as u128,
                limit: limit as u128,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = product(a, b);
                if v >= order {
                    return Err(Error::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: v,
                        order,
                    });
                }
                table.push(v as u16);
            }
        }
        Self::from_flat(name.into(), order, table, validate, validation_limit)
    }

    /// Builds a table from explicit rows.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>], validate: bool) -> Result<Self> {
        let order = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(Error::MalformedTable(format!(
                "row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        Self::from_fn(name, order, validate, |a, b| rows[a][b])
    }

    /// Builds a table whose identity may sit at any index; the identity is
    /// swapped to index 0 and every other label kept.
    pub fn from_rows_reindexed(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        validate: bool,
    ) -> Result<Self> {
        let order = rows.len();
        let identity = (0..order)
            .find(|&e| {
                rows[e].len() == order
                    && (0..order).all(|j| rows[e][j] == j && rows[j].get(e) == Some(&j))
            })
            .ok_or(Error::IdentityNotZero)?;
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut fixed = vec![vec![0usize; order]; order];
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                fixed[relabel(a)][relabel(b)] = relabel(v);
            }
        }
        Self::from_rows(name, &fixed, validate)
    }

    fn from_flat(
        name: String,
        order: usize,
        table: Vec<u16>,
        validate: bool,
        validation_limit: usize,
    ) -> Result<Self> {
        for j in 0..order {
            if table[j] as usize != j || table[j * order] as usize != j {
                return Err(Error::IdentityNotZero);
            }
        }
        let mut seen = FixedBitSet::with_capacity(order);
        for a in 0..order {
            seen.clear();
            for b in 0..order {
                let v = table[a * order + b] as usize;
                if seen.put(v) {
                    return Err(Error::NotLatinSquare {
                        kind: "row",
                        index: a,
                    });
                }
            }
        }
        for b in 0..order {
            seen.clear();
            for a in 0..order {
                let v = table[a * order + b] as usize;
                if seen.put(v) {
                    return Err(Error::NotLatinSquare {
                        kind: "column",
                        index: b,
                    });
                }
            }
        }
        let mut inverses = vec![0u16; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row.iter().position(|&v| v == 0).expect("latin row holds 0");
            inverses[a] = b as u16;
        }
        let group = GroupTable {
            order,
            table,
            inverses,
            name,
            commuting: OnceLock::new(),
            center: OnceLock::new(),
        };
        if validate {
            if order > validation_limit {
                return Err(Error::SizeLimit {
                    order: order as u128,
                    limit: validation_limit as u128,
                });
            }
            group.check_associative()?;
        }
        Ok(group)
    }

    /// Light's associativity test: associativity through every element of a
    /// generating set implies associativity everywhere. The generating set is
    /// chosen so that left-normed products of it already cover the table.
    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let mut reached = FixedBitSet::with_capacity(n);
            let mut stack: Vec<usize> = Vec::new();
            for &s in &gens {
                if !reached.put(s) {
                    stack.push(s);
                }
            }
            while let Some(x) = stack.pop() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !reached.put(y) {
                        stack.push(y);
                    }
                }
            }
            match reached.zeroes().next() {
                None => break,
                Some(g) => gens.push(g),
            }
        }
        for &s in &gens {
            for a in 0..n {
                let as_ = self.mul(a, s);
                for b in 0..n {
                    if self.mul(as_, b) != self.mul(a, self.mul(s, b)) {
                        return Err(Error::NotAssociative { a, b: s, c: b });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul(a.index(), b.index()) as u32)
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        ElementId(self.inv(a.index()) as u32)
    }

    pub fn row(&self, a: usize) -> &[u16] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// [a, b] = a⁻¹ b⁻¹ a b.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    /// Row `g` is the membership mask of C_G(g).
    pub fn commuting_rows(&self) -> &[FixedBitSet] {
        self.commuting.get_or_init(|| {
            let n = self.order;
            let mut rows: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
            for a in 0..n {
                rows[a].insert(a);
                rows[a].insert(0);
                rows[0].insert(a);
                for b in (a + 1)..n {
                    if self.commutes(a, b) {
                        rows[a].insert(b);
                        rows[b].insert(a);
                    }
                }
            }
            rows
        })
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.center().contains(g)
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| {
            let n = self.order;
            let rows = self.commuting_rows();
            let mut mask = FixedBitSet::with_capacity(n);
            for (g, row) in rows.iter().enumerate() {
                if row.count_ones(..) == n {
                    mask.insert(g);
                }
            }
            Subgroup::from_mask(mask)
        })
    }

    pub fn centralizer(&self, g: ElementId) -> Result<Subgroup> {
        let g = self.check(g)?;
        Ok(Subgroup::from_mask(self.commuting_rows()[g].clone()))
    }

    /// ∩_{s ∈ S} C_G(s).
    pub fn centralizer_of_set(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.centralizer_mask_of(s.members().iter().map(|&x| x as usize)))
    }

    pub(crate) fn centralizer_mask_of(&self, elements: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let rows = self.commuting_rows();
        let mut mask = FixedBitSet::with_capacity(self.order);
        mask.insert_range(..);
        for x in elements {
            mask.intersect_with(&rows[x]);
        }
        mask
    }

    /// Z(g) = Z(C_G(g)); only defined for noncentral g.
    pub fn z_of(&self, g: ElementId) -> Result<Subgroup> {
        let gi = self.check(g)?;
        if self.is_central(gi) {
            return Err(Error::CentralElement(g.to_string()));
        }
        Ok(Subgroup::from_mask(self.z_mask(gi)))
    }

    pub(crate) fn z_mask(&self, g: usize) -> FixedBitSet {
        let rows = self.commuting_rows();
        let c = &rows[g];
        let mut z = c.clone();
        for x in c.ones() {
            z.intersect_with(&rows[x]);
        }
        z
    }

    fn check(&self, g: ElementId) -> Result<usize> {
        let i = g.index();
        if i >= self.order {
            Err(Error::ElementOutOfRange(i))
        } else {
            Ok(i)
        }
    }

    /// Smallest subgroup containing `generators`.
    pub fn closure(&self, generators: impl IntoIterator<Item = usize>) -> Subgroup {
        let n = self.order;
        let mut mask = FixedBitSet::with_capacity(n);
        mask.insert(0);
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for g in generators {
            if mask.contains(g) {
                continue;
            }
            gens.push(g);
            // Re-close: every member times every generator.
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !mask.put(y) {
                        members.push(y);
                    }
                }
                i += 1;
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Closure of the union of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.closure(a.members().iter().chain(b.members()).map(|&x| x as usize))
    }

    /// [A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut values = FixedBitSet::with_capacity(self.order);
        for &x in a.members() {
            for &y in b.members() {
                values.insert(self.commutator(x as usize, y as usize));
            }
        }
        self.closure(values.ones())
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = Subgroup::whole(self.order);
        self.commutator_subgroup(&whole, &whole)
    }

    /// G₁ = G, G_{i+1} = [G_i, G], stopping at the trivial group or at the
    /// first repeated term (which is not repeated in the output).
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self.order);
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_trivial() {
                break;
            }
            let next = self.commutator_subgroup(last, &whole);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn nilpotence_class(&self) -> Nilpotence {
        let series = self.lower_central_series();
        if series.last().is_some_and(Subgroup::is_trivial) {
            Nilpotence::Class(series.len() - 1)
        } else {
            Nilpotence::NotNilpotent
        }
    }

    /// Masks of the distinct centralizers of noncentral elements, each with
    /// the least element having it.
    pub(crate) fn distinct_centralizer_masks(&self) -> Vec<(usize, &FixedBitSet)> {
        let rows = self.commuting_rows();
        let center = self.center();
        let mut seen: HashMap<&FixedBitSet, usize> = HashMap::new();
        let mut out = Vec::new();
        for g in 0..self.order {
            if center.contains(g) {
                continue;
            }
            if !seen.contains_key(&rows[g]) {
                seen.insert(&rows[g], g);
                out.push((g, &rows[g]));
            }
        }
        out
    }

    pub(crate) fn mask_is_abelian(&self, mask: &FixedBitSet) -> bool {
        let rows = self.commuting_rows();
        mask.ones().all(|x| mask.is_subset(&rows[x]))
    }

    /// Every noncentral element has an abelian centralizer.
    pub fn is_ca_group(&self) -> bool {
        self.distinct_centralizer_masks()
            .into_iter()
            .all(|(_, m)| self.mask_is_abelian(m))
    }

    /// No strict containment among centralizers of noncentral elements.
    pub fn is_f_group(&self) -> bool {
        let masks = self.distinct_centralizer_masks();
        for (i, (_, a)) in masks.iter().enumerate() {
            for (j, (_, b)) in masks.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn distinct_centralizer_family(&self) -> Result<CentralizerFamily> {
        if self.is_abelian() {
            return Err(Error::AbelianGroup(self.name.clone()));
        }
        let entries = self
            .distinct_centralizer_masks()
            .into_iter()
            .map(|(g, mask)| FamilyEntry {
                representative: g as u32,
                centralizer: Subgroup::from_mask(mask.clone()),
                z: Subgroup::from_mask(self.z_mask(g)),
            })
            .collect();
        Ok(CentralizerFamily { entries })
    }

    /// Componentwise product; `(g, h)` has index `g + |G|·h`.
    pub fn direct_product(&self, other: &GroupTable, limit: usize) -> Result<GroupTable> {
        let (m, k) = (self.order, other.order);
        let order = m
            .checked_mul(k)
            .filter(|&o| o <= limit.min(MAX_TABLE_ORDER))
            .ok_or(Error::SizeLimit {
                order: m as u128 * k as u128,
                limit: limit.min(MAX_TABLE_ORDER) as u128,
            })?;
        let name = format!("{}x{}", self.name, other.name);
        Self::from_fn_with_limits(name, order, false, limit, 0, |a, b| {
            let (a1, a2) = (a % m, a / m);
            let (b1, b2) = (b % m, b / m);
            self.mul(a1, b1) + m * other.mul(a2, b2)
        })
    }

    /// `Some((p, k))` when the order is p^k for a prime p and k ≥ 1.
    pub fn prime_power_order(&self) -> Option<(u64, u32)> {
        crate::fp::prime_power(self.order as u64)
    }

    /// The quotient by a normal subgroup, with the coset index of every
    /// element and the least representative of every coset. Coset 0 is `normal`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(GroupTable, Vec<usize>, Vec<usize>)> {
        let n = self.order;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &z in normal.members() {
                coset_of[self.mul(g, z as usize)] = c;
            }
        }
        let m = reps.len();
        let name = format!("{}/N", self.name);
        let q = Self::from_fn(name, m, false, |a, b| coset_of[self.mul(reps[a], reps[b])])?;
        Ok((q, coset_of, reps))
    }

    pub fn to_cayley_text(&self) -> String {
        super::cayley::format_cayley(self)
    }
}
