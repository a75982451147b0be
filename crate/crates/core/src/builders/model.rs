use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fp::{Class2Group, SubspaceFp, VecFp};
use crate::group::GroupTable;

/// Multiplication on G/Z(G).
#[derive(Clone, Debug)]
enum CosetProduct {
    Table(GroupTable),
    /// G/Z(G) ≅ F_p^k for a class-2 group; cosets are lexicographic indices.
    Vector { p: u32, k: usize, n: usize, kept: Vec<usize> },
}

/// One distinct centralizer, seen through the cosets of Z(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerClass {
    /// Least coset whose centralizer this is.
    pub representative: usize,
    /// C_G(g)/Z(G) as a coset mask.
    pub centralizer: FixedBitSet,
    /// Z(g)/Z(G) as a coset mask.
    pub z: FixedBitSet,
    /// Number of noncentral cosets with this centralizer.
    pub multiplicity: usize,
}

/// A group reduced to what the commuting relation sees: the cosets of the
/// center with their commuting masks. Coset 0 is Z(G) itself.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    name: String,
    center_order: u128,
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
    product: CosetProduct,
    /// Element ids of each coset when built from a table.
    coset_members: Option<Vec<Vec<u32>>>,
}

impl QuotientModel {
    pub fn from_table(g: &GroupTable) -> Result<Self> {
        if g.is_abelian() {
            return Err(Error::AbelianGroup(g.name().to_string()));
        }
        let (q, coset_of, reps) = g.quotient(g.center())?;
        let m = reps.len();
        let rows_g = g.commuting_rows();
        let rows: Vec<FixedBitSet> = reps
            .par_iter()
            .map(|&r| {
                let mut row = FixedBitSet::with_capacity(m);
                for &x in &reps {
                    if rows_g[r].contains(x) {
                        row.insert(coset_of[x]);
                    }
                }
                row
            })
            .collect();
        let mut members = vec![Vec::new(); m];
        for (x, &c) in coset_of.iter().enumerate() {
            members[c].push(x as u32);
        }
        Ok(QuotientModel {
            name: g.name().to_string(),
            center_order: g.center().len() as u128,
            labels: reps.iter().map(|r| format!("g{r}")).collect(),
            rows,
            product: CosetProduct::Table(q),
            coset_members: Some(members),
        })
    }

    /// Cosets are the exponent vectors supported off the central
    /// generators, in lexicographic order.
    pub fn from_class2(g: &Class2Group, limit: usize) -> Result<Self> {
        let vectors = g.noncentral_vectors(limit)?;
        if vectors.is_empty() {
            return Err(Error::AbelianGroup(g.name().to_string()));
        }
        let isolated = g.edges().isolated_vertices();
        let kept: Vec<usize> = (0..g.n()).filter(|i| !isolated.contains(i)).collect();
        let (p, k) = (g.p(), kept.len());
        let reduce = |v: &VecFp| VecFp(kept.iter().map(|&i| v.0[i]).collect()).lex_index(p);
        let m = (p as usize).pow(k as u32);
        let mut labels = vec!["1".to_string(); m];
        for v in &vectors {
            labels[reduce(v)] = v.word();
        }
        let spaces: Vec<SubspaceFp> = vectors
            .par_iter()
            .map(|v| g.centralizer_space(v))
            .collect::<Result<_>>()?;
        let mut cache: HashMap<&SubspaceFp, FixedBitSet> = HashMap::new();
        let mut rows = vec![FixedBitSet::with_capacity(m); m];
        rows[0].insert_range(..);
        for (v, space) in vectors.iter().zip(&spaces) {
            let row = cache.entry(space).or_insert_with(|| {
                let mut row = FixedBitSet::with_capacity(m);
                for w in space.elements() {
                    if isolated.iter().all(|&i| w.0[i] == 0) {
                        row.insert(reduce(&w));
                    }
                }
                row
            });
            rows[reduce(v)] = row.clone();
        }
        let center_order = (p as u128).pow(g.center_exponent() as u32);
        Ok(QuotientModel {
            name: g.name().to_string(),
            center_order,
            labels,
            rows,
            product: CosetProduct::Vector { p, k, n: g.n(), kept },
            coset_members: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// |G : Z(G)|.
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn center_order(&self) -> u128 {
        self.center_order
    }

    pub fn order(&self) -> u128 {
        self.center_order * self.rows.len() as u128
    }

    /// `g12` for a table coset (its least element), the word `x1*x3^2` for a
    /// class-2 coset.
    pub fn label(&self, coset: usize) -> &str {
        &self.labels[coset]
    }

    /// C_G(g)/Z(G) for any g in the coset.
    pub fn row(&self, coset: usize) -> &FixedBitSet {
        &self.rows[coset]
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn coset_members(&self, coset: usize) -> Option<&[u32]> {
        self.coset_members.as_ref().map(|m| m[coset].as_slice())
    }

    pub fn coset_mul(&self, a: usize, b: usize) -> usize {
        match &self.product {
            CosetProduct::Table(q) => q.mul(a, b),
            CosetProduct::Vector { p, k, .. } => {
                let (va, vb) = (VecFp::from_lex_index(a, *k, *p), VecFp::from_lex_index(b, *k, *p));
                va.add(&vb, *p).lex_index(*p)
            }
        }
    }

    /// The exponent vector of a class-2 coset.
    pub fn coset_vector(&self, coset: usize) -> Option<VecFp> {
        match &self.product {
            CosetProduct::Table(_) => None,
            CosetProduct::Vector { p, k, n, kept } => {
                let short = VecFp::from_lex_index(coset, *k, *p);
                let mut v = VecFp::zeros(*n);
                for (&i, &a) in kept.iter().zip(&short.0) {
                    v.0[i] = a;
                }
                Some(v)
            }
        }
    }

    /// Z(g)/Z(G): the cosets commuting with every coset of C_G(g)/Z(G).
    pub fn z_mask(&self, coset: usize) -> FixedBitSet {
        self.centralizer_of(&self.rows[coset])
    }

    /// ∩_{c ∈ mask} C_G(c), as a coset mask.
    pub fn centralizer_of(&self, mask: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.index());
        out.insert_range(..);
        for c in mask.ones() {
            out.intersect_with(&self.rows[c]);
        }
        out
    }

    pub fn is_abelian_mask(&self, mask: &FixedBitSet) -> bool {
        mask.ones().all(|c| mask.is_subset(&self.rows[c]))
    }

    /// The set of cosets is closed under multiplication.
    pub fn is_subgroup_mask(&self, mask: &FixedBitSet) -> bool {
        mask.contains(0)
            && mask
                .ones()
                .all(|a| mask.ones().all(|b| mask.contains(self.coset_mul(a, b))))
    }

    /// Distinct centralizers of noncentral elements, ordered by least coset.
    pub fn classes(&self) -> Vec<CentralizerClass> {
        let mut index: HashMap<&FixedBitSet, usize> = HashMap::new();
        let mut out: Vec<CentralizerClass> = Vec::new();
        for c in 1..self.index() {
            match index.get(&self.rows[c]) {
                Some(&k) => out[k].multiplicity += 1,
                None => {
                    index.insert(&self.rows[c], out.len());
                    out.push(CentralizerClass {
                        representative: c,
                        centralizer: self.rows[c].clone(),
                        z: FixedBitSet::new(),
                        multiplicity: 1,
                    });
                }
            }
        }
        out.par_iter_mut().for_each(|cl| cl.z = self.z_mask(cl.representative));
        out
    }

    /// Every noncentral centralizer is abelian.
    pub fn is_ca(&self) -> bool {
        self.classes().iter().all(|c| self.is_abelian_mask(&c.centralizer))
    }

    /// No strict containment between centralizers of noncentral elements.
    pub fn is_f(&self) -> bool {
        let classes = self.classes();
        classes.iter().all(|a| {
            classes
                .iter()
                .all(|b| a.centralizer == b.centralizer || !a.centralizer.is_subset(&b.centralizer))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gpns, two_group, TwoGroupKind};

    #[test]
    fn class2_model_matches_expanded_table() {
        let g = gpns(2, 4, "1-3,1-4,2-4,3-4").unwrap();
        let from_vectors = QuotientModel::from_class2(&g, 1 << 12).unwrap();
        let t = g.expand_to_table(1 << 12).unwrap();
        let from_table = QuotientModel::from_table(&t).unwrap();
        assert_eq!(from_vectors.index(), 16);
        assert_eq!(from_table.index(), 16);
        assert_eq!(from_vectors.center_order(), from_table.center_order());
        // Table cosets are ordered by least element, which is the lex index.
        for a in 0..16 {
            assert_eq!(from_vectors.row(a), from_table.row(a), "coset {a}");
        }
    }

    #[test]
    fn degenerate_class2_skips_central_generators() {
        let g = gpns(3, 3, "1-2").unwrap();
        let m = QuotientModel::from_class2(&g, 100).unwrap();
        assert_eq!(m.index(), 9);
        assert_eq!(m.center_order(), 9);
        assert_eq!(m.label(1), "x2");
        assert_eq!(m.label(3), "x1");
        assert!(m.is_ca());
    }

    #[test]
    fn d16_model() {
        let g = two_group(TwoGroupKind::Dihedral, 16).unwrap();
        let m = QuotientModel::from_table(&g).unwrap();
        assert_eq!((m.index(), m.center_order()), (8, 2));
        assert!(m.is_ca() && m.is_f());
        let full: FixedBitSet = (0..8).collect();
        assert!(m.is_subgroup_mask(&full));
        assert_eq!(m.classes().len(), 5);
        assert!(m.coset_members(3).unwrap().len() == 2);
    }

    #[test]
    fn abelian_is_rejected() {
        let c = crate::constructions::cyclic(6).unwrap();
        assert!(matches!(QuotientModel::from_table(&c), Err(Error::AbelianGroup(_))));
        let g = gpns(2, 2, "").unwrap();
        assert!(matches!(QuotientModel::from_class2(&g, 16), Err(Error::AbelianGroup(_))));
    }
}
