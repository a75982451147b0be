use std::fmt;

use crate::error::{Error, Result};

/// A vector in F_p^n; entries are residues in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecFp(pub Vec<u32>);

impl VecFp {
    pub fn zeros(n: usize) -> Self {
        VecFp(vec![0; n])
    }

    /// The standard basis vector e_i, 0-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        VecFp(v)
    }

    pub fn from_slice(p: u32, coords: &[i64]) -> Self {
        VecFp(coords.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// 0-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn scaled(&self, k: u32, p: u32) -> VecFp {
        VecFp(self.0.iter().map(|&c| mul(c, k, p)).collect())
    }

    pub fn add(&self, other: &VecFp, p: u32) -> VecFp {
        VecFp(self.0.iter().zip(&other.0).map(|(&a, &b)| (a + b) % p).collect())
    }

    /// Position in lexicographic order with the first coordinate most significant.
    pub fn lex_index(&self, p: u32) -> usize {
        self.0.iter().fold(0usize, |acc, &c| acc * p as usize + c as usize)
    }

    pub fn from_lex_index(mut index: usize, n: usize, p: u32) -> Self {
        let mut coords = vec![0u32; n];
        for slot in coords.iter_mut().rev() {
            *slot = (index % p as usize) as u32;
            index /= p as usize;
        }
        VecFp(coords)
    }

    /// `x1*x3^2` style word for the product ∏ x_i^{a_i}; `1` for zero.
    pub fn word(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, a)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for VecFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[inline]
pub(crate) fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn sub(a: u32, b: u32, p: u32) -> u32 {
    (a + p - b) % p
}

pub(crate) fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

/// Reduces `rows` in place to reduced row-echelon form and drops zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let scale = inv(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mul(*x, scale, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..ncols {
                    let delta = mul(f, rows[r][j], p);
                    rows[i][j] = sub(rows[i][j], delta, p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of F_p^n held by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceFp {
    p: u32,
    n: usize,
    basis: Vec<Vec<u32>>,
}

impl SubspaceFp {
    pub fn zero(p: u32, n: usize) -> Self {
        SubspaceFp { p, n, basis: Vec::new() }
    }

    pub fn full(p: u32, n: usize) -> Self {
        Self::span(p, n, (0..n).map(|i| VecFp::unit(n, i)))
    }

    pub fn span(p: u32, n: usize, vectors: impl IntoIterator<Item = VecFp>) -> Self {
        let mut rows: Vec<Vec<u32>> = vectors
            .into_iter()
            .map(|v| {
                debug_assert_eq!(v.len(), n);
                v.0
            })
            .collect();
        rref(&mut rows, p);
        SubspaceFp { p, n, basis: rows }
    }

    /// {x : r·x = 0 for every constraint row r}.
    pub fn nullspace(p: u32, n: usize, constraints: Vec<Vec<u32>>) -> Self {
        let mut rows = constraints;
        let pivots = rref(&mut rows, p);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let basis = free.iter().map(|&f| {
            let mut v = vec![0u32; n];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = sub(0, row[f], p);
            }
            VecFp(v)
        });
        Self::span(p, n, basis)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl ExactSizeIterator<Item = VecFp> + '_ {
        self.basis.iter().map(|b| VecFp(b.clone()))
    }

    pub fn basis_rows(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &VecFp) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut rest = v.0.clone();
        for row in &self.basis {
            let pc = row.iter().position(|&x| x != 0).expect("rref rows are nonzero");
            let f = rest[pc];
            if f != 0 {
                for j in 0..self.n {
                    rest[j] = sub(rest[j], mul(f, row[j], self.p), self.p);
                }
            }
        }
        Ok(rest.iter().all(|&x| x == 0))
    }

    pub fn is_subspace_of(&self, other: &SubspaceFp) -> bool {
        self.dim() <= other.dim()
            && self
                .basis()
                .all(|b| other.contains(&b).unwrap_or(false))
    }

    pub fn is_proper_subspace_of(&self, other: &SubspaceFp) -> bool {
        self.dim() < other.dim() && self.is_subspace_of(other)
    }

    /// Every vector of the subspace, in no particular order.
    pub fn elements(&self) -> Vec<VecFp> {
        let d = self.dim();
        let count = (self.p as usize).pow(d as u32);
        (0..count)
            .map(|idx| {
                let coeffs = VecFp::from_lex_index(idx, d, self.p);
                let mut v = vec![0u32; self.n];
                for (c, row) in coeffs.0.iter().zip(&self.basis) {
                    for j in 0..self.n {
                        v[j] = (v[j] + mul(*c, row[j], self.p)) % self.p;
                    }
                }
                VecFp(v)
            })
            .collect()
    }

    pub fn intersection(&self, other: &SubspaceFp) -> SubspaceFp {
        // x ∈ A ∩ B ⇔ x annihilated by A^⊥ and B^⊥.
        let mut constraints = self.orthogonal_constraints();
        constraints.extend(other.orthogonal_constraints());
        SubspaceFp::nullspace(self.p, self.n, constraints)
    }

    fn orthogonal_constraints(&self) -> Vec<Vec<u32>> {
        SubspaceFp::nullspace(self.p, self.n, self.basis.clone())
            .basis
    }
}

impl fmt::Debug for SubspaceFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_nullspace(p: u32, n: usize, rows: &[Vec<u32>]) -> Vec<VecFp> {
        (0..(p as usize).pow(n as u32))
            .map(|i| VecFp::from_lex_index(i, n, p))
            .filter(|v| {
                rows.iter().all(|r| {
                    r.iter().zip(&v.0).fold(0u32, |acc, (&a, &b)| (acc + mul(a, b, p)) % p) == 0
                })
            })
            .collect()
    }

    #[test]
    fn inverse_mod_p() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
    }

    #[test]
    fn nullspace_of_single_row() {
        let s = SubspaceFp::nullspace(3, 3, vec![vec![1, 1, 0]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&VecFp(vec![1, 2, 0])).unwrap());
        assert!(s.contains(&VecFp(vec![0, 0, 1])).unwrap());
        assert!(!s.contains(&VecFp(vec![1, 1, 0])).unwrap());
    }

    #[test]
    fn span_is_canonical() {
        let a = SubspaceFp::span(5, 3, [VecFp(vec![1, 2, 0]), VecFp(vec![0, 1, 4])]);
        let b = SubspaceFp::span(5, 3, [VecFp(vec![1, 3, 4]), VecFp(vec![2, 4, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn contains_rejects_wrong_length() {
        let s = SubspaceFp::full(2, 3);
        assert!(matches!(
            s.contains(&VecFp(vec![1, 0])),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn words() {
        assert_eq!(VecFp(vec![1, 0, 2, 0]).word(), "x1*x3^2");
        assert_eq!(VecFp(vec![0, 0]).word(), "1");
    }

    proptest! {
        #[test]
        fn nullspace_matches_enumeration(
            p in prop::sample::select(vec![2u32, 3, 5]),
            raw in prop::collection::vec(prop::collection::vec(0u32..5, 4), 0..4),
        ) {
            let rows: Vec<Vec<u32>> = raw.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
            let ns = SubspaceFp::nullspace(p, 4, rows.clone());
            let mut brute = brute_nullspace(p, 4, &rows);
            let mut got = ns.elements();
            brute.sort();
            got.sort();
            prop_assert_eq!(got, brute);
        }

        #[test]
        fn intersection_matches_enumeration(
            a in prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..3),
            b in prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..3),
        ) {
            let sa = SubspaceFp::span(3, 3, a.into_iter().map(VecFp));
            let sb = SubspaceFp::span(3, 3, b.into_iter().map(VecFp));
            let both = sa.intersection(&sb);
            let mut expected: Vec<VecFp> = sa.elements().into_iter().filter(|v| sb.contains(v).unwrap()).collect();
            let mut got = both.elements();
            expected.sort();
            got.sort();
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn lex_index_round_trip(idx in 0usize..625) {
            let v = VecFp::from_lex_index(idx, 4, 5);
            prop_assert_eq!(v.lex_index(5), idx);
        }
    }
}
