use super::tables::{guard, metacyclic, require_prime_power};
use crate::error::{Error, Result};
use crate::fp::{inv, mul, sub};
use crate::group::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelKind {
    Cyclic,
    Elementary,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Frobenius group with the given kernel of order `kernel_order` and a
/// cyclic complement of order `d`.
///
/// Cyclic kernels are acted on by a unit `u` of multiplicative order `d`
/// (the least suitable one unless `seed` names it). Elementary kernels F_p^a
/// are acted on by a power of the companion matrix of a primitive
/// polynomial. Either way every nonidentity power of the action is checked
/// to be fixed-point-free.
pub fn frobenius(kind: KernelKind, kernel_order: usize, d: usize, seed: Option<u64>) -> Result<GroupTable> {
    if d < 2 || kernel_order < 2 {
        return Err(Error::InvalidParameters(
            "Frobenius groups need kernel and complement of order at least 2".into(),
        ));
    }
    guard(kernel_order as u128 * d as u128, "Frobenius group")?;
    match kind {
        KernelKind::Cyclic => cyclic_kernel(kernel_order, d, seed),
        KernelKind::Elementary => elementary_kernel(kernel_order, d),
    }
}

fn order_mod(u: u64, m: u64) -> Option<u64> {
    if gcd(u, m) != 1 {
        return None;
    }
    let mut x = u % m;
    for k in 1..=m {
        if x == 1 % m {
            return Some(k);
        }
        x = x * u % m;
    }
    None
}

fn fixed_point_free_unit(u: u64, d: u64, m: u64) -> bool {
    let mut x = u % m;
    for _ in 1..d {
        // x·k ≡ k has only k = 0 iff x − 1 is a unit.
        if gcd((x + m - 1) % m, m) != 1 {
            return false;
        }
        x = x * u % m;
    }
    true
}

fn cyclic_kernel(m: usize, d: usize, seed: Option<u64>) -> Result<GroupTable> {
    let (mm, dd) = (m as u64, d as u64);
    let ok = |u: u64| order_mod(u, mm) == Some(dd) && fixed_point_free_unit(u, dd, mm);
    let u = match seed {
        Some(u) if ok(u % mm) => u % mm,
        Some(u) => {
            return Err(Error::InvalidParameters(format!(
                "x -> x^{u} is not a fixed-point-free automorphism of order {d} of C{m}"
            )))
        }
        None => (2..mm).find(|&u| ok(u)).ok_or_else(|| {
            Error::InvalidParameters(format!("C{m} has no fixed-point-free automorphism of order {d}"))
        })?,
    };
    let name = format!("F{}[C{m}:C{d}]", m * d);
    metacyclic(name, m, d, u as usize, 0)
}

type Matrix = Vec<Vec<u32>>;

fn mat_mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(0, |acc, k| (acc + mul(a[i][k], b[k][j], p)) % p))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

fn mat_pow(m: &Matrix, mut e: u64, p: u32) -> Matrix {
    let mut r = identity(m.len());
    let mut b = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            r = mat_mul(&r, &b, p);
        }
        b = mat_mul(&b, &b, p);
        e >>= 1;
    }
    r
}

fn is_singular(m: &Matrix, p: u32) -> bool {
    let mut rows = m.clone();
    let n = rows.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..n).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let iv = inv(rows[rank][col], p);
        for r2 in 0..n {
            if r2 != rank && rows[r2][col] != 0 {
                let f = mul(rows[r2][col], iv, p);
                for c in 0..n {
                    rows[r2][c] = sub(rows[r2][c], mul(f, rows[rank][c], p), p);
                }
            }
        }
        rank += 1;
    }
    rank < n
}

/// Companion matrix of x^a + c_{a-1}x^{a-1} + ... + c_0 acting on columns.
fn companion(coeffs: &[u32], p: u32) -> Matrix {
    let a = coeffs.len();
    let mut m = vec![vec![0u32; a]; a];
    for i in 1..a {
        m[i][i - 1] = 1;
    }
    for (i, &c) in coeffs.iter().enumerate() {
        m[i][a - 1] = sub(0, c, p);
    }
    m
}

/// A matrix of multiplicative order p^a − 1 (a Singer cycle).
fn singer_cycle(p: u32, a: usize) -> Matrix {
    let q = (p as u64).pow(a as u32);
    for code in 0..q {
        let mut x = code;
        let coeffs: Vec<u32> = (0..a)
            .map(|_| {
                let r = (x % p as u64) as u32;
                x /= p as u64;
                r
            })
            .collect();
        if coeffs[0] == 0 {
            continue;
        }
        let m = companion(&coeffs, p);
        if mat_pow(&m, q - 1, p) != identity(a) {
            continue;
        }
        let mut prime_factors = Vec::new();
        let mut r = q - 1;
        let mut f = 2;
        while f * f <= r {
            if r.is_multiple_of(f) {
                prime_factors.push(f);
                while r.is_multiple_of(f) {
                    r /= f;
                }
            }
            f += 1;
        }
        if r > 1 {
            prime_factors.push(r);
        }
        if prime_factors.iter().all(|&f| mat_pow(&m, (q - 1) / f, p) != identity(a)) {
            return m;
        }
    }
    unreachable!("primitive polynomials exist over every finite field")
}

fn elementary_kernel(kernel_order: usize, d: usize) -> Result<GroupTable> {
    let (p, a) = require_prime_power(kernel_order)?;
    let q = kernel_order as u64;
    if !(q - 1).is_multiple_of(d as u64) {
        return Err(Error::InvalidParameters(format!(
            "complement order {d} does not divide {}",
            q - 1
        )));
    }
    let a = a as usize;
    let action = mat_pow(&singer_cycle(p, a), (q - 1) / d as u64, p);
    let mut powers = vec![identity(a)];
    for j in 1..d {
        let next = mat_mul(&powers[j - 1], &action, p);
        if is_singular(&sub_identity(&next, p), p) {
            return Err(Error::InvalidParameters(format!(
                "action of order {d} on F_{p}^{a} has fixed points"
            )));
        }
        powers.push(next);
    }
    let m = kernel_order;
    let pu = p as usize;
    let digits = |x: usize| -> Vec<u32> {
        let mut x = x;
        (0..a)
            .map(|_| {
                let r = (x % pu) as u32;
                x /= pu;
                r
            })
            .collect()
    };
    let undigits = |v: &[u32]| v.iter().rev().fold(0, |acc, &r| acc * pu + r as usize);
    let images: Vec<Vec<usize>> = powers
        .iter()
        .map(|mat| {
            (0..m)
                .map(|w| {
                    let wv = digits(w);
                    let out: Vec<u32> = (0..a)
                        .map(|i| (0..a).fold(0, |acc, k| (acc + mul(mat[i][k], wv[k], p)) % p))
                        .collect();
                    undigits(&out)
                })
                .collect()
        })
        .collect();
    let add: Vec<usize> = (0..m * m)
        .map(|k| {
            let (x, y) = (digits(k / m), digits(k % m));
            let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
            undigits(&s)
        })
        .collect();
    let name = format!("F{}[C{p}^{a}:C{d}]", m * d);
    GroupTable::from_fn(name, m * d, false, |x, y| {
        let (v, j) = (x % m, x / m);
        let (w, k) = (y % m, y / m);
        add[v * m + images[j][w]] + m * ((j + k) % d)
    })
}

fn sub_identity(m: &Matrix, p: u32) -> Matrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = sub(row[i], 1, p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kernel_is_fixed_point_free(g: &GroupTable, m: usize) {
        for c in m..g.order() {
            for k in 1..m {
                assert!(!g.commutes(c, k));
            }
        }
    }

    #[test]
    fn cyclic_kernels() {
        for (m, d, center) in [(9, 2, 1), (7, 2, 1), (7, 3, 1), (7, 6, 1)] {
            let g = frobenius(KernelKind::Cyclic, m, d, None).unwrap();
            let g = crate::group::load_cayley_table(&g.to_cayley_text(), true).unwrap();
            assert_eq!(g.order(), m * d);
            assert_eq!(g.center().len(), center);
            kernel_is_fixed_point_free(&g, m);
        }
        assert!(frobenius(KernelKind::Cyclic, 8, 2, None).is_err());
        assert!(frobenius(KernelKind::Cyclic, 7, 4, None).is_err());
        assert!(frobenius(KernelKind::Cyclic, 9, 2, Some(4)).is_err());
        assert!(frobenius(KernelKind::Cyclic, 9, 2, Some(8)).is_ok());
    }

    #[test]
    fn elementary_kernels() {
        let g = frobenius(KernelKind::Elementary, 9, 2, None).unwrap();
        let g = crate::group::load_cayley_table(&g.to_cayley_text(), true).unwrap();
        assert!(g.center().is_trivial());
        assert!((1..9).all(|x| g.element_order(x) == 3));
        for (q, d) in [(9, 4), (9, 8), (8, 7), (4, 3), (25, 3)] {
            let g = frobenius(KernelKind::Elementary, q, d, None).unwrap();
            assert!(g.center().is_trivial(), "{q} {d}");
            kernel_is_fixed_point_free(&g, q);
        }
        assert!(frobenius(KernelKind::Elementary, 9, 3, None).is_err());
        assert!(frobenius(KernelKind::Elementary, 12, 2, None).is_err());
    }
}
