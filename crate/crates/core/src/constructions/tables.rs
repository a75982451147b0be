use crate::error::{Error, Result};
use crate::fp::prime_power;
use crate::group::{GroupTable, DEFAULT_TABLE_LIMIT};

/// Largest table any constructor here will build.
pub const CONSTRUCTION_LIMIT: usize = DEFAULT_TABLE_LIMIT;

pub(crate) fn guard(order: u128, what: &str) -> Result<usize> {
    if order > CONSTRUCTION_LIMIT as u128 {
        return Err(Error::InvalidParameters(format!(
            "{what} has order {order}, above the table limit {CONSTRUCTION_LIMIT}; \
             use the structured G(p,n,S) representation instead"
        )));
    }
    Ok(order as usize)
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameters("cyclic group of order 0".into()));
    }
    let n = guard(n as u128, "cyclic group")?;
    GroupTable::from_fn(format!("C{n}"), n, false, |a, b| (a + b) % n)
}

/// ⟨x, y | x^n, y^d = x^s, y x y⁻¹ = x^t⟩. Element x^i y^a has index
/// `i + n·a`. Requires t^d ≡ 1 and t·s ≡ s (mod n).
pub fn metacyclic(name: impl Into<String>, n: usize, d: usize, t: usize, s: usize) -> Result<GroupTable> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameters("metacyclic orders must be positive".into()));
    }
    let (nn, tt, ss) = (n as u64, t as u64 % n as u64, s as u64 % n as u64);
    if pow_mod(tt, d as u64, nn) != 1 % nn || (tt * ss) % nn != ss {
        return Err(Error::InvalidParameters(format!(
            "x -> x^{t} with y^{d} = x^{s} does not define an extension of C{n} by C{d}"
        )));
    }
    let order = guard(n as u128 * d as u128, "metacyclic group")?;
    let powers: Vec<usize> = (0..d).map(|a| pow_mod(tt, a as u64, nn) as usize).collect();
    GroupTable::from_fn(name, order, false, |x, y| {
        let (i, a) = (x % n, x / n);
        let (k, b) = (y % n, y / n);
        let wrap = if a + b >= d { s } else { 0 };
        (i + k * powers[a] + wrap) % n + n * ((a + b) % d)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoGroupKind {
    Dihedral,
    Semidihedral,
    Quaternion,
}

/// Dihedral, semidihedral and generalized quaternion groups of order 2^k.
pub fn two_group(kind: TwoGroupKind, order: usize) -> Result<GroupTable> {
    let min = if kind == TwoGroupKind::Semidihedral { 16 } else { 8 };
    if order < min || !order.is_power_of_two() {
        return Err(Error::InvalidParameters(format!(
            "{kind:?} groups need order a power of 2, at least {min}; got {order}"
        )));
    }
    let n = order / 2;
    let (name, t, s) = match kind {
        TwoGroupKind::Dihedral => (format!("D{order}"), n - 1, 0),
        TwoGroupKind::Semidihedral => (format!("SD{order}"), n / 2 - 1, 0),
        TwoGroupKind::Quaternion => (format!("Q{order}"), n - 1, n / 2),
    };
    metacyclic(name, n, 2, t, s)
}

/// Dihedral group of order 2m for any m ≥ 3.
pub fn dihedral(order: usize) -> Result<GroupTable> {
    if order < 6 || order % 2 == 1 {
        return Err(Error::InvalidParameters(format!("dihedral group of order {order}")));
    }
    metacyclic(format!("D{order}"), order / 2, 2, order / 2 - 1, 0)
}

/// A ⋊ C₂ with the generator acting by inversion, A = C_{m₁} × ... × C_{m_r}.
pub fn generalized_dihedral(factors: &[usize]) -> Result<GroupTable> {
    if factors.is_empty() || factors.iter().any(|&m| m < 2) {
        return Err(Error::InvalidParameters("abelian factors must be at least 2".into()));
    }
    let a: u128 = factors.iter().map(|&m| m as u128).product();
    let half = guard(a, "generalized dihedral group")?;
    let order = guard(2 * a, "generalized dihedral group")?;
    let decode = |x: usize| -> Vec<usize> {
        let mut x = x;
        factors
            .iter()
            .map(|&m| {
                let r = x % m;
                x /= m;
                r
            })
            .collect()
    };
    let encode = |v: &[usize]| v.iter().zip(factors).rev().fold(0, |acc, (&r, &m)| acc * m + r);
    let name = format!(
        "GD{order}[{}]",
        factors.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x")
    );
    GroupTable::from_fn(name, order, false, |x, y| {
        let (u, e) = (decode(x % half), x / half);
        let v = decode(y % half);
        let w: Vec<usize> = u
            .iter()
            .zip(&v)
            .zip(factors)
            .map(|((&a, &b), &m)| if e == 0 { (a + b) % m } else { (a + m - b) % m })
            .collect();
        encode(&w) + half * ((e + y / half) % 2)
    })
}

/// Heisenberg group of order p^(2k+1): (a, c)(b, d) = (a + b, c + d + Σ a_{2i-1} b_{2i}).
pub fn heisenberg(p: u32, k: usize) -> Result<GroupTable> {
    if !crate::fp::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(Error::InvalidParameters("heisenberg needs k >= 1".into()));
    }
    let p = p as usize;
    let order = guard((p as u128).pow(2 * k as u32 + 1), "heisenberg group")?;
    let xs = order / p;
    let digits = |x: usize| -> Vec<usize> {
        let mut x = x;
        (0..2 * k)
            .map(|_| {
                let r = x % p;
                x /= p;
                r
            })
            .collect()
    };
    GroupTable::from_fn(format!("Heis({p},{k})"), order, false, |x, y| {
        let (a, c) = (digits(x % xs), x / xs);
        let (b, d) = (digits(y % xs), y / xs);
        let mut sum = 0;
        let mut pos = 1;
        for i in 0..2 * k {
            sum += ((a[i] + b[i]) % p) * pos;
            pos *= p;
        }
        let twist: usize = (0..k).map(|i| a[2 * i] * b[2 * i + 1]).sum();
        sum + xs * ((c + d + twist) % p)
    })
}

/// Extraspecial group of order p³ with the given exponent (p or p²).
/// For p = 2 exponent 4 has two answers; `quaternion` picks Q₈ over D₈.
pub fn extraspecial(p: u32, exponent: u32, quaternion: bool) -> Result<GroupTable> {
    if !crate::fp::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let pu = p as usize;
    match (p, exponent) {
        (2, 4) if quaternion => two_group(TwoGroupKind::Quaternion, 8),
        (2, 4) => two_group(TwoGroupKind::Dihedral, 8),
        (_, e) if e == p && p > 2 => heisenberg(p, 1).map(|g| g.with_name(format!("E{}^{}", pu * pu * pu, p))),
        (_, e) if e == p * p && p > 2 => {
            metacyclic(format!("E{}^{}", pu * pu * pu, e), pu * pu, pu, pu + 1, 0)
        }
        _ => Err(Error::InvalidParameters(format!(
            "no extraspecial group of order {} and exponent {exponent}",
            pu * pu * pu
        ))),
    }
}

/// Confirms that `n` is a prime power and returns `(p, a)`.
pub(crate) fn require_prime_power(n: usize) -> Result<(u32, u32)> {
    prime_power(n as u64)
        .map(|(p, a)| (p as u32, a))
        .ok_or_else(|| Error::InvalidParameters(format!("{n} is not a prime power")))
}
