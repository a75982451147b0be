//! The class-2 groups G(p, n, S) and the F_p linear algebra behind them.

mod class2;
mod linalg;
mod predict;

pub use class2::{
    Class2Group, EdgeSet, TransversalVertex, DEFAULT_ENUMERATION_LIMIT, DEFAULT_EXPANSION_LIMIT,
};
pub use linalg::{SubspaceFp, VecFp};
pub use predict::{predict_vertex_kind, PredictedRole, VertexKind, VertexKindPrediction};

pub(crate) use linalg::{inv, mul, sub};

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, k)` with `n = p^k`, `k ≥ 1`; `None` for 1 and non prime powers.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_against_sieve() {
        let mut sieve = [true; 200];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..200 {
            if sieve[i] {
                for j in (i * i..200).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "{n}");
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(6561), Some((3, 8)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(49), Some((7, 2)));
    }
}
