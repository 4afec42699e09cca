//! Number-theoretic gates and exact partition counts.
//!
//! A strongly fair, essentially polyadic `n`-ary game on `m` items exists
//! exactly when `m != 1` and `n` is below the least prime divisor of `m`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact `C(n, k)`.
pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn big_factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && least_prime_divisor(n).is_ok_and(|p| p == n)
}

/// Smallest prime dividing `m`, by trial division.
pub fn least_prime_divisor(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::DomainError(format!("least prime divisor of {m} is undefined")));
    }
    if m.is_multiple_of(2) {
        return Ok(2);
    }
    let mut d = 3;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return Ok(d);
        }
        d += 2;
    }
    Ok(m)
}

/// Least prime strictly greater than `n`.
pub fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub m: u64,
    pub n: u64,
    /// `None` for `m = 1`.
    pub least_prime_divisor: Option<u64>,
    pub admissible: bool,
}

pub fn admissible(m: u64, n: u64) -> AdmissibilityVerdict {
    let lpd = least_prime_divisor(m).ok();
    AdmissibilityVerdict { m, n, least_prime_divisor: lpd, admissible: lpd.is_some_and(|p| n < p) }
}

pub fn is_admissible(m: usize, n: usize) -> bool {
    admissible(m as u64, n as u64).admissible
}

pub(crate) fn require_admissible(m: usize, n: usize) -> Result<()> {
    if is_admissible(m, n) {
        Ok(())
    } else {
        Err(Error::NotAdmissible { m, n })
    }
}

/// `gcd{C(m, k) : 1 <= k <= n}` for `m > n >= 1`.
///
/// The value is cross-checked against the closed form
/// `m / lcm{k : 1 <= k <= n, k | m}`; a disagreement is reported as
/// [`Error::FormulaMismatch`].
pub fn gcd_of_binomials(m: u64, n: u64) -> Result<BigUint> {
    if n == 0 || m <= n {
        return Err(Error::DomainError(format!("gcd of binomials needs m > n >= 1, got m={m}, n={n}")));
    }
    let direct = (1..=n).fold(BigUint::zero(), |acc, k| acc.gcd(&big_binomial(m, k)));
    let lcm = (1..=n).filter(|k| m.is_multiple_of(*k)).fold(1u64, |acc, k| acc.lcm(&k));
    let closed = BigUint::from(m / lcm);
    if !m.is_multiple_of(lcm) || closed != direct {
        return Err(Error::FormulaMismatch(format!(
            "d({m},{n}): gcd gives {direct}, closed form gives {m}/{lcm}"
        )));
    }
    Ok(direct)
}

/// Number of ways to split an `s`-set into `m` unlabeled blocks of size `s/m`:
/// `(1/m!) Π_{l=0}^{m-1} C(s - l·s/m, s/m)`.
pub fn count_regular_partitions(m: u64, s: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::DomainError("cannot split into zero blocks".into()));
    }
    if !s.is_multiple_of(m) {
        return Err(Error::NotDivisible { divisor: m, value: s.to_string() });
    }
    let (ordered, fact) = (ordered_regular_partitions(m, s), big_factorial(m));
    let (q, r) = ordered.div_rem(&fact);
    assert!(r.is_zero(), "ordered partition count must be divisible by m!");
    Ok(q)
}

/// Ordered version of [`count_regular_partitions`]: the bare product.
pub fn ordered_regular_partitions(m: u64, s: u64) -> BigUint {
    let block = s / m;
    (0..m).map(|l| big_binomial(s - l * block, block)).product()
}

/// `B(m, k)`: regular partitions of the `C(m, k)` `k`-sets of an `m`-set into `m` blocks.
pub fn count_kset_partitions(m: u64, k: u64) -> Result<BigUint> {
    let s = big_binomial(m, k);
    let s: u64 = s
        .try_into()
        .map_err(|_| Error::TooLarge(format!("C({m},{k}) does not fit in 64 bits")))?;
    count_regular_partitions(m, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_helpers() {
        assert_eq!(least_prime_divisor(9).unwrap(), 3);
        assert_eq!(least_prime_divisor(35).unwrap(), 5);
        assert_eq!(least_prime_divisor(7).unwrap(), 7);
        assert!(least_prime_divisor(1).is_err());
        assert_eq!(next_prime_after(2), 3);
        assert_eq!(next_prime_after(3), 5);
        assert_eq!(next_prime_after(5), 7);
        assert_eq!(next_prime_after(1), 2);
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible(3, 2).admissible);
        assert!(!admissible(4, 2).admissible);
        assert!(admissible(25, 4).admissible);
        assert!(!admissible(1, 1).admissible);
        assert_eq!(admissible(1, 1).least_prime_divisor, None);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_of_binomials(7, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(gcd_of_binomials(10, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(gcd_of_binomials(12, 1).unwrap(), BigUint::from(12u32));
        assert!(gcd_of_binomials(3, 3).is_err());
    }

    #[test]
    fn partition_examples() {
        assert_eq!(count_regular_partitions(3, 6).unwrap(), BigUint::from(15u32));
        assert_eq!(count_regular_partitions(4, 4).unwrap(), BigUint::from(1u32));
        assert_eq!(count_regular_partitions(1, 9).unwrap(), BigUint::from(1u32));
        assert!(matches!(count_regular_partitions(4, 6), Err(Error::NotDivisible { .. })));
        assert_eq!(count_kset_partitions(3, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_kset_partitions(5, 2).unwrap(), BigUint::from(945u32));
        assert_eq!(count_kset_partitions(3, 1).unwrap(), BigUint::from(1u32));
        assert!(count_kset_partitions(4, 2).is_err());
    }
}
