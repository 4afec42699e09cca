//! Exact counts of RPS magmas and the brute-force enumerations they are checked against.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::{big_binomial, is_prime, require_admissible};
use crate::kset::{binomial, ksets, KSet};
use crate::limits;
use crate::magma::Pointing;
use crate::{Error, Result};

/// The coefficient of `(x_1 ⋯ x_m)^(C(m,k)/m)` in `Π_{|S|=k} Σ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSpec {
    pub m: usize,
    pub k: usize,
    /// Per-element target exponent `C(m,k)/m`.
    pub exponent: usize,
}

impl CoefficientSpec {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m == 0 || k == 0 || k > m {
            return Err(Error::DomainError(format!("need 1 <= k <= m, got m={m}, k={k}")));
        }
        let total = binomial(m, k);
        if !total.is_multiple_of(m) {
            return Err(Error::NotDivisible { divisor: m as u64, value: total.to_string() });
        }
        Ok(CoefficientSpec { m, k, exponent: total / m })
    }

    /// Ways to pick one member from every `k`-set so each element is picked `exponent` times.
    pub fn coefficient(&self) -> Result<BigUint> {
        let (m, s) = (self.m, self.exponent);
        let sets: Vec<KSet> = ksets(m, self.k).collect();
        let states = (sets.len() as u128).saturating_mul((s as u128 + 1).saturating_pow(m as u32));
        limits::check("coefficient state space", states, limits::search_cap())?;
        let radix = s as u64 + 1;
        // remaining quotas packed in base s+1, element 0 least significant
        let start: u64 = (0..m).fold(0, |acc, _| acc * radix + s as u64);
        let weights: Vec<u64> = (0..m).map(|x| radix.pow(x as u32)).collect();
        // how many of the sets from index i on contain x
        let mut later = vec![vec![0usize; m]; sets.len() + 1];
        for i in (0..sets.len()).rev() {
            later[i] = later[i + 1].clone();
            for x in sets[i].iter() {
                later[i][x] += 1;
            }
        }
        let mut memo: HashMap<(usize, u64), BigUint> = HashMap::new();
        Ok(coefficient_rec(0, start, &sets, &weights, radix, &later, &mut memo))
    }
}

fn coefficient_rec(
    i: usize,
    quotas: u64,
    sets: &[KSet],
    weights: &[u64],
    radix: u64,
    later: &[Vec<usize>],
    memo: &mut HashMap<(usize, u64), BigUint>,
) -> BigUint {
    if i == sets.len() {
        return if quotas == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if let Some(v) = memo.get(&(i, quotas)) {
        return v.clone();
    }
    let quota = |x: usize| (quotas / weights[x]) % radix;
    if (0..weights.len()).any(|x| quota(x) as usize > later[i][x]) {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    for x in sets[i].iter() {
        if quota(x) > 0 {
            total += coefficient_rec(i + 1, quotas - weights[x], sets, weights, radix, later, memo);
        }
    }
    memo.insert((i, quotas), total.clone());
    total
}

/// Per-`k` factors of `|PRPS(m, n)|`: `Π_ℓ C(C(m,k) - ℓs, s)` with `s = C(m,k)/m`.
pub fn prps_factors(m: usize, n: usize) -> Result<Vec<BigUint>> {
    require_admissible(m, n)?;
    Ok((1..=n)
        .map(|k| {
            let total = binomial(m, k) as u64;
            let s = total / m as u64;
            (0..m as u64).map(|l| big_binomial(total - l * s, s)).product()
        })
        .collect())
}

/// `|PRPS(m, n)|`.
pub fn count_prps(m: usize, n: usize) -> Result<BigUint> {
    Ok(prps_factors(m, n)?.into_iter().product())
}

/// Per-`k` factors `k^(C(m,k)/m)` of `|RPS(G, n)|`.
pub fn regular_factors(m: usize, n: usize) -> Result<Vec<BigUint>> {
    require_admissible(m, n)?;
    Ok((1..=n).map(|k| BigUint::from(k).pow((binomial(m, k) / m) as u32)).collect())
}

/// `|RPS(G, n)|` for any group `G` of order `m`.
pub fn count_regular_rps(m: usize, n: usize) -> Result<BigUint> {
    Ok(regular_factors(m, n)?.into_iter().product())
}

/// Per-`k` coefficient factors of `|RPS(m, n)|`.
pub fn rps_factors(m: usize, n: usize) -> Result<Vec<BigUint>> {
    require_admissible(m, n)?;
    (1..=n).map(|k| CoefficientSpec::new(m, k)?.coefficient()).collect()
}

/// `|RPS(m, n)|`; the strata are independent, so the count is the product of per-`k` coefficients.
pub fn count_rps(m: usize, n: usize) -> Result<BigUint> {
    Ok(rps_factors(m, n)?.into_iter().product())
}

/// Isomorphism classes of `(ℤ_p)_{p-1}(λ)`: `|sgn_{p-1}(ℤ_p)| / (p - 1)`.
///
/// Every such magma has automorphism group exactly the translations, so an isomorphism
/// between two of them normalizes `ℤ_p` and is affine, `x ↦ ax + b`. Translations fix every
/// `λ` and no multiplier `a ≠ 1` fixes any, so each class holds `p - 1` sign functions.
pub fn count_iso_classes_max_arity_cyclic(p: usize) -> Result<BigUint> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let (q, r) = count_regular_rps(p, p - 1)?.div_rem(&BigUint::from(p - 1));
    debug_assert!(r.is_zero());
    Ok(q)
}

struct Brute<'a> {
    m: usize,
    sets: Vec<KSet>,
    winners: Vec<usize>,
    quotas: Vec<Vec<usize>>,
    conservative: bool,
    count: u64,
    nodes: u64,
    cap: u64,
    visit: Option<&'a mut dyn FnMut(&Pointing)>,
    arity: usize,
}

impl Brute<'_> {
    fn walk(&mut self, i: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::CapExceeded {
                what: "brute-force search nodes",
                size: self.nodes as u128,
                cap: self.cap as u128,
            });
        }
        if i == self.sets.len() {
            self.count += 1;
            if let Some(visit) = self.visit.as_mut() {
                let values = (1..=self.arity)
                    .scan(0, |offset, k| {
                        let len = binomial(self.m, k);
                        let row = self.winners[*offset..*offset + len].to_vec();
                        *offset += len;
                        Some(row)
                    })
                    .collect();
                visit(&Pointing::new(self.m, self.arity, values)?);
            }
            return Ok(());
        }
        let k = self.sets[i].len();
        let options: Vec<usize> =
            if self.conservative { self.sets[i].elements().to_vec() } else { (0..self.m).collect() };
        for x in options {
            if self.quotas[k - 1][x] == 0 {
                continue;
            }
            self.quotas[k - 1][x] -= 1;
            self.winners[i] = x;
            self.walk(i + 1)?;
            self.quotas[k - 1][x] += 1;
        }
        Ok(())
    }
}

fn brute(m: usize, n: usize, conservative: bool, visit: Option<&mut dyn FnMut(&Pointing)>) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(Error::DomainError("order and arity must be positive".into()));
    }
    if m <= n {
        return Ok(0);
    }
    let mut quotas = Vec::with_capacity(n);
    for k in 1..=n {
        let total = binomial(m, k);
        if !total.is_multiple_of(m) {
            return Ok(0);
        }
        quotas.push(vec![total / m; m]);
    }
    let sets: Vec<KSet> = (1..=n).flat_map(|k| ksets(m, k)).collect();
    let mut b = Brute {
        m,
        winners: vec![0; sets.len()],
        sets,
        quotas,
        conservative,
        count: 0,
        nodes: 0,
        cap: limits::search_cap(),
        visit,
        arity: n,
    };
    b.walk(0)?;
    Ok(b.count)
}

/// Counts strongly fair, essentially polyadic, nondegenerate tables by searching pointings
/// with per-stratum quotas and unrestricted winners.
pub fn brute_enumerate_prps(m: usize, n: usize, visit: Option<&mut dyn FnMut(&Pointing)>) -> Result<u64> {
    brute(m, n, false, visit)
}

/// As [`brute_enumerate_prps`] with each winner drawn from its own set.
pub fn brute_enumerate_rps(m: usize, n: usize, visit: Option<&mut dyn FnMut(&Pointing)>) -> Result<u64> {
    brute(m, n, true, visit)
}

/// Splits of an `s`-set into `m` blocks of equal size, counted one by one.
pub fn brute_regular_partitions(m: usize, s: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::DomainError("cannot split into zero blocks".into()));
    }
    if !s.is_multiple_of(m) {
        return Err(Error::NotDivisible { divisor: m as u64, value: s.to_string() });
    }
    fn walk(used: &mut [bool], block: usize, nodes: &mut u64, cap: u64) -> Result<u64> {
        *nodes += 1;
        limits::check("brute-force search nodes", *nodes as u128, cap)?;
        // the least free element opens the next block
        let Some(first) = used.iter().position(|u| !u) else { return Ok(1) };
        used[first] = true;
        let free: Vec<usize> = (first + 1..used.len()).filter(|&x| !used[x]).collect();
        let mut total = 0;
        for rest in ksets(free.len(), block - 1) {
            rest.iter().for_each(|i| used[free[i]] = true);
            total += walk(used, block, nodes, cap)?;
            rest.iter().for_each(|i| used[free[i]] = false);
        }
        used[first] = false;
        Ok(total)
    }
    walk(&mut vec![false; s], s / m, &mut 0, limits::search_cap())
}

/// Isomorphism classes of `(ℤ_p)_{p-1}(λ)`, found by pairwise isomorphism search.
pub fn brute_iso_classes_max_arity_cyclic(p: usize) -> Result<u64> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let group = crate::FiniteGroup::cyclic(p)?;
    let mut reps: Vec<crate::FiniteMagma> = Vec::new();
    for (i, lambda) in crate::construct::enumerate_sign_functions(&group, p - 1)?.enumerate() {
        limits::check("sign functions searched", i as u128, limits::search_cap())?;
        let a = crate::construct::build_regular(&group, p - 1, &lambda)?;
        if !reps.iter().any(|r| !crate::analysis::iso::isomorphisms(r, &a, Some(1)).is_empty()) {
            reps.push(a);
        }
    }
    Ok(reps.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn formula_values() {
        assert_eq!(count_prps(3, 2).unwrap(), big(36));
        assert_eq!(count_prps(5, 2).unwrap(), big(13_608_000));
        assert_eq!(count_prps(4, 1).unwrap(), big(24));
        assert_eq!(count_regular_rps(3, 2).unwrap(), big(2));
        assert_eq!(count_regular_rps(5, 3).unwrap(), big(36));
        assert_eq!(count_rps(3, 2).unwrap(), big(2));
        assert_eq!(count_rps(5, 2).unwrap(), big(24));
        assert_eq!(count_iso_classes_max_arity_cyclic(3).unwrap(), big(1));
        assert_eq!(count_iso_classes_max_arity_cyclic(5).unwrap(), big(36));
        assert_eq!(count_iso_classes_max_arity_cyclic(7).unwrap(), big(248_832_000));
        assert!(matches!(count_iso_classes_max_arity_cyclic(9), Err(Error::NotPrime(9))));
        assert!(matches!(count_prps(4, 2), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn brute_small() {
        assert_eq!(brute_enumerate_prps(3, 2, None).unwrap(), 36);
        assert_eq!(brute_enumerate_rps(3, 2, None).unwrap(), 2);
        assert_eq!(brute_enumerate_prps(4, 2, None).unwrap(), 0);
        assert_eq!(brute_enumerate_prps(3, 1, None).unwrap(), 6);
        let mut seen = Vec::new();
        brute_enumerate_rps(3, 2, Some(&mut |p: &Pointing| seen.push(p.clone()))).unwrap();
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn brute_partitions_and_classes() {
        assert_eq!(brute_regular_partitions(3, 6).unwrap(), 15);
        assert_eq!(brute_regular_partitions(5, 10).unwrap(), 945);
        assert_eq!(brute_regular_partitions(1, 4).unwrap(), 1);
        assert!(matches!(brute_regular_partitions(4, 6), Err(Error::NotDivisible { .. })));
        assert_eq!(brute_iso_classes_max_arity_cyclic(3).unwrap(), 1);
        assert_eq!(brute_iso_classes_max_arity_cyclic(5).unwrap(), 36);
    }

    #[test]
    fn coefficient_spec() {
        assert!(matches!(CoefficientSpec::new(4, 2), Err(Error::NotDivisible { .. })));
        assert_eq!(CoefficientSpec::new(5, 2).unwrap().exponent, 2);
        assert_eq!(CoefficientSpec::new(7, 1).unwrap().coefficient().unwrap(), big(1));
    }
}
