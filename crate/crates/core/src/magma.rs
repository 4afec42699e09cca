//! Finite `n`-ary magmas and the five selection-game properties.

use std::collections::HashMap;

use crate::kset::{binomial, ksets, KSet};
use crate::limits;
use crate::perm::Permutation;
use crate::{Error, Result};

/// An order-`m`, arity-`n` operation table on `{0, .., m-1}`.
///
/// Entries are stored row-major with the first argument outermost:
/// `index(a_1, .., a_n) = Σ a_i · m^(n-i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteMagma {
    order: usize,
    arity: usize,
    table: Vec<usize>,
}

/// Calls `visit(index, tuple)` for every tuple of `{0..m-1}^n` in table order.
pub(crate) fn for_each_tuple(m: usize, n: usize, mut visit: impl FnMut(usize, &[usize])) {
    if m == 0 {
        return;
    }
    let mut tuple = vec![0usize; n];
    let mut index = 0usize;
    loop {
        visit(index, &tuple);
        index += 1;
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < m {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

fn component_set(tuple: &[usize]) -> KSet {
    KSet::new(tuple.iter().copied())
}

/// Offsets of each `k`-stratum inside a flat array indexed by `(k, colex rank)`.
pub(crate) fn stratum_offsets(m: usize, n: usize) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(n + 1);
    let mut acc = 0;
    for k in 1..=n {
        offsets.push(acc);
        acc += binomial(m, k);
    }
    offsets.push(acc);
    offsets
}

impl FiniteMagma {
    /// Validates and wraps an operation table.
    pub fn new(order: usize, arity: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 || arity == 0 {
            return Err(Error::DomainError("order and arity must be positive".into()));
        }
        let expected = limits::checked_table_len(order, arity)?;
        if table.len() != expected {
            return Err(Error::LengthMismatch { expected, got: table.len() });
        }
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::EntryOutOfRange { position, value, order });
        }
        Ok(FiniteMagma { order, arity, table })
    }

    /// Tabulates `f` over every tuple.
    pub fn from_fn(order: usize, arity: usize, mut f: impl FnMut(&[usize]) -> usize) -> Result<Self> {
        if order == 0 || arity == 0 {
            return Err(Error::DomainError("order and arity must be positive".into()));
        }
        let len = limits::checked_table_len(order, arity)?;
        let mut table = Vec::with_capacity(len);
        for_each_tuple(order, arity, |_, t| table.push(f(t)));
        FiniteMagma::new(order, arity, table)
    }

    /// The one-element magma of the given arity.
    pub fn trivial(arity: usize) -> Self {
        FiniteMagma { order: 1, arity, table: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        args.iter().fold(0, |acc, &a| acc * self.order + a)
    }

    #[inline]
    pub fn apply(&self, args: &[usize]) -> usize {
        self.table[self.index(args)]
    }

    /// Decodes a table index back into its argument tuple.
    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.arity];
        for slot in out.iter_mut().rev() {
            *slot = index % self.order;
            index /= self.order;
        }
        out
    }

    /// Exhaustive scan for the five properties and the per-stratum counts.
    pub fn classify(&self) -> PropertyReport {
        let (m, n) = (self.order, self.arity);
        let offsets = stratum_offsets(m, n);
        let mut first: Vec<Option<usize>> = vec![None; offsets[n]];
        let mut per_k_counts = vec![vec![0u64; m]; n];
        let mut conservative = true;
        let mut essentially_polyadic = true;
        let mut multiplicity = vec![0usize; m];
        for_each_tuple(m, n, |idx, t| {
            let out = self.table[idx];
            let mut distinct = 0;
            for &a in t {
                if multiplicity[a] == 0 {
                    distinct += 1;
                }
                multiplicity[a] += 1;
            }
            if multiplicity[out] == 0 {
                conservative = false;
            }
            for &a in t {
                multiplicity[a] = 0;
            }
            per_k_counts[distinct - 1][out] += 1;
            if essentially_polyadic {
                let set = component_set(t);
                let slot = &mut first[offsets[distinct - 1] + set.rank()];
                match *slot {
                    None => *slot = Some(out),
                    Some(prev) if prev != out => essentially_polyadic = false,
                    Some(_) => {}
                }
            }
        });
        let all_equal = |v: &[u64]| v.windows(2).all(|w| w[0] == w[1]);
        let totals: Vec<u64> = (0..m).map(|a| per_k_counts.iter().map(|row| row[a]).sum()).collect();
        PropertyReport {
            conservative,
            essentially_polyadic,
            fair: all_equal(&totals),
            strongly_fair: per_k_counts.iter().all(|row| all_equal(row)),
            nondegenerate: m > n,
            per_k_counts,
        }
    }

    /// The map `g` on component sets with `f = g ∘ set-of-components`.
    ///
    /// `g(U)` is read off the lexicographically first tuple whose component set
    /// is `U`; every other tuple is checked against it.
    pub fn extract_pointing(&self) -> Result<Pointing> {
        let (m, n) = (self.order, self.arity);
        let offsets = stratum_offsets(m, n);
        let mut first: Vec<Option<usize>> = vec![None; offsets[n]];
        let mut failure = None;
        for_each_tuple(m, n, |idx, t| {
            if failure.is_some() {
                return;
            }
            let set = component_set(t);
            let slot = &mut first[offsets[set.len() - 1] + set.rank()];
            match *slot {
                None => *slot = Some(idx),
                Some(prev) if self.table[prev] != self.table[idx] => failure = Some((prev, idx)),
                Some(_) => {}
            }
        });
        if let Some((a, b)) = failure {
            return Err(Error::NotEssentiallyPolyadic { first: self.tuple(a), second: self.tuple(b) });
        }
        let values = (1..=n.min(m))
            .map(|k| {
                (0..binomial(m, k))
                    .map(|r| self.table[first[offsets[k - 1] + r].expect("every k-set occurs")])
                    .collect()
            })
            .collect();
        Pointing::new(m, n, values)
    }

    /// Essentially polyadic magma `f(u_1, .., u_n) = g({u_1, .., u_n})`.
    pub fn from_pointing(pointing: &Pointing) -> Result<Self> {
        FiniteMagma::from_fn(pointing.order(), pointing.arity(), |t| pointing.get(&component_set(t)))
    }

    /// Componentwise product; the pair `(x, y)` is encoded as `x·m_B + y`.
    pub fn direct_product(&self, other: &FiniteMagma) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mb = other.order;
        let mut left = vec![0; self.arity];
        let mut right = vec![0; self.arity];
        FiniteMagma::from_fn(self.order * mb, self.arity, |t| {
            for (i, &p) in t.iter().enumerate() {
                left[i] = p / mb;
                right[i] = p % mb;
            }
            self.apply(&left) * mb + other.apply(&right)
        })
    }

    /// Subalgebra on `subset`, re-indexed in increasing order.
    ///
    /// Returns the subalgebra and the map from new indices to old elements.
    pub fn restrict(&self, subset: &[usize]) -> Result<(FiniteMagma, Vec<usize>)> {
        let elems = KSet::new(subset.iter().copied()).into_vec();
        if elems.is_empty() {
            return Err(Error::DomainError("cannot restrict to the empty set".into()));
        }
        if let Some(&bad) = elems.iter().find(|&&x| x >= self.order) {
            return Err(Error::EntryOutOfRange { position: 0, value: bad, order: self.order });
        }
        let mut new_index = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            new_index[x] = i;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(limits::checked_table_len(k, self.arity)?);
        let mut args = vec![0; self.arity];
        let mut escaped = None;
        for_each_tuple(k, self.arity, |_, t| {
            for (slot, &i) in args.iter_mut().zip(t) {
                *slot = elems[i];
            }
            let out = self.apply(&args);
            if new_index[out] == usize::MAX && escaped.is_none() {
                escaped = Some(args.clone());
            }
            table.push(new_index[out]);
        });
        if let Some(tuple) = escaped {
            return Err(Error::NotClosed { tuple });
        }
        Ok((FiniteMagma { order: k, arity: self.arity, table }, elems))
    }

    /// `f_σ(x) = σ(f(x))`.
    pub fn permute_outputs(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.order {
            return Err(Error::NotPermutation(format!(
                "permutation of degree {} applied to a magma of order {}",
                sigma.degree(),
                self.order
            )));
        }
        Ok(FiniteMagma {
            order: self.order,
            arity: self.arity,
            table: self.table.iter().map(|&x| sigma.apply(x)).collect(),
        })
    }

    /// Binary magma `α(x, y) = f(x, y, .., y)`.
    pub fn derived_binary(&self) -> Result<Self> {
        if self.arity < 2 {
            return Err(Error::DegenerateArity("derived binary operation needs arity at least 2".into()));
        }
        let mut args = vec![0; self.arity];
        FiniteMagma::from_fn(self.order, 2, |t| {
            args[0] = t[0];
            for slot in &mut args[1..] {
                *slot = t[1];
            }
            self.apply(&args)
        })
    }

    /// Some isomorphism onto `other`, if one exists.
    pub fn isomorphic(&self, other: &FiniteMagma) -> Result<Option<Permutation>> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(crate::analysis::iso::isomorphisms(self, other, Some(1)).into_iter().next())
    }

    /// Relabels elements: the result maps `φ(x)` to `φ(f(x))`.
    pub fn relabel(&self, phi: &Permutation) -> Result<Self> {
        if phi.degree() != self.order {
            return Err(Error::NotPermutation("relabelling has the wrong degree".into()));
        }
        let inv = phi.inverse();
        let mut args = vec![0; self.arity];
        FiniteMagma::from_fn(self.order, self.arity, |t| {
            for (slot, &y) in args.iter_mut().zip(t) {
                *slot = inv.apply(y);
            }
            phi.apply(self.apply(&args))
        })
    }
}

impl std::fmt::Debug for FiniteMagma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteMagma(m={}, n={}, {:?})", self.order, self.arity, self.table)
    }
}

/// Result of [`FiniteMagma::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub conservative: bool,
    pub essentially_polyadic: bool,
    pub fair: bool,
    pub strongly_fair: bool,
    pub nondegenerate: bool,
    /// `per_k_counts[k-1][a]` is the number of tuples with exactly `k`
    /// distinct components whose output is `a`.
    pub per_k_counts: Vec<Vec<u64>>,
}

impl PropertyReport {
    /// Essentially polyadic, strongly fair and nondegenerate.
    pub fn is_prps(&self) -> bool {
        self.essentially_polyadic && self.strongly_fair && self.nondegenerate
    }

    /// A conservative PRPS magma.
    pub fn is_rps(&self) -> bool {
        self.conservative && self.is_prps()
    }

    /// Total preimage size of each element.
    pub fn preimage_sizes(&self) -> Vec<u64> {
        let m = self.per_k_counts.first().map_or(0, Vec::len);
        (0..m).map(|a| self.per_k_counts.iter().map(|row| row[a]).sum()).collect()
    }

    pub fn flags(&self) -> [(&'static str, bool); 5] {
        [
            ("conservative", self.conservative),
            ("essentially_polyadic", self.essentially_polyadic),
            ("fair", self.fair),
            ("strongly_fair", self.strongly_fair),
            ("nondegenerate", self.nondegenerate),
        ]
    }
}

/// A choice of winner `g(U)` for every `k`-set `U`, `1 <= k <= min(n, m)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pointing {
    order: usize,
    arity: usize,
    /// `values[k-1][r]` is `g` of the `k`-set of colex rank `r`.
    values: Vec<Vec<usize>>,
}

impl Pointing {
    pub fn new(order: usize, arity: usize, values: Vec<Vec<usize>>) -> Result<Self> {
        if order == 0 || arity == 0 {
            return Err(Error::InvalidPointing("order and arity must be positive".into()));
        }
        let top = arity.min(order);
        if values.len() != top {
            return Err(Error::InvalidPointing(format!("expected {top} strata, got {}", values.len())));
        }
        for (i, row) in values.iter().enumerate() {
            let want = binomial(order, i + 1);
            if row.len() != want {
                return Err(Error::InvalidPointing(format!(
                    "stratum k={} has {} entries, expected {want}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= order) {
                return Err(Error::InvalidPointing(format!("value {v} is not below order {order}")));
            }
        }
        Ok(Pointing { order, arity, values })
    }

    pub fn from_fn(order: usize, arity: usize, mut g: impl FnMut(&KSet) -> usize) -> Result<Self> {
        let values = (1..=arity.min(order)).map(|k| ksets(order, k).map(|u| g(&u)).collect()).collect();
        Pointing::new(order, arity, values)
    }

    /// Builds a pointing from explicit `(set, winner)` pairs covering every set once.
    pub fn from_pairs(order: usize, arity: usize, pairs: impl IntoIterator<Item = (KSet, usize)>) -> Result<Self> {
        let mut map = HashMap::new();
        for (set, w) in pairs {
            if set.is_empty() || set.len() > arity || set.largest().is_some_and(|x| x >= order) {
                return Err(Error::InvalidPointing(format!("{set} is not a 1..{arity}-subset of 0..{order}")));
            }
            if map.insert(set.clone(), w).is_some() {
                return Err(Error::InvalidPointing(format!("{set} listed twice")));
            }
        }
        let mut missing = None;
        let p = Pointing::from_fn(order, arity, |u| match map.get(u) {
            Some(&w) => w,
            None => {
                missing.get_or_insert_with(|| u.clone());
                0
            }
        });
        if let Some(u) = missing {
            return Err(Error::InvalidPointing(format!("no winner given for {u}")));
        }
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of sets in the domain, `Σ_k C(m, k)`.
    pub fn domain_size(&self) -> usize {
        self.values.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn get(&self, set: &KSet) -> usize {
        self.values[set.len() - 1][set.rank()]
    }

    pub fn stratum(&self, k: usize) -> &[usize] {
        &self.values[k - 1]
    }

    pub fn is_conservative(&self) -> bool {
        self.iter().all(|(u, w)| u.contains(w))
    }

    /// `(set, winner)` pairs ordered by size, then colex.
    pub fn iter(&self) -> impl Iterator<Item = (KSet, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .flat_map(move |(i, row)| ksets(self.order, i + 1).zip(row.iter().copied()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn rps() -> FiniteMagma {
        FiniteMagma::new(3, 2, vec![0, 1, 0, 1, 1, 2, 0, 2, 2]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FiniteMagma::new(2, 2, vec![0, 1, 1]).unwrap_err(),
            Error::LengthMismatch { expected: 4, got: 3 }
        );
        assert!(matches!(FiniteMagma::new(2, 1, vec![0, 2]), Err(Error::EntryOutOfRange { value: 2, .. })));
        assert!(matches!(FiniteMagma::new(10, 8, vec![]), Err(Error::CapExceeded { .. })));
        assert!(FiniteMagma::new(1, 1, vec![0]).is_ok());
    }

    #[test]
    fn index_layout_is_row_major() {
        let a = FiniteMagma::from_fn(4, 3, |t| t[0]).unwrap();
        assert_eq!(a.index(&[1, 2, 3]), 16 + 8 + 3);
        assert_eq!(a.tuple(27), vec![1, 2, 3]);
    }

    #[test]
    fn constant_map_is_neither_conservative_nor_fair() {
        let c = FiniteMagma::new(2, 2, vec![0; 4]).unwrap();
        let r = c.classify();
        assert!(!r.conservative);
        assert!(!r.fair);
        assert!(r.essentially_polyadic);
    }

    #[test]
    fn rps_is_rps() {
        let r = rps().classify();
        assert!(r.is_rps());
        assert!(r.fair);
        assert_eq!(r.per_k_counts, vec![vec![1, 1, 1], vec![2, 2, 2]]);
    }

    #[test]
    fn non_commutative_is_not_polyadic() {
        let left = FiniteMagma::from_fn(3, 2, |t| t[0]).unwrap();
        match left.extract_pointing() {
            Err(Error::NotEssentiallyPolyadic { first, second }) => {
                assert_eq!(first, vec![0, 1]);
                assert_eq!(second, vec![1, 0]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn min_pointing_gives_min() {
        let p = Pointing::from_fn(4, 3, |u| u.elements()[0]).unwrap();
        let a = FiniteMagma::from_pointing(&p).unwrap();
        for idx in 0..a.table().len() {
            let t = a.tuple(idx);
            assert_eq!(a.table()[idx], *t.iter().min().unwrap());
        }
        assert!(p.is_conservative());
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let a = rps();
        let p = a.direct_product(&FiniteMagma::trivial(2)).unwrap();
        assert_eq!(p, a);
        assert!(!a.direct_product(&a).unwrap().classify().conservative);
        assert!(matches!(
            a.direct_product(&FiniteMagma::trivial(3)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn restrict_whole_and_not_closed() {
        let a = rps();
        assert_eq!(a.restrict(&[0, 1, 2]).unwrap().0, a);
        let b = a.permute_outputs(&Permutation::new(vec![1, 2, 0]).unwrap()).unwrap();
        assert!(matches!(b.restrict(&[0]), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn derived_binary_of_binary_is_itself() {
        assert_eq!(rps().derived_binary().unwrap(), rps());
        assert!(FiniteMagma::trivial(1).derived_binary().is_err());
    }
}
