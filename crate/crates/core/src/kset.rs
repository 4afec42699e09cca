//! Finite subsets as sorted index lists, ranked in colexicographic order.
//!
//! The colex rank of `{a_0 < a_1 < .. < a_{k-1}}` is `Σ C(a_i, i+1)` (the
//! combinatorial number system). Sets of equal size compare by rank; across
//! sizes the smaller set sorts first.

use std::cmp::Ordering;
use std::fmt;

/// `C(n, k)` in machine arithmetic. Saturates at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// A nonempty-or-empty set of element indices, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KSet(Vec<usize>);

impl KSet {
    /// Builds a set from arbitrary elements; duplicates are dropped.
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        KSet(v)
    }

    /// Wraps an already strictly increasing vector.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        KSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Colex rank among all sets of the same size.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &a)| binomial(a, i + 1)).sum()
    }

    /// Inverse of [`KSet::rank`].
    pub fn unrank(k: usize, mut rank: usize) -> Self {
        let mut out = vec![0; k];
        for i in (0..k).rev() {
            // largest a with C(a, i+1) <= rank
            let mut a = i;
            while binomial(a + 1, i + 1) <= rank {
                a += 1;
            }
            rank -= binomial(a, i + 1);
            out[i] = a;
        }
        KSet(out)
    }

    /// Image of the set under an element map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        KSet::new(self.0.iter().map(|&x| f(x)))
    }

    pub fn with(&self, x: usize) -> Self {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&x) {
            v.insert(pos, x);
        }
        KSet(v)
    }

    pub fn without(&self, x: usize) -> Self {
        KSet(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Ord for KSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for KSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Vec<usize>> for KSet {
    fn from(v: Vec<usize>) -> Self {
        KSet::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for KSet {
    fn from(v: [usize; N]) -> Self {
        KSet::new(v)
    }
}

/// All `k`-subsets of `{0, .., m-1}` in colex order.
pub fn ksets(m: usize, k: usize) -> impl Iterator<Item = KSet> {
    let total = binomial(m, k);
    let mut current: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
    let mut produced = 0usize;
    std::iter::from_fn(move || {
        if produced >= total {
            return None;
        }
        let cur = current.as_mut()?;
        let out = KSet(cur.clone());
        produced += 1;
        // colex successor: bump the lowest position that can move
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { cur[i + 1] } else { m };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn colex_order_and_rank_agree() {
        for m in 0..8 {
            for k in 0..=m {
                let all: Vec<KSet> = ksets(m, k).collect();
                assert_eq!(all.len(), binomial(m, k));
                for (r, s) in all.iter().enumerate() {
                    assert_eq!(s.rank(), r);
                    assert_eq!(&KSet::unrank(k, r), s);
                }
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn colex_starts_small() {
        let pairs: Vec<Vec<usize>> = ksets(4, 2).map(KSet::into_vec).collect();
        assert_eq!(pairs, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
    }
}
