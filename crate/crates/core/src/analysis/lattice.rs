//! Finite lattices given by their order relation.

use crate::limits;
use crate::{Error, Result};

/// A finite lattice over `elements`, with join and meet tables derived from `leq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice<T> {
    elements: Vec<T>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl<T> FiniteLattice<T> {
    /// Builds the lattice from a partial order; fails if some pair lacks a join or meet.
    pub fn from_order(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let size = elements.len();
        if size == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        limits::check("lattice size squared", (size as u128).pow(2), limits::table_cap())?;
        let mut rel = vec![false; size * size];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                rel[i * size + j] = leq(x, y);
            }
        }
        for i in 0..size {
            if !rel[i * size + i] {
                return Err(Error::NotALattice(format!("element {i} is not below itself")));
            }
            for j in 0..size {
                if i != j && rel[i * size + j] && rel[j * size + i] {
                    return Err(Error::NotALattice(format!("elements {i} and {j} are mutually below")));
                }
            }
        }
        let bound = |i: usize, j: usize, upper: bool| -> Option<usize> {
            let above = |x: usize, y: usize| if upper { rel[x * size + y] } else { rel[y * size + x] };
            let bounds: Vec<usize> = (0..size).filter(|&z| above(i, z) && above(j, z)).collect();
            bounds.iter().copied().find(|&z| bounds.iter().all(|&w| above(z, w)))
        };
        let mut join = vec![0; size * size];
        let mut meet = vec![0; size * size];
        for i in 0..size {
            for j in 0..size {
                join[i * size + j] =
                    bound(i, j, true).ok_or_else(|| Error::NotALattice(format!("{i} and {j} have no join")))?;
                meet[i * size + j] =
                    bound(i, j, false).ok_or_else(|| Error::NotALattice(format!("{i} and {j} have no meet")))?;
            }
        }
        Ok(FiniteLattice { elements, leq: rel, join, meet })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j))).expect("lattices have a bottom")
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i))).expect("lattices have a top")
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    fn profile(&self, i: usize) -> (usize, usize) {
        let n = self.len();
        ((0..n).filter(|&j| self.leq(j, i)).count(), (0..n).filter(|&j| self.leq(i, j)).count())
    }
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
pub fn is_distributive<T>(l: &FiniteLattice<T>) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    })
}

/// Order isomorphism by backtracking, pruned by down-set and up-set sizes.
pub fn lattice_isomorphic<T, U>(a: &FiniteLattice<T>, b: &FiniteLattice<U>) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let n = a.len();
    limits::check("lattice size for isomorphism search", n as u128, limits::subgroup_cap() * 20)?;
    let pa: Vec<_> = (0..n).map(|i| a.profile(i)).collect();
    let pb: Vec<_> = (0..n).map(|i| b.profile(i)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    fn extend<T, U>(
        i: usize,
        a: &FiniteLattice<T>,
        b: &FiniteLattice<U>,
        pa: &[(usize, usize)],
        pb: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if used[y] || pa[i] != pb[y] {
                continue;
            }
            if (0..i).all(|j| a.leq(i, j) == b.leq(y, map[j]) && a.leq(j, i) == b.leq(map[j], y)) {
                map.push(y);
                used[y] = true;
                if extend(i + 1, a, b, pa, pb, map, used) {
                    return true;
                }
                used[y] = false;
                map.pop();
            }
        }
        false
    }
    Ok(extend(0, a, b, &pa, &pb, &mut Vec::with_capacity(n), &mut vec![false; n]))
}
