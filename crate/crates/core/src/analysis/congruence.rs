//! Congruences, convex subgroups and the coset poset.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::analysis::lattice::FiniteLattice;
use crate::construct::{build_regular, SignFunction};
use crate::group::FiniteGroup;
use crate::limits;
use crate::magma::{for_each_tuple, FiniteMagma};
use crate::{Error, Result};

/// A partition of `{0, .., m-1}`; blocks are numbered by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_of: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Canonicalizes any labelling of blocks.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let block_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Partition { count: renumber.len(), block_of }
    }

    /// Fails if the blocks overlap, miss an element, or are empty.
    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::DomainError("empty block".into()));
            }
            for &x in block {
                if x >= m || labels[x] != usize::MAX {
                    return Err(Error::DomainError(format!("element {x} is out of range or repeated")));
                }
                labels[x] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::DomainError(format!("element {x} is in no block")));
        }
        Ok(Partition::from_labels(&labels))
    }

    pub fn discrete(m: usize) -> Self {
        Partition { block_of: (0..m).collect(), count: m }
    }

    pub fn total(m: usize) -> Self {
        Partition { block_of: vec![0; m], count: usize::from(m > 0) }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.count
    }

    pub fn block_index(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Blocks sorted by least element, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn block_containing(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&y| self.same_block(x, y)).collect()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.count];
        self.block_of.iter().zip(&other.block_of).all(|(&b, &o)| {
            if image[b] == usize::MAX {
                image[b] = o;
            }
            image[b] == o
        })
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.size());
        for x in 0..self.size() {
            for p in [self, other] {
                let first = p.block_of.iter().position(|&b| b == p.block_of[x]).expect("x is in its block");
                uf.union(first, x);
            }
        }
        uf.partition()
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<usize> =
            self.block_of.iter().zip(&other.block_of).map(|(&a, &b)| a * other.count + b).collect();
        Partition::from_labels(&labels)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            let items: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", items.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(m: usize) -> Self {
        UnionFind { parent: (0..m).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }

    fn partition(&mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

/// Least congruence identifying every given pair.
pub fn congruence_generated(a: &FiniteMagma, pairs: &[(usize, usize)]) -> Result<Partition> {
    let (m, n) = (a.order(), a.arity());
    if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= m || y >= m) {
        return Err(Error::DomainError(format!("pair ({x}, {y}) is outside a magma of order {m}")));
    }
    let mut uf = UnionFind::new(m);
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
    let mut args = vec![0; n];
    while let Some((x, y)) = queue.pop_front() {
        if !uf.union(x, y) {
            continue;
        }
        for pos in 0..n {
            for_each_tuple(m, n - 1, |_, ctx| {
                args[..pos].copy_from_slice(&ctx[..pos]);
                args[pos + 1..].copy_from_slice(&ctx[pos..]);
                args[pos] = x;
                let fx = a.apply(&args);
                args[pos] = y;
                let fy = a.apply(&args);
                if fx != fy {
                    queue.push_back((fx, fy));
                }
            });
        }
    }
    Ok(uf.partition())
}

/// `Cg(x, y)`.
pub fn principal_congruence(a: &FiniteMagma, x: usize, y: usize) -> Result<Partition> {
    congruence_generated(a, &[(x, y)])
}

fn congruence_cap() -> u64 {
    limits::subgroup_cap() / 2
}

/// Every congruence, as the join closure of the principal ones. Sorted from the identity
/// relation (most blocks) to the total relation; ordered by refinement.
pub fn all_congruences(a: &FiniteMagma) -> Result<FiniteLattice<Partition>> {
    let m = a.order();
    limits::check("magma order for congruence enumeration", m as u128, congruence_cap())?;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|x| (x + 1..m).map(move |y| (x, y))).collect();
    let principal: BTreeSet<Partition> =
        pairs.par_iter().map(|&(x, y)| principal_congruence(a, x, y)).collect::<Result<_>>()?;
    let principal: Vec<Partition> = principal.into_iter().collect();
    let mut found: BTreeSet<Partition> = BTreeSet::from([Partition::discrete(m)]);
    let mut frontier: Vec<Partition> = vec![Partition::discrete(m)];
    while let Some(theta) = frontier.pop() {
        for p in &principal {
            let j = theta.join(p);
            if found.insert(j.clone()) {
                limits::check("number of congruences", found.len() as u128, limits::search_cap())?;
                frontier.push(j);
            }
        }
    }
    let mut elements: Vec<Partition> = found.into_iter().collect();
    elements.sort_by(|x, y| y.block_count().cmp(&x.block_count()).then_with(|| x.cmp(y)));
    FiniteLattice::from_order(elements, Partition::refines)
}

/// Every pair of distinct elements generates the total congruence.
pub fn is_simple(a: &FiniteMagma) -> Result<bool> {
    let m = a.order();
    if m < 2 {
        return Ok(false);
    }
    limits::check("magma order for congruence enumeration", m as u128, congruence_cap())?;
    for x in 0..m {
        for y in x + 1..m {
            if principal_congruence(a, x, y)?.block_count() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subgroups `H` for which some congruence of `G_n(λ)` has `H` as the block of `e`.
pub fn lambda_convex_subgroups(group: &FiniteGroup, n: usize, lambda: &SignFunction) -> Result<Vec<Vec<usize>>> {
    let a = build_regular(group, n, lambda)?;
    let e = group.identity();
    let mut out = Vec::new();
    for h in group.subgroups()? {
        let pairs: Vec<(usize, usize)> = h.iter().map(|&x| (e, x)).collect();
        if congruence_generated(&a, &pairs)?.block_containing(e) == h {
            out.push(h);
        }
    }
    Ok(out)
}

/// Cosets `aH` of a chain of subgroups, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPoset {
    /// Sorted by size, then elementwise.
    pub cosets: Vec<Vec<usize>>,
}

impl CosetPoset {
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let (small, big) = (&self.cosets[i], &self.cosets[j]);
        small.iter().all(|x| big.binary_search(x).is_ok())
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// `P` = cosets of the given subgroups (plus the trivial and whole group) and `L(P)`, the
/// maximal antichains of `P` with `U <= V` when every member of `U` lies below a member of `V`.
/// Antichains are lists of indices into `P.cosets`.
pub fn coset_poset_and_antichain_lattice(
    group: &FiniteGroup,
    convex: &[Vec<usize>],
) -> Result<(CosetPoset, FiniteLattice<Vec<usize>>)> {
    let m = group.order();
    let mut subgroups: Vec<Vec<usize>> = convex
        .iter()
        .map(|h| {
            let mut h = h.clone();
            h.sort_unstable();
            h.dedup();
            h
        })
        .collect();
    subgroups.push(vec![group.identity()]);
    subgroups.push((0..m).collect());
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subgroups.dedup();
    for h in &subgroups {
        if group.generated(h.iter().copied()) != *h {
            return Err(Error::DomainError(format!("{h:?} is not a subgroup")));
        }
    }
    for (i, h) in subgroups.iter().enumerate() {
        for k in &subgroups[i + 1..] {
            if !h.iter().all(|x| k.binary_search(x).is_ok()) {
                return Err(Error::NotAChain(format!("{h:?} and {k:?} are incomparable")));
            }
        }
    }
    let mut cosets: Vec<Vec<usize>> = subgroups.iter().flat_map(|h| group.left_cosets(h)).collect();
    cosets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cosets.dedup();
    let poset = CosetPoset { cosets };
    let antichains = maximal_antichains(&poset)?;
    let lattice = FiniteLattice::from_order(antichains, |u: &Vec<usize>, v: &Vec<usize>| {
        u.iter().all(|&x| v.iter().any(|&y| poset.leq(x, y)))
    })?;
    Ok((poset, lattice))
}

fn maximal_antichains(poset: &CosetPoset) -> Result<Vec<Vec<usize>>> {
    let n = poset.len();
    limits::check("coset poset size", n as u128, 64)?;
    let comparable: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| poset.leq(i, j) || poset.leq(j, i)).collect()).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn walk(i: usize, comparable: &[Vec<bool>], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = comparable.len();
        if i == n {
            if (0..n).all(|x| current.iter().any(|&y| comparable[x][y])) {
                out.push(current.clone());
            }
            return;
        }
        if current.iter().all(|&y| !comparable[i][y]) {
            current.push(i);
            walk(i + 1, comparable, current, out);
            current.pop();
        }
        walk(i + 1, comparable, current, out);
    }
    walk(0, &comparable, &mut current, &mut out);
    out.sort();
    Ok(out)
}
