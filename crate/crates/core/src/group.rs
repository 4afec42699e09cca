//! Finite groups as Cayley tables, and the left-multiplication action on `k`-sets.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::kset::{binomial, ksets, KSet};
use crate::limits;
use crate::perm::Permutation;
use crate::{Error, Result};

/// A finite group on `{0, .., m-1}` given by its full multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty universe".into()));
        }
        if table.len() != order * order {
            return Err(Error::LengthMismatch { expected: order * order, got: table.len() });
        }
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::EntryOutOfRange { position, value, order });
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; order];
        for (a, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{a} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, table, identity, inverse })
    }

    /// Like [`FiniteGroup::from_table`] but also insists on a particular identity.
    pub fn from_table_with_identity(order: usize, identity: usize, table: Vec<usize>) -> Result<Self> {
        let g = FiniteGroup::from_table(order, table)?;
        if g.identity != identity {
            return Err(Error::NotAGroup(format!("declared identity {identity}, actual identity {}", g.identity)));
        }
        Ok(g)
    }

    /// `ℤ_m` under addition.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::DomainError("cyclic group of order 0".into()));
        }
        let table = (0..m * m).map(|i| (i / m + i % m) % m).collect();
        Ok(FiniteGroup { order: m, table, identity: 0, inverse: (0..m).map(|a| (m - a) % m).collect() })
    }

    /// Direct product of the parts. Elements use mixed-radix encoding with the
    /// first part most significant.
    pub fn direct_sum(parts: &[FiniteGroup]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::DomainError("direct sum of no groups".into()));
        }
        let order = parts.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.order)).unwrap_or(usize::MAX);
        limits::check("direct sum order squared", (order as u128) * (order as u128), limits::table_cap())?;
        let decode = |mut x: usize| -> Vec<usize> {
            let mut digits = vec![0; parts.len()];
            for (slot, g) in digits.iter_mut().zip(parts).rev() {
                *slot = x % g.order;
                x /= g.order;
            }
            digits
        };
        let encode = |digits: &[usize]| digits.iter().zip(parts).fold(0, |acc, (&d, g)| acc * g.order + d);
        let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut table = Vec::with_capacity(order * order);
        let mut buf = vec![0; parts.len()];
        for a in &coords {
            for b in &coords {
                for (i, g) in parts.iter().enumerate() {
                    buf[i] = g.mul(a[i], b[i]);
                }
                table.push(encode(&buf));
            }
        }
        let identity = encode(&parts.iter().map(|g| g.identity).collect::<Vec<_>>());
        let inverse = coords
            .iter()
            .map(|a| encode(&a.iter().zip(parts).map(|(&x, g)| g.inv(x)).collect::<Vec<_>>()))
            .collect();
        Ok(FiniteGroup { order, table, identity, inverse })
    }

    /// `ℤ_m ⋊ ℤ_k` with `(a, i)(b, j) = (a + t^i b, i + j)`; `(a, i)` is stored as `i·m + a`.
    pub fn semidirect_cyclic(m: usize, k: usize, t: usize) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::DomainError("semidirect factors must be nontrivial".into()));
        }
        if num_integer::gcd(t, m) != 1 && m != 1 {
            return Err(Error::BadMultiplier(format!("gcd({t}, {m}) != 1")));
        }
        let powers: Vec<usize> = (0..k).scan(1 % m, |p, _| {
            let cur = *p;
            *p = *p * t % m;
            Some(cur)
        }).collect();
        if (powers[k - 1] * t) % m != 1 % m {
            return Err(Error::BadMultiplier(format!("{t}^{k} is not 1 mod {m}")));
        }
        let order = m * k;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i, a) = (x / m, x % m);
            for y in 0..order {
                let (j, b) = (y / m, y % m);
                table.push(((i + j) % k) * m + (a + powers[i] * b) % m);
            }
        }
        FiniteGroup::from_table(order, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn power(&self, a: usize, mut e: usize) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `sU = {s·u : u ∈ U}`.
    pub fn translate(&self, s: usize, set: &KSet) -> KSet {
        set.map(|u| self.mul(s, u))
    }

    /// Subgroup generated by `elements`, sorted.
    pub fn generated(&self, elements: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let gens: Vec<usize> = elements.into_iter().collect();
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| inside[x]).collect()
    }

    /// Orbits of `k`-sets under `U ↦ sU`, each sorted colex with its least member first.
    pub fn k_extension_orbits(&self, k: usize) -> Result<OrbitFamily> {
        if k == 0 || k > self.order {
            return Err(Error::DomainError(format!("k={k} outside 1..={}", self.order)));
        }
        let total = binomial(self.order, k);
        limits::check("k-sets of the group", total as u128, limits::table_cap())?;
        let mut orbit_of = vec![usize::MAX; total];
        let mut orbits = Vec::new();
        for u in ksets(self.order, k) {
            if orbit_of[u.rank()] != usize::MAX {
                continue;
            }
            let members: BTreeSet<KSet> = (0..self.order).map(|s| self.translate(s, &u)).collect();
            for v in &members {
                orbit_of[v.rank()] = orbits.len();
            }
            orbits.push(members.into_iter().collect::<Vec<_>>());
        }
        Ok(OrbitFamily { k, orbits, orbit_of })
    }

    /// Whether `U ↦ sU` on `k`-sets has trivial stabilizers.
    pub fn is_extension_free(&self, k: usize) -> Result<bool> {
        Ok(self.extension_stabilizer_witness(k)?.is_none())
    }

    /// Some `(s, U)` with `s != e` and `sU = U`, if any.
    pub fn extension_stabilizer_witness(&self, k: usize) -> Result<Option<(usize, KSet)>> {
        if k == 0 || k > self.order {
            return Err(Error::DomainError(format!("k={k} outside 1..={}", self.order)));
        }
        limits::check("k-sets of the group", binomial(self.order, k) as u128, limits::table_cap())?;
        for u in ksets(self.order, k) {
            for s in 0..self.order {
                if s != self.identity && self.translate(s, &u) == u {
                    return Ok(Some((s, u)));
                }
            }
        }
        Ok(None)
    }

    /// All subgroups, by closing the cyclic subgroups under pairwise joins.
    /// Sorted by size, then elementwise.
    pub fn subgroups(&self) -> Result<Vec<Vec<usize>>> {
        limits::check("group order for subgroup enumeration", self.order as u128, limits::subgroup_cap())?;
        let mut found: BTreeSet<Vec<usize>> = (0..self.order).map(|g| self.generated([g])).collect();
        loop {
            let current: Vec<Vec<usize>> = found.iter().cloned().collect();
            let mut grew = false;
            for (i, h) in current.iter().enumerate() {
                for k in &current[i + 1..] {
                    let joined = self.generated(h.iter().chain(k).copied());
                    grew |= found.insert(joined);
                }
            }
            if !grew {
                break;
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Left cosets `aH`, each sorted, listed by least element.
    pub fn left_cosets(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(a, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            out.push(coset);
        }
        out
    }

    pub fn conjugation(&self, b: usize) -> Permutation {
        let bi = self.inv(b);
        Permutation::new((0..self.order).map(|a| self.mul(self.mul(b, a), bi)).collect())
            .expect("conjugation is a bijection")
    }

    /// The distinct maps `c_b(a) = b a b⁻¹`, in order of first appearance over `b`.
    pub fn inner_automorphisms(&self) -> Vec<Permutation> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for b in 0..self.order {
            let c = self.conjugation(b);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out
    }

    pub fn left_translation(&self, a: usize) -> Permutation {
        Permutation::new((0..self.order).map(|x| self.mul(a, x)).collect()).expect("translation is a bijection")
    }

    /// `L_a : x ↦ ax` for each `a`, indexed by `a`.
    pub fn left_translations(&self) -> Vec<Permutation> {
        (0..self.order).map(|a| self.left_translation(a)).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|a| self.mul(z, a) == self.mul(a, z))).collect()
    }

    pub fn is_automorphism(&self, phi: &Permutation) -> bool {
        phi.degree() == self.order
            && (0..self.order)
                .all(|a| (0..self.order).all(|b| phi.apply(self.mul(a, b)) == self.mul(phi.apply(a), phi.apply(b))))
    }

    /// Greedy generating sequence: each generator lies outside the span of the previous ones.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for g in 0..self.order {
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.generated(gens.iter().copied());
            }
        }
        gens
    }

    /// Full automorphism group, by trying every order-preserving image of a generating set.
    pub fn automorphisms(&self) -> Result<Vec<Permutation>> {
        let gens = self.generators();
        let orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        let candidates: Vec<Vec<usize>> =
            gens.iter().map(|&g| (0..self.order).filter(|&x| orders[x] == orders[g]).collect()).collect();
        let space = candidates.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
        limits::check("generator images for group automorphisms", space, limits::search_cap())?;
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        'outer: loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(phi) = self.extend_homomorphism(&gens, &images) {
                out.push(phi);
            }
            for pos in (0..choice.len()).rev() {
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    continue 'outer;
                }
                choice[pos] = 0;
            }
            break;
        }
        out.sort();
        Ok(out)
    }

    fn extend_homomorphism(&self, gens: &[usize], images: &[usize]) -> Option<Permutation> {
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = self.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let phi = Permutation::new(map).ok()?;
        self.is_automorphism(&phi).then_some(phi)
    }

    /// Image of a set of elements under an element map.
    pub fn image(&self, phi: &Permutation, set: &KSet) -> KSet {
        set.map(|x| phi.apply(x))
    }
}

/// Orbits of `k`-sets under left multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitFamily {
    pub k: usize,
    /// Each orbit sorted colex; orbits ordered by their least member.
    pub orbits: Vec<Vec<KSet>>,
    orbit_of: Vec<usize>,
}

impl OrbitFamily {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Colex-least member of orbit `i`.
    pub fn representative(&self, i: usize) -> &KSet {
        &self.orbits[i][0]
    }

    pub fn representatives(&self) -> Vec<KSet> {
        self.orbits.iter().map(|o| o[0].clone()).collect()
    }

    pub fn orbit_index(&self, set: &KSet) -> usize {
        self.orbit_of[set.rank()]
    }
}

/// Convenience lookup from element sets to subgroup indices.
pub fn subgroup_index(subgroups: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    subgroups.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(z5.mul(2, 4), 1);
        assert_eq!(z5.identity(), 0);
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert!(FiniteGroup::from_table(5, z5.table().to_vec()).is_ok());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(matches!(FiniteGroup::from_table(2, vec![0, 0, 0, 0]), Err(Error::NotAGroup(_))));
        // a Latin square without associativity: x*y = (x - y) mod 3 has no identity
        let t: Vec<usize> = (0..9).map(|i| (3 + i / 3 - i % 3) % 3).collect();
        assert!(FiniteGroup::from_table(3, t).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        let z = FiniteGroup::semidirect_cyclic(6, 1, 1).unwrap();
        assert_eq!(z, FiniteGroup::cyclic(6).unwrap());
        assert!(matches!(FiniteGroup::semidirect_cyclic(5, 2, 3), Err(Error::BadMultiplier(_))));
    }

    #[test]
    fn orbit_examples() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let psi2 = z5.k_extension_orbits(2).unwrap();
        let as_vecs: Vec<Vec<Vec<usize>>> =
            psi2.orbits.iter().map(|o| o.iter().map(|s| s.elements().to_vec()).collect()).collect();
        assert_eq!(
            as_vecs,
            vec![
                vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 4], vec![3, 4]],
                vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]],
            ]
        );
        let psi3 = z5.k_extension_orbits(3).unwrap();
        assert_eq!(psi3.representatives(), vec![KSet::from([0, 1, 2]), KSet::from([0, 1, 3])]);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(z3.k_extension_orbits(2).unwrap().orbits.len(), 1);
    }

    #[test]
    fn freeness_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(!z4.is_extension_free(2).unwrap());
        assert_eq!(z4.extension_stabilizer_witness(2).unwrap(), Some((2, KSet::from([0, 2]))));
        assert!(FiniteGroup::cyclic(5).unwrap().is_extension_free(2).unwrap());
        assert!(z4.is_extension_free(1).unwrap());
    }

    #[test]
    fn subgroup_examples() {
        let z9 = FiniteGroup::cyclic(9).unwrap();
        assert_eq!(z9.subgroups().unwrap(), vec![vec![0], vec![0, 3, 6], (0..9).collect()]);
        assert_eq!(FiniteGroup::cyclic(15).unwrap().subgroups().unwrap().len(), 4);
        let g21 = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        let orders: BTreeSet<usize> = g21.subgroups().unwrap().iter().map(Vec::len).collect();
        assert_eq!(orders, BTreeSet::from([1, 3, 7, 21]));
    }

    #[test]
    fn inner_and_translations() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.inner_automorphisms(), vec![Permutation::identity(6)]);
        let g21 = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g21.inner_automorphisms().len(), 21);
        assert_eq!(g21.center(), vec![g21.identity()]);
        assert!(g21.conjugation(g21.identity()).is_identity());
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let l = z3.left_translations();
        assert!(l[0].is_identity());
        assert_eq!(l[1].images(), &[1, 2, 0]);
        for a in 0..21 {
            for b in 0..21 {
                let la = g21.left_translation(a);
                let lb = g21.left_translation(b);
                assert_eq!(la.compose(&lb), g21.left_translation(g21.mul(a, b)));
            }
        }
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(FiniteGroup::cyclic(7).unwrap().automorphisms().unwrap().len(), 6);
        assert_eq!(FiniteGroup::cyclic(9).unwrap().automorphisms().unwrap().len(), 6);
        // Aut of the nonabelian group of order 21 is the holomorph-like group of order 42
        assert_eq!(FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap().automorphisms().unwrap().len(), 42);
        let sum = FiniteGroup::direct_sum(&[FiniteGroup::cyclic(3).unwrap(), FiniteGroup::cyclic(3).unwrap()]).unwrap();
        assert_eq!(sum.automorphisms().unwrap().len(), 48);
    }
}
