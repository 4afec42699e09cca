//! Pointed hypertournaments, tournament doubling and regular balanced embeddings.

use crate::arithmetic::{is_admissible, next_prime_after};
use crate::construct::{build_regular, canonical_lambda};
use crate::group::FiniteGroup;
use crate::kset::{ksets, KSet};
use crate::magma::{FiniteMagma, Pointing};
use crate::{Error, Result};

/// A conservative pointing of the `n`-complete hypergraph on `{0, .., m-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointedHypertournament {
    pointing: Pointing,
}

impl PointedHypertournament {
    pub fn new(pointing: Pointing) -> Result<Self> {
        if let Some((u, w)) = pointing.iter().find(|(u, w)| !u.contains(*w)) {
            return Err(Error::InvalidPointing(format!("winner {w} of {u} is not a member")));
        }
        Ok(PointedHypertournament { pointing })
    }

    /// From `(edge, winner)` pairs covering every edge of size `2..=n`; singletons are implied.
    pub fn from_edges(order: usize, arity: usize, edges: impl IntoIterator<Item = (KSet, usize)>) -> Result<Self> {
        let singles = (0..order).map(|x| (KSet::from([x]), x));
        let pairs: Vec<(KSet, usize)> = edges.into_iter().filter(|(u, _)| u.len() > 1).chain(singles).collect();
        PointedHypertournament::new(Pointing::from_pairs(order, arity, pairs)?)
    }

    /// The tournament with `u → v` exactly when `beats(u, v)`; `beats` must be antisymmetric and total.
    pub fn tournament(order: usize, beats: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let p = Pointing::from_fn(order, 2, |u| match u.elements() {
            [x] => *x,
            [x, y] => {
                if beats(*x, *y) {
                    *x
                } else {
                    *y
                }
            }
            _ => unreachable!(),
        })?;
        let t = PointedHypertournament::new(p)?;
        for x in 0..order {
            for y in 0..order {
                if x != y && beats(x, y) == beats(y, x) {
                    return Err(Error::InvalidPointing(format!("exactly one of {x}→{y}, {y}→{x} must hold")));
                }
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.pointing.order()
    }

    pub fn arity(&self) -> usize {
        self.pointing.arity()
    }

    pub fn pointing(&self) -> &Pointing {
        &self.pointing
    }

    pub fn winner(&self, edge: &KSet) -> usize {
        self.pointing.get(edge)
    }

    /// Edges with at least two vertices, in `(k, colex)` order.
    pub fn edges(&self) -> impl Iterator<Item = (KSet, usize)> + '_ {
        self.pointing.iter().filter(|(u, _)| u.len() > 1)
    }

    pub fn to_magma(&self) -> Result<FiniteMagma> {
        FiniteMagma::from_pointing(&self.pointing)
    }

    pub fn from_magma(a: &FiniteMagma) -> Result<Self> {
        let pointing = a.extract_pointing().map_err(|e| Error::NotHypertournamentMagma(e.to_string()))?;
        if let Some((u, w)) = pointing.iter().find(|(u, w)| !u.contains(*w)) {
            let mut tuple: Vec<usize> = u.elements().to_vec();
            tuple.resize(a.arity(), u.elements()[u.len() - 1]);
            return Err(Error::NotHypertournamentMagma(format!(
                "not conservative: f{tuple:?} = {w} is not a component"
            )));
        }
        Ok(PointedHypertournament { pointing })
    }

    /// Number of `k`-edges each vertex wins, indexed `[k-1][vertex]`.
    pub fn win_counts(&self) -> Vec<Vec<usize>> {
        let top = self.arity().min(self.order());
        let mut out = vec![vec![0; self.order()]; top];
        for (u, w) in self.pointing.iter() {
            out[u.len() - 1][w] += 1;
        }
        out
    }

    /// Every vertex wins equally many `k`-edges, for every `k`.
    pub fn is_balanced(&self) -> bool {
        self.win_counts().iter().all(|row| row.windows(2).all(|w| w[0] == w[1]))
    }

    /// `g({u} ∪ V) = u`.
    pub fn dominates(&self, u: usize, v: &KSet) -> Result<bool> {
        if u >= self.order() || v.largest().is_some_and(|x| x >= self.order()) {
            return Err(Error::BadArity(format!("{u} or {v} is outside the vertex set")));
        }
        if v.contains(u) {
            return Err(Error::BadArity(format!("{u} is a member of {v}")));
        }
        if v.is_empty() || v.len() + 1 > self.arity() {
            return Err(Error::BadArity(format!("{v} must have between 1 and {} members", self.arity() - 1)));
        }
        Ok(self.winner(&v.with(u)) == u)
    }
}

/// An injective vertex map carrying every dominance fact of `source` into `target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingWitness {
    pub source: PointedHypertournament,
    pub target: PointedHypertournament,
    pub map: Vec<usize>,
}

impl EmbeddingWitness {
    pub fn validate(&self) -> Result<()> {
        let m = self.source.order();
        if self.map.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: self.map.len() });
        }
        let mut seen = vec![false; self.target.order()];
        for &y in &self.map {
            if y >= self.target.order() || std::mem::replace(&mut seen[y], true) {
                return Err(Error::DomainError(format!("vertex map is not injective into the target at {y}")));
            }
        }
        if self.target.arity() < self.source.arity().min(m) {
            return Err(Error::BadArity("target arity is smaller than the source edges".into()));
        }
        for (u, w) in self.source.edges() {
            let image = u.map(|x| self.map[x]);
            if self.target.winner(&image) != self.map[w] {
                return Err(Error::DomainError(format!("edge {u} won by {w} is not preserved")));
            }
        }
        Ok(())
    }
}

/// Balanced tournament on `2r + 1` vertices containing `t` as the subtournament on `0..r`.
///
/// Vertex `u` has copies `u` and `r + u`; vertex `2r` is the extra point `η`.
pub fn double_tournament(t: &PointedHypertournament) -> Result<(PointedHypertournament, EmbeddingWitness)> {
    if t.arity() != 2 {
        return Err(Error::ArityNot2(t.arity()));
    }
    let r = t.order();
    let eta = 2 * r;
    let beats_src = |u: usize, v: usize| t.winner(&KSet::from([u, v])) == u;
    let beats = |x: usize, y: usize| -> bool {
        if x == eta {
            return y < r;
        }
        if y == eta {
            return x >= r;
        }
        let (u, i) = (x % r, x / r);
        let (v, j) = (y % r, y / r);
        if u == v {
            return i == 0;
        }
        if i == j {
            beats_src(u, v)
        } else {
            beats_src(v, u)
        }
    };
    let doubled = PointedHypertournament::tournament(2 * r + 1, beats)?;
    let witness = EmbeddingWitness { source: t.clone(), target: doubled.clone(), map: (0..r).collect() };
    witness.validate()?;
    Ok((doubled, witness))
}

/// Embeds `t` into a regular balanced hypertournament over `⊕ ℤ_{α_u}`, vertex `u` going to
/// the `u`-th standard generator. Defaults to `α_u = κ(n)` for every vertex.
pub fn embed_regular(
    t: &PointedHypertournament,
    alphas: Option<&[usize]>,
) -> Result<(FiniteMagma, EmbeddingWitness)> {
    let (m, n) = (t.order(), t.arity());
    let alphas: Vec<usize> = match alphas {
        Some(a) if a.len() != m => return Err(Error::LengthMismatch { expected: m, got: a.len() }),
        Some(a) => a.to_vec(),
        None => vec![next_prime_after(n as u64) as usize; m],
    };
    if let Some(&bad) = alphas.iter().find(|&&a| !is_admissible(a, n)) {
        return Err(Error::BadModulus(format!("ℤ_{bad} carries no regular {n}-ary RPS structure")));
    }
    let order = alphas.iter().try_fold(1usize, |acc, &a| acc.checked_mul(a)).unwrap_or(usize::MAX);
    crate::limits::checked_table_len(order, n)?;
    let parts = alphas.iter().map(|&a| FiniteGroup::cyclic(a)).collect::<Result<Vec<_>>>()?;
    let group = FiniteGroup::direct_sum(&parts)?;
    let generator = |u: usize| alphas[u + 1..].iter().product::<usize>();
    let map: Vec<usize> = (0..m).map(generator).collect();
    let mut lambda = canonical_lambda(&group, n)?;
    let e = group.identity();
    let mut fixed: std::collections::HashMap<KSet, KSet> = std::collections::HashMap::new();
    for (edge, w) in t.edges() {
        let image = edge.map(|x| map[x]);
        let chosen = group.translate(group.inv(map[w]), &image).without(e);
        let key = crate::construct::obverse_class(&group, &chosen)?.swap_remove(0);
        match fixed.get(&key) {
            Some(prev) if *prev != chosen => {
                return Err(Error::ConflictingConstraints(format!("class of {key} needs both {prev} and {chosen}")))
            }
            _ => {
                fixed.insert(key, chosen.clone());
                lambda.set_choice(&group, chosen)?;
            }
        }
    }
    let magma = build_regular(&group, n, &lambda)?;
    let target = PointedHypertournament::from_magma(&magma)?;
    let witness = EmbeddingWitness { source: t.clone(), target, map };
    witness.validate()?;
    Ok((magma, witness))
}

/// Every tournament on `m` labelled vertices, in binary order of the edge orientations.
pub fn all_tournaments(m: usize) -> Result<Vec<PointedHypertournament>> {
    let edges: Vec<KSet> = ksets(m, 2).collect();
    crate::limits::check("labelled tournaments", 1u128 << edges.len().min(127), crate::limits::search_cap())?;
    (0..1u64 << edges.len())
        .map(|bits| {
            let pairs = edges
                .iter()
                .enumerate()
                .map(|(i, u)| (u.clone(), if bits >> i & 1 == 0 { u.elements()[0] } else { u.elements()[1] }));
            PointedHypertournament::from_edges(m, 2, pairs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rps() -> FiniteMagma {
        FiniteMagma::new(3, 2, vec![0, 1, 0, 1, 1, 2, 0, 2, 2]).unwrap()
    }

    #[test]
    fn rps_round_trip() {
        let t = PointedHypertournament::from_magma(&rps()).unwrap();
        assert!(t.dominates(1, &KSet::from([0])).unwrap());
        assert!(t.dominates(0, &KSet::from([2])).unwrap());
        assert!(t.dominates(2, &KSet::from([1])).unwrap());
        assert!(t.is_balanced());
        assert_eq!(t.to_magma().unwrap(), rps());
        assert!(matches!(t.dominates(0, &KSet::from([0])), Err(Error::BadArity(_))));
    }

    #[test]
    fn non_conservative_rejected() {
        let b = FiniteMagma::new(3, 2, vec![1, 2, 1, 2, 2, 0, 1, 0, 0]).unwrap();
        assert!(matches!(PointedHypertournament::from_magma(&b), Err(Error::NotHypertournamentMagma(_))));
    }

    #[test]
    fn doubling_small() {
        let single = PointedHypertournament::tournament(1, |_, _| false).unwrap();
        let (d, _) = double_tournament(&single).unwrap();
        assert_eq!(d.order(), 3);
        assert!(d.is_balanced());
        let pair = PointedHypertournament::tournament(2, |u, v| u < v).unwrap();
        let (d, w) = double_tournament(&pair).unwrap();
        assert_eq!(d.win_counts()[1], vec![2; 5]);
        assert!(w.validate().is_ok());
    }

    #[test]
    fn embedding_small() {
        let pair = PointedHypertournament::tournament(2, |u, v| u < v).unwrap();
        let (a, w) = embed_regular(&pair, None).unwrap();
        assert_eq!(a.order(), 9);
        assert_eq!(w.map, vec![3, 1]);
        assert!(w.target.dominates(3, &KSet::from([1])).unwrap());
        let single = PointedHypertournament::tournament(1, |_, _| false).unwrap();
        assert_eq!(embed_regular(&single, None).unwrap().0.order(), 3);
        assert!(matches!(embed_regular(&pair, Some(&[3, 4])), Err(Error::BadModulus(_))));
    }

    #[test]
    fn tournament_count() {
        assert_eq!(all_tournaments(3).unwrap().len(), 8);
    }
}
