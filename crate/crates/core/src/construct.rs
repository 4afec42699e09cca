//! Obverse classes, sign functions, chiralities and the regular RPS builders.
//!
//! Convention: `λ(obv(U)) = U` means the identity dominates `U`, that is
//! `f(e, .., e, u_1, .., u_k) = e` in `G_n(λ)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::arithmetic::{is_prime, require_admissible};
use crate::group::FiniteGroup;
use crate::kset::{ksets, KSet};
use crate::limits;
use crate::magma::{FiniteMagma, Pointing};
use crate::perm::Permutation;
use crate::{Error, Result};

/// `{U} ∪ {a⁻¹(U ∪ {e}) ∖ {e} : a ∈ U}`, sorted; the first member is the class key.
pub fn obverse_class(group: &FiniteGroup, set: &KSet) -> Result<Vec<KSet>> {
    let e = group.identity();
    if set.is_empty() {
        return Err(Error::DomainError("obverse class of the empty set".into()));
    }
    if let Some(&x) = set.elements().iter().find(|&&x| x >= group.order()) {
        return Err(Error::DomainError(format!("{x} is not an element of a group of order {}", group.order())));
    }
    if set.contains(e) {
        return Err(Error::ContainsIdentity(format!("{set} contains the identity {e}")));
    }
    if !crate::arithmetic::is_admissible(group.order(), set.len() + 1) {
        return Err(Error::TooLarge(format!(
            "{}-sets have degenerate obverse classes in a group of order {}",
            set.len(),
            group.order()
        )));
    }
    Ok(obverse_class_unchecked(group, set))
}

fn obverse_class_unchecked(group: &FiniteGroup, set: &KSet) -> Vec<KSet> {
    let e = group.identity();
    let whole = set.with(e);
    let mut class: Vec<KSet> =
        whole.iter().map(|w| group.translate(group.inv(w), &whole).without(e)).collect();
    class.sort();
    class.dedup();
    class
}

/// All obverse classes of `k`-subsets of `G ∖ {e}` for `1 <= k <= n-1`, ordered by `(k, key)`.
pub fn enumerate_obverse_classes(group: &FiniteGroup, n: usize) -> Result<Vec<Vec<KSet>>> {
    require_admissible(group.order(), n)?;
    crate::limits::checked_table_len(group.order(), n)?;
    let e = group.identity();
    let mut out = Vec::new();
    for k in 1..n {
        let mut seen = HashSet::new();
        for u in ksets(group.order(), k).filter(|u| !u.contains(e)) {
            if seen.contains(&u) {
                continue;
            }
            let class = obverse_class_unchecked(group, &u);
            seen.extend(class.iter().cloned());
            out.push(class);
        }
    }
    Ok(out)
}

/// An `n`-sign function: one chosen member per obverse class.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignFunction {
    order: usize,
    arity: usize,
    /// class key -> chosen member
    choices: BTreeMap<KSet, KSet>,
}

impl SignFunction {
    /// Builds λ from the chosen member of every class, in any order.
    pub fn from_choices(group: &FiniteGroup, n: usize, chosen: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let classes = enumerate_obverse_classes(group, n)?;
        let key_of = member_index(&classes);
        let mut choices = BTreeMap::new();
        for u in chosen {
            let &ci = key_of
                .get(&u)
                .ok_or_else(|| Error::InvalidSignFunction(format!("{u} is not in any obverse class of arity {n}")))?;
            let key = classes[ci][0].clone();
            if let Some(prev) = choices.insert(key.clone(), u.clone()) {
                return Err(Error::InvalidSignFunction(format!("class of {key} chosen twice ({prev} and {u})")));
            }
        }
        if let Some(class) = classes.iter().find(|c| !choices.contains_key(&c[0])) {
            return Err(Error::InvalidSignFunction(format!("no choice for the class of {}", class[0])));
        }
        Ok(SignFunction { order: group.order(), arity: n, choices })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    /// The chosen member of the class keyed by `key`.
    pub fn get(&self, key: &KSet) -> Option<&KSet> {
        self.choices.get(key)
    }

    /// `(class key, chosen member)` sorted by `(k, key)`.
    pub fn iter(&self) -> impl Iterator<Item = (&KSet, &KSet)> {
        self.choices.iter()
    }

    /// Chosen members sorted by `(k, class key)`.
    pub fn chosen(&self) -> impl Iterator<Item = &KSet> {
        self.choices.values()
    }

    /// Whether `set` is the chosen member of its class.
    pub fn is_chosen(&self, group: &FiniteGroup, set: &KSet) -> Result<bool> {
        let key = obverse_class(group, set)?.swap_remove(0);
        Ok(self.choices.get(&key) == Some(set))
    }

    /// Replaces the choice for the class containing `set`.
    pub fn set_choice(&mut self, group: &FiniteGroup, set: KSet) -> Result<()> {
        self.check_group(group)?;
        if set.len() >= self.arity {
            return Err(Error::InvalidSignFunction(format!("{set} is too large for arity {}", self.arity)));
        }
        let key = obverse_class(group, &set)?.swap_remove(0);
        self.choices.insert(key, set);
        Ok(())
    }

    /// Checks that the choices form a sign function on `group`.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        self.check_group(group)?;
        let rebuilt = SignFunction::from_choices(group, self.arity, self.choices.values().cloned())?;
        if rebuilt.choices != self.choices {
            return Err(Error::InvalidSignFunction("choices are keyed by the wrong classes".into()));
        }
        Ok(())
    }

    fn check_group(&self, group: &FiniteGroup) -> Result<()> {
        if group.order() != self.order {
            return Err(Error::InvalidSignFunction(format!(
                "sign function is for order {}, group has order {}",
                self.order,
                group.order()
            )));
        }
        Ok(())
    }

    fn chosen_set(&self) -> HashSet<&KSet> {
        self.choices.values().collect()
    }
}

fn member_index(classes: &[Vec<KSet>]) -> HashMap<KSet, usize> {
    classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |u| (u.clone(), i))).collect()
}

/// Colex-least member of every class.
pub fn canonical_lambda(group: &FiniteGroup, n: usize) -> Result<SignFunction> {
    let classes = enumerate_obverse_classes(group, n)?;
    let choices = classes.into_iter().map(|c| (c[0].clone(), c[0].clone())).collect();
    Ok(SignFunction { order: group.order(), arity: n, choices })
}

/// The regular RPS magma `G_n(λ)`.
pub fn build_regular(group: &FiniteGroup, n: usize, lambda: &SignFunction) -> Result<FiniteMagma> {
    require_admissible(group.order(), n)?;
    if lambda.arity() != n {
        return Err(Error::InvalidSignFunction(format!("sign function has arity {}, not {n}", lambda.arity())));
    }
    lambda.validate(group)?;
    FiniteMagma::from_pointing(&regular_pointing(group, n, lambda))
}

/// The pointing of `G_n(λ)`: the winner of `W` is the `w` with `w⁻¹W ∖ {e}` chosen.
pub fn regular_pointing(group: &FiniteGroup, n: usize, lambda: &SignFunction) -> Pointing {
    let chosen = lambda.chosen_set();
    let e = group.identity();
    Pointing::from_fn(group.order(), n, |w_set| {
        if w_set.len() == 1 {
            return w_set.elements()[0];
        }
        w_set
            .iter()
            .find(|&w| chosen.contains(&group.translate(group.inv(w), w_set).without(e)))
            .expect("validated sign function picks exactly one member per class")
    })
    .expect("admissible order and arity give a valid pointing")
}

/// Orbit representatives `β_k` and choices `γ_k(ψ) ∈ β_k(ψ)` for `k = 1..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chirality {
    order: usize,
    arity: usize,
    /// `beta[k-1][i]` represents the `i`-th orbit of `k`-sets (orbits ordered by least member).
    beta: Vec<Vec<KSet>>,
    gamma: Vec<Vec<usize>>,
}

impl Chirality {
    pub fn new(group: &FiniteGroup, n: usize, beta: Vec<Vec<KSet>>, gamma: Vec<Vec<usize>>) -> Result<Self> {
        require_admissible(group.order(), n)?;
        if beta.len() != n || gamma.len() != n {
            return Err(Error::InvalidChirality(format!("need representatives and choices for k = 1..{n}")));
        }
        for k in 1..=n {
            let family = group.k_extension_orbits(k)?;
            let (reps, picks) = (&beta[k - 1], &gamma[k - 1]);
            if reps.len() != family.len() || picks.len() != family.len() {
                return Err(Error::InvalidChirality(format!("k={k}: expected {} orbits", family.len())));
            }
            for (i, rep) in reps.iter().enumerate() {
                if rep.len() != k || rep.largest().is_some_and(|x| x >= group.order()) {
                    return Err(Error::InvalidChirality(format!("{rep} is not a {k}-set of the group")));
                }
                if family.orbit_index(rep) != i {
                    return Err(Error::InvalidChirality(format!("{rep} does not represent orbit {i} of {k}-sets")));
                }
                if !rep.contains(picks[i]) {
                    return Err(Error::InvalidChirality(format!("choice {} is not in {rep}", picks[i])));
                }
            }
        }
        Ok(Chirality { order: group.order(), arity: n, beta, gamma })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn beta(&self, k: usize) -> &[KSet] {
        &self.beta[k - 1]
    }

    pub fn gamma(&self, k: usize) -> &[usize] {
        &self.gamma[k - 1]
    }
}

/// Colex-least orbit representatives for `k = 1..n`.
pub fn default_beta(group: &FiniteGroup, n: usize) -> Result<Vec<Vec<KSet>>> {
    (1..=n).map(|k| Ok(group.k_extension_orbits(k)?.representatives())).collect()
}

/// For every `k`-set, the orbit it lies in and the `s` with `U = s·β(ψ)`.
fn orbit_coordinates(group: &FiniteGroup, reps: &[KSet]) -> HashMap<KSet, (usize, usize)> {
    let mut out = HashMap::new();
    for (i, rep) in reps.iter().enumerate() {
        for s in 0..group.order() {
            out.insert(group.translate(s, rep), (i, s));
        }
    }
    out
}

/// The α-action magma `G_n(β, γ)`: `g(sβ(ψ)) = s·γ(ψ)`.
pub fn build_from_chirality(group: &FiniteGroup, chirality: &Chirality) -> Result<FiniteMagma> {
    check_chirality_group(group, chirality)?;
    let coords: Vec<_> = (1..=chirality.arity).map(|k| orbit_coordinates(group, chirality.beta(k))).collect();
    let pointing = Pointing::from_fn(group.order(), chirality.arity, |u| {
        let k = u.len();
        let (i, s) = coords[k - 1][u];
        group.mul(s, chirality.gamma(k)[i])
    })?;
    FiniteMagma::from_pointing(&pointing)
}

fn check_chirality_group(group: &FiniteGroup, c: &Chirality) -> Result<()> {
    if c.order != group.order() {
        return Err(Error::InvalidChirality(format!("chirality is for order {}, group has order {}", c.order, group.order())));
    }
    Ok(())
}

/// `ζ⁻¹`: the chirality over representatives `beta` that produces the same magma as `λ`.
pub fn sign_to_chirality(
    group: &FiniteGroup,
    n: usize,
    lambda: &SignFunction,
    beta: Option<Vec<Vec<KSet>>>,
) -> Result<Chirality> {
    lambda.validate(group)?;
    if lambda.arity() != n {
        return Err(Error::InvalidSignFunction(format!("sign function has arity {}, not {n}", lambda.arity())));
    }
    let beta = match beta {
        Some(b) => b,
        None => default_beta(group, n)?,
    };
    let chosen = lambda.chosen_set();
    let e = group.identity();
    let gamma = beta
        .iter()
        .map(|reps| {
            reps.iter()
                .map(|b| {
                    if b.len() == 1 {
                        return Ok(b.elements()[0]);
                    }
                    b.iter()
                        .find(|&a| chosen.contains(&group.translate(group.inv(a), b).without(e)))
                        .ok_or_else(|| Error::InvalidChirality(format!("{b} is not a valid representative")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Chirality::new(group, n, beta, gamma)
}

/// `ζ`: the sign function of the magma a chirality produces.
pub fn chirality_to_sign(group: &FiniteGroup, chirality: &Chirality) -> Result<SignFunction> {
    check_chirality_group(group, chirality)?;
    let n = chirality.arity;
    let e = group.identity();
    let classes = enumerate_obverse_classes(group, n)?;
    let coords: Vec<_> = (2..=n).map(|k| orbit_coordinates(group, chirality.beta(k))).collect();
    let chosen = classes.iter().map(|class| {
        let whole = class[0].with(e);
        let k = whole.len();
        let (i, s) = coords[k - 2][&whole];
        let w = group.mul(s, chirality.gamma(k)[i]);
        group.translate(group.inv(w), &whole).without(e)
    });
    SignFunction::from_choices(group, n, chosen)
}

/// Every sign function, odometer order over classes sorted by `(k, key)` with members in colex order.
pub fn enumerate_sign_functions(group: &FiniteGroup, n: usize) -> Result<SignFunctions> {
    let classes = enumerate_obverse_classes(group, n)?;
    let total = classes.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    limits::check("sign functions", total, limits::search_cap())?;
    Ok(SignFunctions { order: group.order(), arity: n, digits: Some(vec![0; classes.len()]), classes })
}

/// Iterator returned by [`enumerate_sign_functions`].
pub struct SignFunctions {
    order: usize,
    arity: usize,
    classes: Vec<Vec<KSet>>,
    digits: Option<Vec<usize>>,
}

impl Iterator for SignFunctions {
    type Item = SignFunction;

    fn next(&mut self) -> Option<SignFunction> {
        let digits = self.digits.as_mut()?;
        let choices = self.classes.iter().zip(digits.iter()).map(|(c, &d)| (c[0].clone(), c[d].clone())).collect();
        let out = SignFunction { order: self.order, arity: self.arity, choices };
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.classes[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
        Some(out)
    }
}

/// A sign function invariant under every map in `maps` (a set of group automorphisms closed
/// under composition). Each orbit of classes takes its choice from `seed` when a seed set lies
/// in it, otherwise from the colex-least member of its least class.
pub fn equivariant_lambda(
    group: &FiniteGroup,
    n: usize,
    maps: &[Permutation],
    seed: &[KSet],
) -> Result<SignFunction> {
    let classes = enumerate_obverse_classes(group, n)?;
    let key_of = member_index(&classes);
    for phi in maps {
        if !group.is_automorphism(phi) {
            return Err(Error::DomainError(format!("{phi} is not a group automorphism")));
        }
    }
    let mut seed_for: HashMap<usize, &KSet> = HashMap::new();
    for u in seed {
        let &ci = key_of
            .get(u)
            .ok_or_else(|| Error::InvalidSignFunction(format!("seed {u} is not in any obverse class of arity {n}")))?;
        seed_for.insert(ci, u);
    }
    let mut choice: Vec<Option<KSet>> = vec![None; classes.len()];
    for start in 0..classes.len() {
        if choice[start].is_some() {
            continue;
        }
        let orbit: Vec<usize> = {
            let mut v: Vec<usize> = maps.iter().map(|phi| key_of[&group.image(phi, &classes[start][0])]).collect();
            v.push(start);
            v.sort_unstable();
            v.dedup();
            v
        };
        let seeds: Vec<(usize, &KSet)> =
            orbit.iter().filter_map(|ci| seed_for.get(ci).map(|u| (*ci, *u))).collect();
        let (base, pick) = match seeds.as_slice() {
            [] => (start, classes[start][0].clone()),
            [(ci, u)] => (*ci, (*u).clone()),
            _ => {
                return Err(Error::InvalidSignFunction(format!(
                    "seeds {} and {} lie in the same orbit",
                    seeds[0].1, seeds[1].1
                )))
            }
        };
        for phi in std::iter::once(None).chain(maps.iter().map(Some)) {
            let (target, image) = match phi {
                None => (base, pick.clone()),
                Some(phi) => (key_of[&group.image(phi, &classes[base][0])], group.image(phi, &pick)),
            };
            match &choice[target] {
                Some(prev) if *prev != image => {
                    return Err(Error::ConflictingConstraints(format!(
                        "the class of {} would need both {prev} and {image}",
                        classes[target][0]
                    )))
                }
                Some(_) => {}
                None => choice[target] = Some(image),
            }
        }
    }
    SignFunction::from_choices(group, n, choice.into_iter().map(|c| c.expect("every orbit assigned")))
}

/// A sign function constant on `Inn(G)`-orbits of obverse classes.
pub fn correlated_lambda(group: &FiniteGroup, n: usize, seed: &[KSet]) -> Result<SignFunction> {
    require_admissible(group.order(), n)?;
    equivariant_lambda(group, n, &group.inner_automorphisms(), seed)
}

/// Least primitive root modulo a prime `p`.
pub fn least_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    Ok((2..p)
        .find(|&r| factors.iter().all(|&q| mod_pow(r, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root"))
}

fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// A sign function on `ℤ_p` invariant under `x ↦ tx`.
pub fn multiplier_lambda(p: usize, n: usize, t: usize) -> Result<SignFunction> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if t.is_multiple_of(p) {
        return Err(Error::BadMultiplier(format!("{t} is not a unit mod {p}")));
    }
    let group = FiniteGroup::cyclic(p)?;
    let mut maps = Vec::new();
    let mut power = t % p;
    while power != 1 {
        maps.push(Permutation::new((0..p).map(|x| x * power % p).collect())?);
        power = power * t % p;
    }
    equivariant_lambda(&group, n, &maps, &[])
}

/// A sign function on `ℤ_p` with extra multiplicative symmetry, and the multiplier `t` it
/// is invariant under.
///
/// The primitive root `r` itself never works once `n >= 2`: `x ↦ r^((p-1)/2) x` is negation,
/// which swaps the two members of every class `{{a}, {-a}}`. The search therefore tries
/// `t = r^d` for the divisors `d < p-1` of `p-1` in increasing order and returns the first
/// that admits an invariant sign function.
pub fn primitive_root_lambda(p: usize, n: usize) -> Result<(SignFunction, usize)> {
    if !is_prime(p as u64) || p == 2 {
        return Err(Error::NotPrime(p as u64));
    }
    if n < 2 {
        return Err(Error::DegenerateArity(format!("arity {n} has no obverse classes")));
    }
    if n + 2 > p {
        return Err(Error::ArityTooLarge(format!("arity {n} exceeds {} for p = {p}", p - 2)));
    }
    let r = least_primitive_root(p as u64)? as usize;
    let mut last = None;
    for d in (1..p - 1).filter(|d| (p - 1).is_multiple_of(*d)) {
        let t = mod_pow(r as u64, d as u64, p as u64) as usize;
        match multiplier_lambda(p, n, t) {
            Ok(lambda) => return Ok((lambda, t)),
            Err(err @ Error::ConflictingConstraints(_)) => last = Some(err),
            Err(err) => return Err(err),
        }
    }
    Err(last.unwrap_or_else(|| Error::ConflictingConstraints(format!("no multiplier for p = {p}"))))
}

/// A sign function on `ℤ_{p^k}` with no nontrivial proper convex subgroup.
pub fn simple_lambda(p: usize, k: usize, n: usize) -> Result<SignFunction> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(Error::DomainError("exponent k must be at least 1".into()));
    }
    let m = p.checked_pow(k as u32).ok_or_else(|| Error::TooLarge(format!("{p}^{k}")))?;
    let group = FiniteGroup::cyclic(m)?;
    require_admissible(m, n)?;
    if n < 2 {
        return Err(Error::DegenerateArity(format!("arity {n} has no obverse classes")));
    }
    let mut lambda = canonical_lambda(&group, n)?;
    for i in 1..k {
        let a = p.pow((k - i - 1) as u32);
        let b = a + p.pow((k - i) as u32);
        lambda.set_choice(&group, KSet::from([a]))?;
        lambda.set_choice(&group, KSet::from([m - b]))?;
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: usize) -> FiniteGroup {
        FiniteGroup::cyclic(m).unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<KSet> {
        v.iter().map(|s| KSet::new(s.iter().copied())).collect()
    }

    #[test]
    fn obverse_examples() {
        assert_eq!(obverse_class(&z(3), &KSet::from([1])).unwrap(), sets(&[&[1], &[2]]));
        assert_eq!(obverse_class(&z(7), &KSet::from([1, 3])).unwrap(), sets(&[&[1, 3], &[4, 5], &[2, 6]]));
        assert_eq!(obverse_class(&z(5), &KSet::from([2])).unwrap(), sets(&[&[2], &[3]]));
        assert!(matches!(obverse_class(&z(5), &KSet::from([0, 1])), Err(Error::ContainsIdentity(_))));
        assert!(matches!(obverse_class(&z(5), &KSet::from([1, 2, 3, 4])), Err(Error::TooLarge(_))));
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_obverse_classes(&z(5), 2).unwrap(), vec![sets(&[&[1], &[4]]), sets(&[&[2], &[3]])]);
        assert_eq!(enumerate_obverse_classes(&z(3), 2).unwrap().len(), 1);
        let c = enumerate_obverse_classes(&z(5), 3).unwrap();
        assert_eq!(c.iter().map(|c| (c[0].len(), c.len())).collect::<Vec<_>>(), vec![(1, 2), (1, 2), (2, 3), (2, 3)]);
        assert!(matches!(enumerate_obverse_classes(&z(4), 2), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn sign_function_validation() {
        let g = z(5);
        assert!(SignFunction::from_choices(&g, 2, sets(&[&[4], &[2]])).is_ok());
        assert!(matches!(SignFunction::from_choices(&g, 2, sets(&[&[4], &[1]])), Err(Error::InvalidSignFunction(_))));
        assert!(matches!(SignFunction::from_choices(&g, 2, sets(&[&[4]])), Err(Error::InvalidSignFunction(_))));
        let canon = canonical_lambda(&g, 2).unwrap();
        assert_eq!(canon.chosen().cloned().collect::<Vec<_>>(), sets(&[&[1], &[2]]));
    }

    #[test]
    fn rps_from_lambda() {
        let g = z(3);
        let lambda = SignFunction::from_choices(&g, 2, sets(&[&[2]])).unwrap();
        let a = build_regular(&g, 2, &lambda).unwrap();
        assert_eq!(a.table(), &[0, 1, 0, 1, 1, 2, 0, 2, 2]);
    }

    #[test]
    fn chirality_round_trip() {
        let g = z(5);
        for lambda in enumerate_sign_functions(&g, 3).unwrap() {
            let c = sign_to_chirality(&g, 3, &lambda, None).unwrap();
            assert_eq!(chirality_to_sign(&g, &c).unwrap(), lambda);
            assert_eq!(build_from_chirality(&g, &c).unwrap(), build_regular(&g, 3, &lambda).unwrap());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_sign_functions(&z(3), 2).unwrap().count(), 2);
        assert_eq!(enumerate_sign_functions(&z(5), 2).unwrap().count(), 4);
        assert_eq!(enumerate_sign_functions(&z(5), 3).unwrap().count(), 36);
    }

    #[test]
    fn multiplier_constructions() {
        assert!(matches!(multiplier_lambda(7, 2, 3), Err(Error::ConflictingConstraints(_))));
        let (lambda, t) = primitive_root_lambda(7, 2).unwrap();
        assert_eq!(t, 2);
        assert_eq!(lambda.chosen().cloned().collect::<Vec<_>>(), sets(&[&[1], &[2], &[4]]));
        assert!(matches!(primitive_root_lambda(5, 2), Err(Error::ConflictingConstraints(_))));
        assert!(matches!(primitive_root_lambda(3, 1), Err(Error::DegenerateArity(_))));
        assert!(matches!(primitive_root_lambda(7, 6), Err(Error::ArityTooLarge(_))));
        assert!(matches!(primitive_root_lambda(9, 2), Err(Error::NotPrime(9))));
        assert_eq!(least_primitive_root(7).unwrap(), 3);
        assert_eq!(least_primitive_root(5).unwrap(), 2);
    }

    #[test]
    fn simple_recipe() {
        let lambda = simple_lambda(3, 2, 2).unwrap();
        let g = z(9);
        assert_eq!(lambda.get(&KSet::from([1])), Some(&KSet::from([1])));
        assert_eq!(lambda.get(&KSet::from([4])), Some(&KSet::from([5])));
        assert!(lambda.validate(&g).is_ok());
        assert_eq!(simple_lambda(5, 1, 2).unwrap(), canonical_lambda(&z(5), 2).unwrap());
    }
}
