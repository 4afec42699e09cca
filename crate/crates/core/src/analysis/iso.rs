//! Isomorphism search between magmas, and automorphism groups.

use crate::construct::SignFunction;
use crate::group::FiniteGroup;
use crate::limits;
use crate::magma::{for_each_tuple, FiniteMagma};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Per-element data preserved by every isomorphism: how often the element is the output on
/// tuples with `k` distinct components, whether it is idempotent, and how often
/// `f(a, ..) = a` with `a` in first position.
fn invariants(a: &FiniteMagma) -> Vec<Vec<u64>> {
    let m = a.order();
    let report = a.classify();
    let mut first_self = vec![0u64; m];
    for_each_tuple(m, a.arity(), |idx, t| {
        if a.table()[idx] == t[0] {
            first_self[t[0]] += 1;
        }
    });
    (0..m)
        .map(|x| {
            let mut v: Vec<u64> = report.per_k_counts.iter().map(|row| row[x]).collect();
            v.push(u64::from(a.apply(&vec![x; a.arity()]) == x));
            v.push(first_self[x]);
            v
        })
        .collect()
}

struct Search<'a> {
    a: &'a FiniteMagma,
    b: &'a FiniteMagma,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    forced: Vec<usize>,
    limit: usize,
    found: Vec<Permutation>,
    args: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn run(&mut self, i: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        let m = self.a.order();
        if i == m {
            let phi = Permutation::new(self.map.clone()).expect("injective total map");
            if maps_onto(self.a, self.b, &phi) {
                self.found.push(phi);
            }
            return;
        }
        let options: Vec<usize> = if self.forced[i] != UNSET {
            vec![self.forced[i]]
        } else {
            self.candidates[i].clone()
        };
        for y in options {
            if self.used[y] || !self.candidates[i].contains(&y) {
                continue;
            }
            if self.forced[i] == UNSET && self.forced.contains(&y) {
                continue;
            }
            self.map[i] = y;
            self.used[y] = true;
            let mut newly_forced = Vec::new();
            if self.consistent(i, &mut newly_forced) {
                self.run(i + 1);
            }
            for v in newly_forced {
                self.forced[v] = UNSET;
            }
            self.used[y] = false;
            self.map[i] = UNSET;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }

    /// Checks every tuple over `{0..=i}` that uses `i`.
    fn consistent(&mut self, i: usize, newly_forced: &mut Vec<usize>) -> bool {
        let n = self.a.arity();
        let mut ok = true;
        let (a, b) = (self.a, self.b);
        let mut args = std::mem::take(&mut self.args);
        for_each_tuple(i + 1, n, |_, t| {
            if !ok || !t.contains(&i) {
                return;
            }
            for (slot, &x) in args.iter_mut().zip(t) {
                *slot = self.map[x];
            }
            let image = b.apply(&args);
            let v = a.apply(t);
            if self.map[v] != UNSET {
                ok = self.map[v] == image;
            } else if self.forced[v] != UNSET {
                ok = self.forced[v] == image;
            } else if self.used[image] || self.forced.contains(&image) {
                ok = false;
            } else {
                self.forced[v] = image;
                newly_forced.push(v);
            }
        });
        self.args = args;
        ok
    }
}

fn maps_onto(a: &FiniteMagma, b: &FiniteMagma, phi: &Permutation) -> bool {
    let mut args = vec![0; a.arity()];
    let mut ok = true;
    for_each_tuple(a.order(), a.arity(), |idx, t| {
        if ok {
            for (slot, &x) in args.iter_mut().zip(t) {
                *slot = phi.apply(x);
            }
            ok = b.apply(&args) == phi.apply(a.table()[idx]);
        }
    });
    ok
}

/// Isomorphisms `a → b` in lexicographic order of images, at most `limit` of them.
pub fn isomorphisms(a: &FiniteMagma, b: &FiniteMagma, limit: Option<usize>) -> Vec<Permutation> {
    if a.order() != b.order() || a.arity() != b.arity() {
        return Vec::new();
    }
    let (ia, ib) = (invariants(a), invariants(b));
    let m = a.order();
    let candidates: Vec<Vec<usize>> = (0..m).map(|x| (0..m).filter(|&y| ia[x] == ib[y]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut search = Search {
        a,
        b,
        candidates,
        map: vec![UNSET; m],
        used: vec![false; m],
        forced: vec![UNSET; m],
        limit: limit.unwrap_or(usize::MAX),
        found: Vec::new(),
        args: vec![0; a.arity()],
    };
    search.run(0);
    search.found
}

/// Largest order whose automorphism group is searched, by arity.
pub fn automorphism_order_cap(arity: usize) -> usize {
    let base = match arity {
        0..=2 => 12,
        3 => 9,
        _ => 7,
    };
    let scale = (limits::search_cap() / limits::DEFAULT_SEARCH_CAP).max(1);
    base * scale as usize
}

/// The full automorphism group, sorted.
pub fn automorphisms(a: &FiniteMagma) -> Result<Vec<Permutation>> {
    let cap = automorphism_order_cap(a.arity());
    limits::check("magma order for automorphism search", a.order() as u128, cap as u64)?;
    let mut out = isomorphisms(a, a, None);
    out.sort();
    Ok(out)
}

/// `φ(f(x̄)) = f(φ(x̄))` for every tuple.
pub fn is_automorphism(a: &FiniteMagma, phi: &Permutation) -> bool {
    phi.degree() == a.order() && maps_onto(a, a, phi)
}

/// Group automorphisms `φ` that send chosen sets to chosen sets.
pub fn lambda_automorphisms(group: &FiniteGroup, n: usize, lambda: &SignFunction) -> Result<Vec<Permutation>> {
    lambda.validate(group)?;
    if lambda.arity() != n {
        return Err(Error::InvalidSignFunction(format!("sign function has arity {}, not {n}", lambda.arity())));
    }
    let mut out = Vec::new();
    for phi in group.automorphisms()? {
        if preserves(group, lambda, &phi) {
            out.push(phi);
        }
    }
    Ok(out)
}

fn preserves(group: &FiniteGroup, lambda: &SignFunction, phi: &Permutation) -> bool {
    lambda.chosen().all(|u| lambda.is_chosen(group, &group.image(phi, u)).unwrap_or(false))
}

/// Whether every inner automorphism is a λ-automorphism.
pub fn is_correlated(group: &FiniteGroup, n: usize, lambda: &SignFunction) -> Result<bool> {
    lambda.validate(group)?;
    if lambda.arity() != n {
        return Err(Error::InvalidSignFunction(format!("sign function has arity {}, not {n}", lambda.arity())));
    }
    Ok(group.inner_automorphisms().iter().all(|c| preserves(group, lambda, c)))
}
