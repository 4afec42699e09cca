//! Tables and pointings transcribed verbatim, plus small helpers shared by the test targets.
#![allow(dead_code)]

use magma_forge_core::construct::{build_from_chirality, default_beta, Chirality};
use magma_forge_core::{FiniteGroup, FiniteMagma, KSet, Pointing};

pub fn rps() -> FiniteMagma {
    FiniteMagma::new(3, 2, vec![0, 1, 0, 1, 1, 2, 0, 2, 2]).unwrap()
}

/// Rock, paper, scissors, well.
pub fn french() -> FiniteMagma {
    FiniteMagma::new(4, 2, vec![0, 1, 0, 3, 1, 1, 2, 1, 0, 2, 2, 3, 3, 1, 3, 3]).unwrap()
}

/// Rock, paper, scissors, Spock, lizard.
pub fn rpssl() -> FiniteMagma {
    #[rustfmt::skip]
    let t = vec![
        0, 1, 0, 3, 0,
        1, 1, 2, 1, 4,
        0, 2, 2, 3, 2,
        3, 1, 3, 3, 4,
        0, 4, 2, 4, 4,
    ];
    FiniteMagma::new(5, 2, t).unwrap()
}

/// The five slices `f(x, ·, ·)` of the ternary example on five items.
#[rustfmt::skip]
pub const TERNARY_SLICES: [[usize; 25]; 5] = [
    [0, 1, 0, 3, 0,
     1, 1, 0, 0, 4,
     0, 0, 0, 2, 4,
     3, 0, 2, 3, 3,
     0, 4, 4, 3, 0],
    [1, 1, 0, 0, 4,
     1, 1, 2, 1, 4,
     0, 2, 2, 1, 1,
     0, 1, 1, 1, 3,
     4, 4, 1, 3, 4],
    [0, 0, 0, 2, 4,
     0, 2, 2, 1, 1,
     0, 2, 2, 3, 2,
     2, 1, 3, 3, 2,
     4, 1, 2, 2, 2],
    [3, 0, 2, 3, 3,
     0, 1, 1, 1, 3,
     2, 1, 3, 3, 2,
     3, 1, 3, 3, 4,
     3, 3, 2, 4, 4],
    [0, 4, 4, 3, 0,
     4, 4, 1, 3, 4,
     4, 1, 2, 2, 2,
     3, 3, 2, 4, 4,
     0, 4, 2, 4, 4],
];

pub fn ternary() -> FiniteMagma {
    FiniteMagma::new(5, 3, TERNARY_SLICES.concat()).unwrap()
}

fn pairs(rows: &[(&[usize], usize)]) -> Vec<(KSet, usize)> {
    rows.iter().map(|(u, w)| (KSet::new(u.iter().copied()), *w)).collect()
}

/// The pointing printed next to the three-item game: `01 -> 0, 12 -> 1, 20 -> 2`.
pub fn rps_pointing_as_printed() -> Pointing {
    Pointing::from_pairs(3, 2, pairs(&[(&[0], 0), (&[1], 1), (&[2], 2), (&[0, 1], 0), (&[1, 2], 1), (&[0, 2], 2)]))
        .unwrap()
}

const RPSSL_ROWS: [(&[usize], usize); 15] = [
    (&[0], 0),
    (&[1], 1),
    (&[2], 2),
    (&[3], 3),
    (&[4], 4),
    (&[0, 1], 1),
    (&[1, 2], 2),
    (&[2, 3], 3),
    (&[3, 4], 4),
    (&[0, 4], 0),
    (&[0, 2], 0),
    (&[1, 3], 1),
    (&[2, 4], 2),
    (&[0, 3], 3),
    (&[1, 4], 4),
];

pub fn rpssl_pointing() -> Pointing {
    Pointing::from_pairs(5, 2, pairs(&RPSSL_ROWS)).unwrap()
}

pub fn ternary_pointing() -> Pointing {
    let triples: [(&[usize], usize); 10] = [
        (&[0, 1, 2], 0),
        (&[1, 2, 3], 1),
        (&[2, 3, 4], 2),
        (&[0, 3, 4], 3),
        (&[0, 1, 4], 4),
        (&[0, 1, 3], 0),
        (&[1, 2, 4], 1),
        (&[0, 2, 3], 2),
        (&[1, 3, 4], 3),
        (&[0, 2, 4], 4),
    ];
    let mut rows = pairs(&RPSSL_ROWS);
    rows.extend(pairs(&triples));
    Pointing::from_pairs(5, 3, rows).unwrap()
}

/// The order-7 balanced tournament that is not regular.
pub fn hexagonal_pyramid() -> FiniteMagma {
    #[rustfmt::skip]
    let t = vec![
        0, 1, 0, 3, 4, 0, 0,
        1, 1, 2, 1, 1, 5, 6,
        0, 2, 2, 3, 2, 5, 2,
        3, 1, 3, 3, 4, 3, 6,
        4, 1, 2, 4, 4, 5, 4,
        0, 5, 5, 3, 5, 5, 6,
        0, 6, 2, 6, 4, 6, 6,
    ];
    FiniteMagma::new(7, 2, t).unwrap()
}

/// The three-item game with outputs cycled `r -> p -> s -> r`.
pub fn b_sigma() -> FiniteMagma {
    FiniteMagma::new(3, 2, vec![1, 2, 1, 2, 2, 0, 1, 0, 0]).unwrap()
}

/// `2^i x + b` in the order-21 group is stored as `7i + b`.
pub fn poly(a: usize, b: usize) -> usize {
    let i = match a {
        1 => 0,
        2 => 1,
        4 => 2,
        _ => panic!("leading coefficient must be 1, 2 or 4"),
    };
    7 * i + b % 7
}

/// `(class members, chosen member)` rows of the printed correlated sign function.
pub fn correlated_rows() -> Vec<([usize; 2], usize)> {
    let mut rows = vec![
        ([poly(1, 1), poly(1, 6)], poly(1, 1)),
        ([poly(1, 2), poly(1, 5)], poly(1, 2)),
        ([poly(1, 3), poly(1, 4)], poly(1, 3)),
    ];
    for b in 0..7 {
        rows.push(([poly(2, b), poly(4, 3 * b)], poly(2, b)));
    }
    rows
}

/// Chirality with colex-least representatives and explicit choices `gamma[k-1]`.
pub fn chirality(g: &FiniteGroup, n: usize, gamma: Vec<Vec<usize>>) -> Chirality {
    Chirality::new(g, n, default_beta(g, n).unwrap(), gamma).unwrap()
}

/// The three worked cyclic examples built from their orbit choices.
pub fn worked_examples() -> [(FiniteMagma, FiniteMagma); 3] {
    let z3 = FiniteGroup::cyclic(3).unwrap();
    let z5 = FiniteGroup::cyclic(5).unwrap();
    let a = build_from_chirality(&z3, &chirality(&z3, 2, vec![vec![0], vec![1]])).unwrap();
    let b = build_from_chirality(&z5, &chirality(&z5, 2, vec![vec![0], vec![1, 0]])).unwrap();
    let c = build_from_chirality(&z5, &chirality(&z5, 3, vec![vec![0], vec![1, 0], vec![0, 0]])).unwrap();
    [(a, rps()), (b, rpssl()), (c, ternary())]
}

/// A sign function on `ℤ9` making `{0, 3, 6}` convex: `1, 7, 4, 3` chosen.
pub fn convex_z9_choices() -> Vec<KSet> {
    vec![KSet::from([1]), KSet::from([7]), KSet::from([4]), KSet::from([3])]
}

/// Every tuple of `{0..m-1}^n`, last coordinate fastest.
pub fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..m).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Automorphisms found by trying every permutation against the whole table.
pub fn brute_automorphism_count(a: &FiniteMagma) -> usize {
    let all = tuples(a.order(), a.arity());
    permutations(a.order())
        .into_iter()
        .filter(|s| {
            all.iter().all(|t| {
                let image: Vec<usize> = t.iter().map(|&x| s[x]).collect();
                a.apply(&image) == s[a.apply(t)]
            })
        })
        .count()
}

/// Lexicographically least relabelled table: a complete isomorphism invariant.
pub fn canonical_table(a: &FiniteMagma) -> Vec<usize> {
    let all = tuples(a.order(), a.arity());
    permutations(a.order())
        .into_iter()
        .map(|s| {
            let mut inv = vec![0; s.len()];
            for (i, &x) in s.iter().enumerate() {
                inv[x] = i;
            }
            all.iter()
                .map(|t| {
                    let pre: Vec<usize> = t.iter().map(|&x| inv[x]).collect();
                    s[a.apply(&pre)]
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}
