use std::collections::HashSet;

use magma_forge_core::arithmetic::{is_admissible, least_prime_divisor};
use magma_forge_core::kset::ksets;
use magma_forge_core::{Error, FiniteGroup, KSet};

fn z(m: usize) -> FiniteGroup {
    FiniteGroup::cyclic(m).unwrap()
}

fn desk_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=21).map(z).collect();
    out.push(FiniteGroup::direct_sum(&[z(2), z(2)]).unwrap());
    out.push(FiniteGroup::direct_sum(&[z(3), z(3)]).unwrap());
    out.push(FiniteGroup::direct_sum(&[z(2), z(4)]).unwrap());
    out.push(FiniteGroup::direct_sum(&[z(2), z(2), z(2)]).unwrap());
    out.push(FiniteGroup::direct_sum(&[z(2), z(6)]).unwrap());
    out.push(FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap());
    out.push(FiniteGroup::semidirect_cyclic(5, 2, 4).unwrap());
    out.push(FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap());
    out
}

#[test]
fn freeness_matches_admissibility() {
    for g in desk_groups() {
        let m = g.order();
        if m == 1 {
            continue;
        }
        for n in 1..=5.min(m) {
            let free = (1..=n).all(|k| g.is_extension_free(k).unwrap());
            assert_eq!(free, is_admissible(m, n), "order {m}, n={n}");
        }
    }
}

#[test]
fn least_prime_divisor_extension_is_not_free() {
    for g in desk_groups().into_iter().filter(|g| g.order() % 2 == 1 && g.order() > 1) {
        let p = least_prime_divisor(g.order() as u64).unwrap() as usize;
        let (s, set) = g.extension_stabilizer_witness(p).unwrap().expect("a fixed p-set exists");
        assert_ne!(s, g.identity());
        assert_eq!(g.translate(s, &set), set);
    }
}

#[test]
fn orbits_partition_and_divide_the_order() {
    for g in desk_groups().into_iter().filter(|g| g.order() <= 12) {
        let m = g.order();
        for k in 1..=3.min(m) {
            let family = g.k_extension_orbits(k).unwrap();
            let mut seen = HashSet::new();
            for orbit in &family.orbits {
                assert_eq!(m % orbit.len(), 0);
                for u in orbit {
                    assert!(seen.insert(u.clone()));
                }
            }
            assert_eq!(seen.len(), ksets(m, k).count());
            if g.is_extension_free(k).unwrap() {
                assert!(family.orbits.iter().all(|o| o.len() == m));
            }
            for (i, rep) in family.representatives().iter().enumerate() {
                assert_eq!(family.orbit_index(rep), i);
                assert_eq!(family.representative(i), rep);
            }
        }
    }
}

#[test]
fn subgroup_lattices() {
    let sizes = |g: &FiniteGroup| g.subgroups().unwrap().iter().map(Vec::len).collect::<Vec<_>>();
    assert_eq!(z(9).subgroups().unwrap(), vec![vec![0], vec![0, 3, 6], (0..9).collect()]);
    assert_eq!(sizes(&z(15)), vec![1, 3, 5, 15]);
    let g21 = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
    let orders: HashSet<usize> = sizes(&g21).into_iter().collect();
    assert_eq!(orders, HashSet::from([1, 3, 7, 21]));
    assert_eq!(sizes(&FiniteGroup::direct_sum(&[z(3), z(3)]).unwrap()), vec![1, 3, 3, 3, 3, 9]);
    for h in z(12).subgroups().unwrap() {
        let cosets = z(12).left_cosets(&h);
        assert_eq!(cosets.len() * h.len(), 12);
    }
}

#[test]
fn semidirect_product_structure() {
    let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
    assert_eq!(g.order(), 21);
    assert!(!g.is_abelian());
    assert_eq!(g.center(), vec![g.identity()]);
    // (2x)(x + 1) = 2x + 2 and (x + 1)(2x) = 2x + 1.
    assert_eq!(g.mul(7, 1), 9);
    assert_eq!(g.mul(1, 7), 8);
    assert_eq!(g.element_order(7), 3);
    assert_eq!(g.element_order(1), 7);
    assert_eq!(g.inner_automorphisms().iter().collect::<HashSet<_>>().len(), 21);
    assert_eq!(g.automorphisms().unwrap().len(), 42);
    assert!(matches!(FiniteGroup::semidirect_cyclic(7, 3, 3), Err(Error::BadMultiplier(_))));
    assert!(matches!(FiniteGroup::semidirect_cyclic(7, 2, 2), Err(Error::BadMultiplier(_))));
}

#[test]
fn direct_sums_and_isomorphism_types() {
    let g = FiniteGroup::direct_sum(&[z(3), z(5)]).unwrap();
    assert_eq!(g.order(), 15);
    assert!(g.is_abelian());
    assert!((0..15).any(|a| g.element_order(a) == 15));
    assert_eq!(FiniteGroup::direct_sum(&[z(7)]).unwrap(), z(7));
    assert_eq!(FiniteGroup::direct_sum(&[z(3), z(3)]).unwrap().automorphisms().unwrap().len(), 48);
    assert_eq!(z(9).automorphisms().unwrap().len(), 6);
    let sum = FiniteGroup::direct_sum(&[z(2), z(3)]).unwrap();
    // (1, 1) + (1, 2) = (0, 0), with (a, b) stored as 3a + b.
    assert_eq!(sum.mul(4, 5), 0);
    assert_eq!(sum.mul(1, 3), 4);
}

#[test]
fn group_validation() {
    assert!(matches!(FiniteGroup::from_table(2, vec![0, 1, 1, 1]), Err(Error::NotAGroup(_))));
    assert!(matches!(FiniteGroup::from_table(2, vec![0, 1, 1]), Err(Error::LengthMismatch { .. })));
    // Non-associative Latin square with identity 0.
    #[rustfmt::skip]
    let loop5 = vec![
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0,
    ];
    assert!(matches!(FiniteGroup::from_table(5, loop5), Err(Error::NotAGroup(_))));
    assert!(FiniteGroup::cyclic(0).is_err());
}

#[test]
fn translation_and_images() {
    let g = z(5);
    assert_eq!(g.translate(2, &KSet::from([0, 4])), KSet::from([1, 2]));
    for phi in g.automorphisms().unwrap() {
        assert!(g.is_automorphism(&phi));
        assert_eq!(g.image(&phi, &KSet::from([0])), KSet::from([0]));
    }
    assert_eq!(g.generated([2]), (0..5).collect::<Vec<_>>());
    assert_eq!(z(12).generated([4, 6]), vec![0, 2, 4, 6, 8, 10]);
    assert_eq!(g.power(2, 3), 1);
}
