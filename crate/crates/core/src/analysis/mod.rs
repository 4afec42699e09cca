//! Automorphisms, congruences and their lattices.

pub mod congruence;
pub mod iso;
pub mod lattice;

pub use congruence::{
    all_congruences, coset_poset_and_antichain_lattice, congruence_generated, is_simple, lambda_convex_subgroups,
    principal_congruence, CosetPoset, Partition,
};
pub use iso::{automorphisms, is_automorphism, isomorphisms, lambda_automorphisms, is_correlated};
pub use lattice::{is_distributive, lattice_isomorphic, FiniteLattice};
