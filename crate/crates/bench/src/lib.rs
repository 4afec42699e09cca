//! Fixtures shared by the criterion benches.

use magma_forge_core::construct::{build_regular, canonical_lambda};
use magma_forge_core::{FiniteGroup, FiniteMagma};

/// `(ℤ_m)_n` with the canonical sign function.
pub fn canonical_cyclic(m: usize, n: usize) -> FiniteMagma {
    let g = FiniteGroup::cyclic(m).expect("positive order");
    let lambda = canonical_lambda(&g, n).expect("admissible parameters");
    build_regular(&g, n, &lambda).expect("admissible parameters")
}
