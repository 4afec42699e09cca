//! Generalized Rock-Paper-Scissors magmas.
//!
//! A finite `n`-ary magma is a set `{0, .., m-1}` with one `n`-ary operation,
//! read as a selection game: `n` players each pick an item and the players who
//! picked `f(picks)` win. This crate builds such games from finite groups,
//! classifies them (conservative, essentially polyadic, fair, strongly fair,
//! nondegenerate), counts them exactly, and computes their automorphism groups
//! and congruence lattices.
//!
//! Every counting formula has a brute-force counterpart in [`census`] so the two
//! can be compared at small orders.

pub mod analysis;
pub mod arithmetic;
pub mod census;
pub mod construct;
mod error;
pub mod group;
pub mod hypertournament;
pub mod io;
pub mod kset;
pub mod limits;
pub mod magma;
pub mod perm;
pub mod term;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use kset::KSet;
pub use magma::{FiniteMagma, Pointing, PropertyReport};
pub use perm::Permutation;
pub use construct::{Chirality, SignFunction};
pub use hypertournament::{EmbeddingWitness, PointedHypertournament};
pub use term::Term;
