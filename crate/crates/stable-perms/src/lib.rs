//! Combinatorics of stable permutations of `[n]^k`.
//!
//! A permutation `u` of `[n]^t` is *stable* when its Ψ sequence eventually
//! freezes: Ψ_{k+l}(u) = Ψ_{k−1}(u) ⊗ 1^⊗(l+1) for some k ≥ 1 and all l ≥ 0,
//! and the least such k is the *rank* of `u`. Stable permutations index the
//! permutative automorphisms of the Cuntz algebras; this crate works purely
//! with the combinatorics and never represents an operator.
//!
//! What's here:
//!
//! - [`MultiIndex`] / [`Permutation`]: points of `[n]^k` with lexicographic
//!   integer codes, and bijections stored as dense image tables, with
//!   compose / inverse / tensor and cycle-notation parsing and formatting.
//! - [`psi`] and [`PsiTrace`]: the stabilization sequence.
//! - [`is_stable_rank1_exact`]: the exact rank-1 criterion for `S([n]^2)` —
//!   commutation of `u ⊗ 1` with `1 ⊗ u` in `S([n]^3)` — with witness
//!   extraction; [`stability_bounded`] for bounded-horizon rank testing.
//! - [`FamilySpec`]: the six-letter family of two-transposition involutions
//!   `((a1,b1),(a1,b2))((a2,b3),(a2,b4))`, its stability classifier, and the
//!   case table of disagreement witnesses for the unstable configurations.
//! - [`enumerate`]: exhaustive censuses and verification sweeps at small `n`
//!   with deterministic parallel partitioning.
//!
//! Composition is `(f ∘ g)(x) = f(g(x))` — the right factor acts first —
//! everywhere. Letters are 1-based in all I/O; codes are 0-based internally.

pub mod cycles;
pub mod enumerate;
mod error;
pub mod family;
pub mod multi_index;
pub mod perm;
pub mod psi;
pub mod stability;

pub use cycles::{format_cycles, parse_cycles, CycleSpec};
pub use error::{Error, Result, CAPACITY_LIMIT};
pub use family::{CaseWitness, FamilySpec, FamilyVerdict, WitnessCase};
pub use multi_index::{degree, MultiIndex};
pub use perm::Permutation;
pub use psi::{psi, PsiTrace};
pub use stability::{
    exact_rank1_verdict, find_witness, is_stable_rank1_exact, stability_bounded,
    StabilityStatus, StabilityVerdict, Witness, DEFAULT_K_MAX, DEFAULT_L_MAX,
};
