//! Stability and rank testing: the exact rank-1 commutation criterion for
//! permutations of `[n]^2`, and bounded-horizon rank testing through the Ψ
//! sequence for arbitrary length.

use std::fmt;

use crate::error::{Error, Result};
use crate::multi_index::{degree, MultiIndex};
use crate::perm::Permutation;
use crate::psi::psi;

/// Default bounded-stability horizons. Degrees stay within capacity for the
/// alphabets the sweeps use, and every small-n claim is decidable well inside
/// this window.
pub const DEFAULT_K_MAX: usize = 3;
pub const DEFAULT_L_MAX: usize = 2;

/// A point α ∈ [n]^3 at which `(u⊗1)(1⊗u)` and `(1⊗u)(u⊗1)` disagree,
/// certifying that u is not stable of rank 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub alpha: MultiIndex,
    /// `((u⊗1) ∘ (1⊗u))(α)`
    pub lhs: MultiIndex,
    /// `((1⊗u) ∘ (u⊗1))(α)`
    pub rhs: MultiIndex,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} lhs={} rhs={}",
            self.alpha, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityStatus {
    /// The least r within the horizon with Ψ_{r+l} = Ψ_{r−1} ⊗ 1^⊗(l+1) for
    /// all tested l.
    StableWithRank(usize),
    NotStableWithinHorizon,
    /// Verdict of the exact rank-1 commutation criterion.
    Rank1Exact(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    /// `(k_max, l_max)` for bounded verdicts; `None` for the exact criterion.
    pub horizon: Option<(usize, usize)>,
    pub witness: Option<Witness>,
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(
            self.status,
            StabilityStatus::StableWithRank(_) | StabilityStatus::Rank1Exact(true)
        )
    }
}

fn commutator_tables(u: &Permutation) -> Result<(Permutation, Permutation)> {
    if u.k() != 2 {
        return Err(Error::RequiresPairs { found: u.k() });
    }
    let one = Permutation::identity(u.n(), 1)?;
    let left = u.tensor(&one)?; // u ⊗ 1
    let right = one.tensor(u)?; // 1 ⊗ u
    let lhs = left.compose(&right)?; // (u⊗1)(1⊗u)
    let rhs = right.compose(&left)?; // (1⊗u)(u⊗1)
    Ok((lhs, rhs))
}

fn first_disagreement(u: &Permutation) -> Result<Option<Witness>> {
    let (lhs, rhs) = commutator_tables(u)?;
    for code in 0..lhs.degree() {
        if lhs.apply_code(code) != rhs.apply_code(code) {
            let n = u.n();
            return Ok(Some(Witness {
                alpha: MultiIndex::from_rank(code, n, 3)?,
                lhs: MultiIndex::from_rank(lhs.apply_code(code), n, 3)?,
                rhs: MultiIndex::from_rank(rhs.apply_code(code), n, 3)?,
            }));
        }
    }
    Ok(None)
}

/// Exact rank-1 test for `u ∈ S([n]^2)`: true iff `(u⊗1)(1⊗u) = (1⊗u)(u⊗1)`
/// in `S([n]^3)`. On failure, returns the lexicographically smallest witness.
pub fn is_stable_rank1_exact(u: &Permutation) -> Result<(bool, Option<Witness>)> {
    let witness = first_disagreement(u)?;
    Ok((witness.is_none(), witness))
}

/// The lexicographically smallest witness, or `None` when the commutation
/// criterion holds.
pub fn find_witness(u: &Permutation) -> Result<Option<Witness>> {
    first_disagreement(u)
}

/// Bounded stability test: searches for the least rank r ≤ `k_max` such that
/// Ψ_{r+l}(u) = Ψ_{r−1}(u) ⊗ 1^⊗(l+1) for every l ≤ `l_max`.
///
/// The verdict is an explicitly bounded approximation of the definition,
/// which quantifies over all l ≥ 0. When u has length 2 and the horizon is
/// exhausted, the rank-1 commutation witness (if any) is attached.
pub fn stability_bounded(
    u: &Permutation,
    k_max: usize,
    l_max: usize,
) -> Result<StabilityVerdict> {
    if k_max == 0 {
        return Err(Error::InvalidHorizon);
    }
    // the largest term the search can touch must fit
    degree(u.n(), u.k() + k_max + l_max)?;

    let mut terms: Vec<Option<Permutation>> = vec![None; k_max + l_max + 1];
    let ensure = |j: usize, terms: &mut Vec<Option<Permutation>>| -> Result<()> {
        if terms[j].is_none() {
            terms[j] = Some(psi(u, j)?);
        }
        Ok(())
    };

    for rank in 1..=k_max {
        ensure(rank - 1, &mut terms)?;
        let base = terms[rank - 1].clone().expect("just computed");
        let mut holds = true;
        for l in 0..=l_max {
            let expected = base.embed(0, l + 1)?;
            ensure(rank + l, &mut terms)?;
            if terms[rank + l].as_ref() != Some(&expected) {
                holds = false;
                break;
            }
        }
        if holds {
            return Ok(StabilityVerdict {
                status: StabilityStatus::StableWithRank(rank),
                horizon: Some((k_max, l_max)),
                witness: None,
            });
        }
    }

    let witness = if u.k() == 2 { find_witness(u)? } else { None };
    Ok(StabilityVerdict {
        status: StabilityStatus::NotStableWithinHorizon,
        horizon: Some((k_max, l_max)),
        witness,
    })
}

/// Wraps the exact rank-1 criterion in a [`StabilityVerdict`].
pub fn exact_rank1_verdict(u: &Permutation) -> Result<StabilityVerdict> {
    let (stable, witness) = is_stable_rank1_exact(u)?;
    Ok(StabilityVerdict {
        status: StabilityStatus::Rank1Exact(stable),
        horizon: None,
        witness,
    })
}
