//! The stabilization sequence Ψ_k of a permutation of `[n]^t`.
//!
//! For `u ∈ S([n]^t)`, Ψ_0(u) = u⁻¹ and for k ≥ 1
//!
//! ```text
//! Ψ_k(u) = [1^⊗k ⊗ u⁻¹] ∘ [1^⊗(k−1) ⊗ u⁻¹ ⊗ 1] ∘ ⋯ ∘ [u⁻¹ ⊗ 1^⊗k]
//!        ∘ [1 ⊗ u ⊗ 1^⊗(k−1)] ∘ [1^⊗2 ⊗ u ⊗ 1^⊗(k−2)] ∘ ⋯ ∘ [1^⊗k ⊗ u]
//! ```
//!
//! with the rightmost factor applied first. `u` is stable when some k ≥ 1 has
//! Ψ_{k+l}(u) = Ψ_{k−1}(u) ⊗ 1^⊗(l+1) for all l ≥ 0, and the least such k is
//! its rank. Under this product order, Ψ_1(u) = u⁻¹ ⊗ 1 is equivalent to the
//! commutation of u ⊗ 1 with 1 ⊗ u, which is what pins the convention down;
//! see `stability::is_stable_rank1_exact`.

use crate::error::Result;
use crate::perm::Permutation;

/// Ψ_k(u) over `[n]^{t+k}`.
pub fn psi(u: &Permutation, k: usize) -> Result<Permutation> {
    let inverse = u.inverse();
    if k == 0 {
        return Ok(inverse);
    }
    // first product, i = 0..=k: 1^⊗(k−i) ⊗ u⁻¹ ⊗ 1^⊗i, leftmost applied last
    let mut acc = inverse.embed(k, 0)?;
    for i in 1..=k {
        acc = acc.compose(&inverse.embed(k - i, i)?)?;
    }
    // second product, i = 1..=k: 1^⊗i ⊗ u ⊗ 1^⊗(k−i), applied before the first
    for i in 1..=k {
        acc = acc.compose(&u.embed(i, k - i)?)?;
    }
    Ok(acc)
}

/// The terms Ψ_0(u), …, Ψ_K(u) with per-level stabilization flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTrace {
    base: Permutation,
    terms: Vec<Permutation>,
}

impl PsiTrace {
    pub fn compute(u: &Permutation, horizon: usize) -> Result<Self> {
        let terms = (0..=horizon)
            .map(|j| psi(u, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(PsiTrace {
            base: u.clone(),
            terms,
        })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn horizon(&self) -> usize {
        self.terms.len() - 1
    }

    /// Ψ_j(u); `j` must be within the horizon.
    pub fn term(&self, j: usize) -> &Permutation {
        &self.terms[j]
    }

    pub fn terms(&self) -> &[Permutation] {
        &self.terms
    }

    /// Whether Ψ_j = Ψ_{j−1} ⊗ 1 at level `j ≥ 1`.
    pub fn stabilized_at(&self, j: usize) -> bool {
        if j == 0 || j > self.horizon() {
            return false;
        }
        match self.terms[j - 1].embed(0, 1) {
            Ok(extended) => extended == self.terms[j],
            Err(_) => false,
        }
    }
}
