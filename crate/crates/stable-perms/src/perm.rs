//! Permutations of `[n]^k` stored as dense image tables over lexicographic codes.

use std::fmt;

use crate::cycles::format_cycles;
use crate::error::{Error, Result};
use crate::multi_index::{degree, MultiIndex};

/// A bijection of `[n]^k`. `image[c]` is the code of the image of the point
/// with code `c`. Values are immutable after construction and safe to share
/// across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    n: usize,
    k: usize,
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize, k: usize) -> Result<Self> {
        let d = degree(n, k)?;
        Ok(Permutation {
            n,
            k,
            image: (0..d).collect(),
        })
    }

    /// Builds a permutation from a full image table, validating bijectivity.
    pub fn from_image(n: usize, k: usize, image: Vec<usize>) -> Result<Self> {
        let d = degree(n, k)?;
        if image.len() != d {
            return Err(Error::NotABijection { degree: d });
        }
        let mut seen = vec![false; d];
        for &v in &image {
            if v >= d || seen[v] {
                return Err(Error::NotABijection { degree: d });
            }
            seen[v] = true;
        }
        Ok(Permutation { n, k, image })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of the underlying set, `n^k`.
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply_code(&self, code: usize) -> usize {
        self.image[code]
    }

    pub fn apply(&self, m: &MultiIndex) -> Result<MultiIndex> {
        if m.n() != self.n || m.len() != self.k {
            return Err(Error::ShapeMismatch {
                expected_n: self.n,
                expected_k: self.k,
                found_n: m.n(),
                found_k: m.len(),
            });
        }
        MultiIndex::from_rank(self.image[m.rank()], self.n, self.k)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation {
            n: self.n,
            k: self.k,
            image,
        }
    }

    /// `self ∘ other`: `other` acts first, so `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ShapeMismatch {
                expected_n: self.n,
                expected_k: self.k,
                found_n: other.n,
                found_k: other.k,
            });
        }
        let image = other.image.iter().map(|&v| self.image[v]).collect();
        Ok(Permutation {
            n: self.n,
            k: self.k,
            image,
        })
    }

    /// Tensor product: `(self ⊗ other)(α,β) = (self(α), other(β))` on
    /// concatenated multi-indices.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let k = self.k + other.k;
        let d = degree(self.n, k)?;
        let right = other.image.len();
        let mut image = vec![0; d];
        for (a, &ua) in self.image.iter().enumerate() {
            let base_in = a * right;
            let base_out = ua * right;
            for (b, &vb) in other.image.iter().enumerate() {
                image[base_in + b] = base_out + vb;
            }
        }
        Ok(Permutation {
            n: self.n,
            k,
            image,
        })
    }

    /// `1^{⊗left} ⊗ self ⊗ 1^{⊗right}` without materializing identity factors.
    pub fn embed(&self, left: usize, right: usize) -> Result<Self> {
        if left == 0 && right == 0 {
            return Ok(self.clone());
        }
        let k = left + self.k + right;
        let d = degree(self.n, k)?;
        let lo = self.n.pow(right as u32);
        let mid = self.image.len() * lo;
        let mut image = vec![0; d];
        for (c, slot) in image.iter_mut().enumerate() {
            let hi = c / mid;
            let m = (c / lo) % self.image.len();
            let tail = c % lo;
            *slot = hi * mid + self.image[m] * lo + tail;
        }
        Ok(Permutation {
            n: self.n,
            k,
            image,
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Permutation {{ n: {}, k: {}, cycles: {} }}",
            self.n,
            self.k,
            format_cycles(self)
        )
    }
}
