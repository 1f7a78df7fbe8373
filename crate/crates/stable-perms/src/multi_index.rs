//! Points of `[n]^k` and their lexicographic integer codes.
//!
//! Letters are 1-based (`1..=n`) in all I/O; codes are 0-based and run over
//! `0..n^k` in lexicographic order of the letter sequence.

use std::fmt;

use crate::error::{Error, Result, CAPACITY_LIMIT};

/// `n^k` with the capacity limit enforced.
pub fn degree(n: usize, k: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if k == 0 {
        return Err(Error::EmptyIndex);
    }
    let mut d: usize = 1;
    for _ in 0..k {
        d = d
            .checked_mul(n)
            .filter(|&d| d <= CAPACITY_LIMIT)
            .ok_or(Error::CapacityExceeded {
                n,
                k,
                limit: CAPACITY_LIMIT,
            })?;
    }
    Ok(d)
}

/// A point of `[n]^k`, stored as its 1-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    n: usize,
    letters: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if letters.is_empty() {
            return Err(Error::EmptyIndex);
        }
        for &l in &letters {
            if l == 0 || l > n {
                return Err(Error::LetterOutOfRange { letter: l, n });
            }
        }
        Ok(MultiIndex { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The length `k`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // k is always positive by construction
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Lexicographic code: big-endian base-`n` value of the 0-based letters.
    pub fn rank(&self) -> usize {
        self.letters.iter().fold(0, |acc, &l| acc * self.n + (l - 1))
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn from_rank(code: usize, n: usize, k: usize) -> Result<Self> {
        let max = degree(n, k)?;
        if code >= max {
            return Err(Error::CodeOutOfRange { code, max });
        }
        let mut letters = vec![0; k];
        let mut rest = code;
        for slot in letters.iter_mut().rev() {
            *slot = rest % n + 1;
            rest /= n;
        }
        Ok(MultiIndex { n, letters })
    }

    /// Concatenation `(self, other)` as a point of `[n]^{k1+k2}`.
    pub fn concat(&self, other: &MultiIndex) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(MultiIndex { n: self.n, letters })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        // first and last elements of lex order
        assert_eq!(MultiIndex::new(3, vec![1, 1]).unwrap().rank(), 0);
        assert_eq!(MultiIndex::new(2, vec![2, 2, 2]).unwrap().rank(), 7);
        // enumerate [3]^2 in lex order and index: (2,3) sits at position 5
        let lex: Vec<Vec<usize>> = (1..=3)
            .flat_map(|a| (1..=3).map(move |b| vec![a, b]))
            .collect();
        assert_eq!(lex.iter().position(|l| l == &vec![2, 3]), Some(5));
        assert_eq!(MultiIndex::new(3, vec![2, 3]).unwrap().rank(), 5);
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(
            MultiIndex::from_rank(0, 3, 2).unwrap().letters(),
            &[1, 1]
        );
        assert_eq!(
            MultiIndex::from_rank(5, 3, 2).unwrap().letters(),
            &[2, 3]
        );
        assert_eq!(
            MultiIndex::from_rank(9, 3, 2),
            Err(Error::CodeOutOfRange { code: 9, max: 9 })
        );
    }

    #[test]
    fn round_trip_all_small_shapes() {
        // every (n, k) with n^k <= 10^4
        for n in 1..=10 {
            for k in 1..=14 {
                let Ok(d) = degree(n, k) else { break };
                if d > 10_000 {
                    break;
                }
                for code in 0..d {
                    let m = MultiIndex::from_rank(code, n, k).unwrap();
                    assert_eq!(m.rank(), code, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn rank_is_monotone_in_lex_order() {
        let d = degree(3, 3).unwrap();
        let mut prev: Option<MultiIndex> = None;
        for code in 0..d {
            let m = MultiIndex::from_rank(code, 3, 3).unwrap();
            if let Some(p) = prev {
                assert!(p.letters() < m.letters());
            }
            prev = Some(m);
        }
    }

    #[test]
    fn rejects_bad_letters() {
        assert_eq!(
            MultiIndex::new(2, vec![1, 3]),
            Err(Error::LetterOutOfRange { letter: 3, n: 2 })
        );
        assert_eq!(
            MultiIndex::new(2, vec![0]),
            Err(Error::LetterOutOfRange { letter: 0, n: 2 })
        );
        assert_eq!(MultiIndex::new(0, vec![1]), Err(Error::EmptyAlphabet));
        assert_eq!(MultiIndex::new(2, vec![]), Err(Error::EmptyIndex));
    }

    #[test]
    fn capacity_limit_enforced() {
        assert!(degree(10, 7).is_ok());
        assert_eq!(
            degree(10, 8),
            Err(Error::CapacityExceeded {
                n: 10,
                k: 8,
                limit: CAPACITY_LIMIT
            })
        );
        // overflow-safe far beyond usize
        assert!(degree(1_000_000, 100).is_err());
    }

    #[test]
    fn display_is_parenthesized() {
        let m = MultiIndex::new(4, vec![1, 3, 4]).unwrap();
        assert_eq!(m.to_string(), "(1,3,4)");
    }
}
