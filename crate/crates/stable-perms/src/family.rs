//! The six-letter family of two-transposition involutions of `[n]^2`:
//! `u = ((a1,b1),(a1,b2)) ((a2,b3),(a2,b4))` with the four points distinct and
//! `a1 ≠ a2`. Such an involution is stable of rank 1 exactly when
//! `{a1,a2} ∩ {b1,b2,b3,b4} = ∅` (condition i) or `{a1,a2} = {b1,b2,b3,b4}`
//! (condition ii); in every other configuration a disagreement point for the
//! commutation criterion can be read off a small case table.

use std::fmt;

use crate::error::{Error, Result};
use crate::multi_index::{degree, MultiIndex};
use crate::perm::Permutation;
use crate::stability::{is_stable_rank1_exact, Witness};

/// The tuple `(a1, a2, b1, b2, b3, b4)` over alphabet `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub n: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub b4: usize,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a1={}, a2={}, b1={}, b2={}, b3={}, b4={}; n={})",
            self.a1, self.a2, self.b1, self.b2, self.b3, self.b4, self.n
        )
    }
}

/// Which row of the witness case table produced a disagreement point.
/// `Overlap*` covers `|{a1,a2} ∩ {b1..b4}| = 1`; `Subset*` covers
/// `{a1,a2} ⊂ {b1..b4}` proper. `Generic` marks a witness found by scan
/// rather than by the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    Overlap1,
    Overlap2,
    Overlap3,
    Subset1,
    Subset2,
    Subset3,
    Subset4,
    Generic,
}

impl WitnessCase {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessCase::Overlap1 => "L2.2-C1",
            WitnessCase::Overlap2 => "L2.2-C2",
            WitnessCase::Overlap3 => "L2.2-C3",
            WitnessCase::Subset1 => "L2.3-C1",
            WitnessCase::Subset2 => "L2.3-C2",
            WitnessCase::Subset3 => "L2.3-C3",
            WitnessCase::Subset4 => "L2.3-C4",
            WitnessCase::Generic => "GENERIC",
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A table-derived witness plus the symmetry reductions that selected it.
/// The swaps are relative to the normalized tuple, i.e. they were applied
/// after any role swap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseWitness {
    pub witness: Witness,
    pub case: WitnessCase,
    pub role_swapped: bool,
    pub b12_swapped: bool,
    pub b34_swapped: bool,
    /// The tuple after all reductions; it defines the same permutation, and
    /// the case's α formula reads off its letters.
    pub normalized: FamilySpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub condition_i: bool,
    pub condition_ii: bool,
    pub predicted_stable: bool,
    pub verified_stable: bool,
    pub witness: Option<CaseWitness>,
}

impl FamilySpec {
    /// Validates the family hypotheses: letters in range, `a1 ≠ a2`, and the
    /// four points distinct (equivalently `b1 ≠ b2` and `b3 ≠ b4`).
    pub fn new(
        n: usize,
        a1: usize,
        a2: usize,
        b1: usize,
        b2: usize,
        b3: usize,
        b4: usize,
    ) -> Result<Self> {
        degree(n, 2)?;
        for letter in [a1, a2, b1, b2, b3, b4] {
            if letter == 0 || letter > n {
                return Err(Error::LetterOutOfRange { letter, n });
            }
        }
        if a1 == a2 {
            return Err(Error::InvalidFamilySpec {
                reason: "a1 ≠ a2 violated".into(),
            });
        }
        if b1 == b2 {
            return Err(Error::InvalidFamilySpec {
                reason: "the points (a1,b1) and (a1,b2) coincide (b1 ≠ b2 violated)".into(),
            });
        }
        if b3 == b4 {
            return Err(Error::InvalidFamilySpec {
                reason: "the points (a2,b3) and (a2,b4) coincide (b3 ≠ b4 violated)".into(),
            });
        }
        Ok(FamilySpec {
            n,
            a1,
            a2,
            b1,
            b2,
            b3,
            b4,
        })
    }

    /// The involution swapping `(a1,b1) ↔ (a1,b2)` and `(a2,b3) ↔ (a2,b4)`.
    pub fn build(&self) -> Permutation {
        let d = degree(self.n, 2).expect("validated at construction");
        let code = |x: usize, y: usize| (x - 1) * self.n + (y - 1);
        let mut image: Vec<usize> = (0..d).collect();
        image.swap(code(self.a1, self.b1), code(self.a1, self.b2));
        image.swap(code(self.a2, self.b3), code(self.a2, self.b4));
        Permutation::from_image(self.n, 2, image).expect("swaps preserve bijectivity")
    }

    /// `(condition_i, condition_ii)`: disjointness and set equality of
    /// `{a1,a2}` against `{b1,b2,b3,b4}` (as sets, duplicates collapse).
    pub fn classify(&self) -> (bool, bool) {
        let a = [self.a1, self.a2];
        let b = [self.b1, self.b2, self.b3, self.b4];
        let disjoint = !a.iter().any(|x| b.contains(x));
        let equal = a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x));
        (disjoint, equal)
    }

    /// Exchanges the roles of the two transpositions:
    /// `(a1,b1,b2) ↔ (a2,b3,b4)`. Defines the same permutation.
    pub fn role_swapped(&self) -> FamilySpec {
        FamilySpec {
            n: self.n,
            a1: self.a2,
            a2: self.a1,
            b1: self.b3,
            b2: self.b4,
            b3: self.b1,
            b4: self.b2,
        }
    }

    fn swap_b12(&self) -> FamilySpec {
        FamilySpec {
            b1: self.b2,
            b2: self.b1,
            ..*self
        }
    }

    fn swap_b34(&self) -> FamilySpec {
        FamilySpec {
            b3: self.b4,
            b4: self.b3,
            ..*self
        }
    }

    /// Runs the classifier, builds the involution, applies the exact rank-1
    /// criterion, and attaches the case-table witness for unstable specs.
    /// A disagreement between prediction and verification is an error: it
    /// cannot occur unless the implementation is wrong.
    pub fn verify(&self) -> Result<FamilyVerdict> {
        let (condition_i, condition_ii) = self.classify();
        let predicted_stable = condition_i || condition_ii;
        let u = self.build();
        let (verified_stable, _) = is_stable_rank1_exact(&u)?;
        if predicted_stable != verified_stable {
            return Err(Error::PredictionMismatch {
                spec: *self,
                predicted: predicted_stable,
                verified: verified_stable,
            });
        }
        let witness = self.case_witness()?;
        Ok(FamilyVerdict {
            condition_i,
            condition_ii,
            predicted_stable,
            verified_stable,
            witness,
        })
    }

    /// For specs satisfying neither condition, selects the matching case of
    /// the witness table, normalizing by the family's symmetries first: a
    /// role swap moves the single overlapping letter into the first
    /// transposition (and reduces `Subset2` to `Subset1`), and `b` swaps
    /// orient each transposition so the overlapping letter comes first.
    /// Returns `None` when condition (i) or (ii) holds.
    ///
    /// Both sides of the disagreement are recomputed from the built
    /// involution rather than trusted from the table.
    pub fn case_witness(&self) -> Result<Option<CaseWitness>> {
        let (condition_i, condition_ii) = self.classify();
        if condition_i || condition_ii {
            return Ok(None);
        }

        let in_b = |x: usize, s: &FamilySpec| {
            x == s.b1 || x == s.b2 || x == s.b3 || x == s.b4
        };

        let mut cur = *self;
        let mut role_swapped = false;
        let mut b12_swapped = false;
        let mut b34_swapped = false;

        let a1_in = in_b(self.a1, self);
        let a2_in = in_b(self.a2, self);

        let (case, alpha) = if a1_in != a2_in {
            // exactly one overlapping letter
            if a2_in {
                cur = cur.role_swapped();
                role_swapped = true;
            }
            // now cur.a1 is the overlapping letter
            let in12 = cur.a1 == cur.b1 || cur.a1 == cur.b2;
            let in34 = cur.a1 == cur.b3 || cur.a1 == cur.b4;
            if in12 && cur.b1 != cur.a1 {
                cur = cur.swap_b12();
                b12_swapped = true;
            }
            if in34 && cur.b3 != cur.a1 {
                cur = cur.swap_b34();
                b34_swapped = true;
            }
            let case = match (in12, in34) {
                (true, false) => WitnessCase::Overlap1,
                (false, true) => WitnessCase::Overlap2,
                (true, true) => WitnessCase::Overlap3,
                (false, false) => return Err(Error::CaseAnalysisGap { spec: *self }),
            };
            let alpha = match case {
                // α = (a1, b1, b2) with b1 = a1
                WitnessCase::Overlap1 | WitnessCase::Overlap3 => [cur.a1, cur.b1, cur.b2],
                // α = (a2, a1, b1) with b3 = a1
                WitnessCase::Overlap2 => [cur.a2, cur.a1, cur.b1],
                _ => unreachable!(),
            };
            (case, alpha)
        } else if a1_in && a2_in {
            // both letters inside a strictly larger b-set
            let eq12 = {
                let p = [cur.b1, cur.b2];
                p.contains(&cur.a1) && p.contains(&cur.a2)
            };
            let eq34 = {
                let p = [cur.b3, cur.b4];
                p.contains(&cur.a1) && p.contains(&cur.a2)
            };
            let case = if eq12 {
                WitnessCase::Subset1
            } else if eq34 {
                WitnessCase::Subset2
            } else if cur.a1 == cur.b1 || cur.a1 == cur.b2 {
                WitnessCase::Subset3
            } else {
                WitnessCase::Subset4
            };
            if case == WitnessCase::Subset2 {
                cur = cur.role_swapped();
                role_swapped = true;
            }
            let alpha = match case {
                WitnessCase::Subset1 | WitnessCase::Subset2 => {
                    // orient a1 = b1, a2 = b2, and keep b4 outside {a1,a2}
                    if cur.b1 != cur.a1 {
                        cur = cur.swap_b12();
                        b12_swapped = true;
                    }
                    if cur.b4 == cur.a1 || cur.b4 == cur.a2 {
                        cur = cur.swap_b34();
                        b34_swapped = true;
                    }
                    // α = (a1, b2, b3)
                    [cur.a1, cur.b2, cur.b3]
                }
                WitnessCase::Subset3 => {
                    // orient b1 = a1 and b3 = a2; α = (a1, b1, b2)
                    if cur.b1 != cur.a1 {
                        cur = cur.swap_b12();
                        b12_swapped = true;
                    }
                    if cur.b3 != cur.a2 {
                        cur = cur.swap_b34();
                        b34_swapped = true;
                    }
                    [cur.a1, cur.b1, cur.b2]
                }
                WitnessCase::Subset4 => {
                    // orient b1 = a2 and b3 = a1; α = (a1, b1, b3)
                    if cur.b1 != cur.a2 {
                        cur = cur.swap_b12();
                        b12_swapped = true;
                    }
                    if cur.b3 != cur.a1 {
                        cur = cur.swap_b34();
                        b34_swapped = true;
                    }
                    [cur.a1, cur.b1, cur.b3]
                }
                _ => unreachable!(),
            };
            (case, alpha)
        } else {
            // a ∩ b = ∅ is condition (i), already handled
            return Err(Error::CaseAnalysisGap { spec: *self });
        };

        let u = self.build();
        let one = Permutation::identity(self.n, 1)?;
        let left = u.tensor(&one)?;
        let right = one.tensor(&u)?;
        let alpha = MultiIndex::new(self.n, alpha.to_vec())?;
        let lhs = left.apply(&right.apply(&alpha)?)?;
        let rhs = right.apply(&left.apply(&alpha)?)?;
        if lhs == rhs {
            return Err(Error::CaseAnalysisGap { spec: *self });
        }
        Ok(Some(CaseWitness {
            witness: Witness { alpha, lhs, rhs },
            case,
            role_swapped,
            b12_swapped,
            b34_swapped,
            normalized: cur,
        }))
    }
}
