//! Exhaustive and sampled searches over candidate spaces, with deterministic
//! partitioning: each space is indexed by a contiguous candidate-code range,
//! split into fixed-size chunks that workers process independently. Reports
//! are identical for any worker count because chunk boundaries and merge
//! order never depend on it.

use std::ops::Range;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cycles::format_cycles;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::perm::Permutation;
use crate::stability::{is_stable_rank1_exact, stability_bounded, StabilityStatus};

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_SAMPLES: u64 = 10_000;

/// Candidates per partition. Small enough to balance load, large enough to
/// keep per-chunk overhead negligible; independent of the worker count.
const CHUNK: u64 = 4096;

/// Execution knobs shared by all sweeps.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Worker count: 0 = all logical CPUs, 1 = in-place sequential.
    pub jobs: usize,
    /// Seed for sampled sweeps; ignored by exhaustive ones.
    pub seed: u64,
    /// Sample count for sampled sweeps.
    pub samples: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: 0,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// All of `S([n]^2)`; exhaustive only for n ∈ {2, 3}.
    FullSn2 { n: usize },
    /// Products of two disjoint transpositions of `[n]^2`, each unordered
    /// pair counted once (the first transposition holds the smallest moved
    /// code); n ≤ 6.
    TwoTranspositionInvolutions { n: usize },
    /// Valid family tuples `(a1,a2,b1,b2,b3,b4)`; exhaustive for 2 ≤ n ≤ 4,
    /// seeded sampling for larger n.
    FamilyTuples { n: usize },
    /// All of `S_n` (length-1 permutations); n ≤ 5.
    FullSn { n: usize },
}

fn factorial_u64(m: u64) -> Option<u64> {
    (1..=m).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

fn factorial_estimate(m: u64) -> f64 {
    (1..=m).map(|i| i as f64).product()
}

impl SearchSpace {
    pub fn n(&self) -> usize {
        match *self {
            SearchSpace::FullSn2 { n }
            | SearchSpace::TwoTranspositionInvolutions { n }
            | SearchSpace::FamilyTuples { n }
            | SearchSpace::FullSn { n } => n,
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self {
            SearchSpace::FullSn2 { .. } => "all-of-sn2",
            SearchSpace::TwoTranspositionInvolutions { .. } => "two-transposition-involutions",
            SearchSpace::FamilyTuples { .. } => "family-tuples",
            SearchSpace::FullSn { .. } => "all-of-sn",
        }
    }

    /// Exact number of candidates, when it fits in u64.
    pub fn cardinality(&self) -> Option<u64> {
        match *self {
            SearchSpace::FullSn2 { n } => factorial_u64((n * n) as u64),
            SearchSpace::TwoTranspositionInvolutions { n } => {
                let points = (n * n) as u64;
                if points < 4 {
                    return Some(0);
                }
                let pairs = points * (points - 1) / 2;
                let rest = (points - 2) * (points - 3) / 2;
                Some(pairs * rest / 2)
            }
            SearchSpace::FamilyTuples { n } => {
                let n = n as u64;
                Some(n.pow(3) * (n - 1).pow(3))
            }
            SearchSpace::FullSn { n } => factorial_u64(n as u64),
        }
    }

    pub fn cardinality_estimate(&self) -> f64 {
        match *self {
            SearchSpace::FullSn2 { n } => factorial_estimate((n * n) as u64),
            _ => self.cardinality().map(|c| c as f64).unwrap_or(f64::INFINITY),
        }
    }

    fn ensure_feasible(&self) -> Result<()> {
        let refuse = |reason: String| {
            Err(Error::InfeasibleSpace {
                space: format!("{} at n={}", self.kind_label(), self.n()),
                reason,
            })
        };
        match *self {
            SearchSpace::FullSn2 { n } => {
                if !(2..=3).contains(&n) {
                    return refuse(format!(
                        "({}^2)! ≈ {:.2e} candidates; the exhaustive scan supports n ∈ {{2, 3}}",
                        n,
                        self.cardinality_estimate()
                    ));
                }
            }
            SearchSpace::TwoTranspositionInvolutions { n } => {
                if !(2..=6).contains(&n) {
                    return refuse(format!(
                        "≈ {:.2e} candidates; supported range is 2 ≤ n ≤ 6",
                        self.cardinality_estimate()
                    ));
                }
            }
            SearchSpace::FamilyTuples { n } => {
                if n < 2 {
                    return refuse("family tuples need n ≥ 2".into());
                }
            }
            SearchSpace::FullSn { n } => {
                if !(2..=5).contains(&n) {
                    return refuse(format!(
                        "{}! candidates with degrees up to {}^4; supported range is 2 ≤ n ≤ 5",
                        n, n
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Per-candidate verdict rows carried by the sweep reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub spec: FamilySpec,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthOneRow {
    pub cycles: String,
    pub stable_rank1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportDetail {
    /// Canonical cycle strings of the stable elements, sorted.
    Census { stable: Vec<String> },
    FamilySweep {
        condition_i_count: u64,
        condition_ii_count: u64,
        sampled: bool,
        rows: Vec<FamilyRow>,
    },
    LengthOneSweep { rows: Vec<LengthOneRow> },
}

/// Outcome of a sweep. Everything except `wall` is deterministic for fixed
/// inputs and seed; `wall` is measured and must stay out of serialized
/// reports.
#[derive(Debug, Clone)]
pub struct EnumReport {
    pub space: SearchSpace,
    pub examined: u64,
    pub stable_count: u64,
    /// Candidates whose two verdict routes disagreed; empty on every clean
    /// sweep.
    pub mismatches: Vec<String>,
    pub partitions: u64,
    pub wall: Duration,
    pub seed: Option<u64>,
    pub detail: ReportDetail,
}

fn partition_ranges(total: u64) -> Vec<Range<u64>> {
    if total == 0 {
        return Vec::new();
    }
    (0..total.div_ceil(CHUNK))
        .map(|i| i * CHUNK..((i + 1) * CHUNK).min(total))
        .collect()
}

#[cfg(feature = "parallel")]
fn map_partitions<T, F>(ranges: Vec<Range<u64>>, jobs: usize, eval: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Range<u64>) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;
    // a single partition gains nothing from a pool
    if jobs == 1 || ranges.len() <= 1 {
        return ranges.into_iter().map(eval).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs) // 0 means rayon's default
        .build()
        .expect("thread pool construction");
    pool.install(|| ranges.into_par_iter().map(eval).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_partitions<T, F>(ranges: Vec<Range<u64>>, _jobs: usize, eval: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Range<u64>) -> Result<T> + Sync + Send,
{
    ranges.into_iter().map(eval).collect()
}

/// Unranks `index` into the permutation of `0..len` at that position of the
/// factorial number system (lexicographic order of one-line images).
fn nth_permutation(len: usize, index: u64) -> Vec<usize> {
    let mut factorials = vec![1u64; len];
    for i in 1..len {
        factorials[i] = factorials[i - 1] * i as u64;
    }
    let mut remaining: Vec<usize> = (0..len).collect();
    let mut rest = index;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let f = factorials[len - 1 - i];
        let d = (rest / f) as usize;
        rest %= f;
        out.push(remaining.remove(d));
    }
    out
}

struct CensusPartial {
    examined: u64,
    stable: Vec<String>,
}

fn finish_census(
    space: SearchSpace,
    partials: Vec<CensusPartial>,
    partitions: u64,
    started: Instant,
) -> EnumReport {
    let mut examined = 0;
    let mut stable = Vec::new();
    for p in partials {
        examined += p.examined;
        stable.extend(p.stable);
    }
    stable.sort_unstable();
    EnumReport {
        space,
        examined,
        stable_count: stable.len() as u64,
        mismatches: Vec::new(),
        partitions,
        wall: started.elapsed(),
        seed: None,
        detail: ReportDetail::Census { stable },
    }
}

/// Applies the exact rank-1 criterion to every element of the space.
/// Supported spaces: [`SearchSpace::FullSn2`] and
/// [`SearchSpace::TwoTranspositionInvolutions`].
pub fn census_rank1(space: SearchSpace, opts: &RunOptions) -> Result<EnumReport> {
    space.ensure_feasible()?;
    let started = Instant::now();
    match space {
        SearchSpace::FullSn2 { n } => {
            let total = space.cardinality().expect("feasible space fits u64");
            let ranges = partition_ranges(total);
            let partitions = ranges.len() as u64;
            let partials = map_partitions(ranges, opts.jobs, |range| {
                let mut part = CensusPartial {
                    examined: 0,
                    stable: Vec::new(),
                };
                for index in range {
                    let u = Permutation::from_image(n, 2, nth_permutation(n * n, index))?;
                    part.examined += 1;
                    if is_stable_rank1_exact(&u)?.0 {
                        part.stable.push(format_cycles(&u));
                    }
                }
                Ok(part)
            })?;
            Ok(finish_census(space, partials, partitions, started))
        }
        SearchSpace::TwoTranspositionInvolutions { n } => {
            let points = n * n;
            let pairs: Vec<(usize, usize)> = (0..points)
                .flat_map(|p| (p + 1..points).map(move |q| (p, q)))
                .collect();
            let total = (pairs.len() * pairs.len()) as u64;
            let ranges = partition_ranges(total);
            let partitions = ranges.len() as u64;
            let pairs = &pairs;
            let partials = map_partitions(ranges, opts.jobs, move |range| {
                let mut part = CensusPartial {
                    examined: 0,
                    stable: Vec::new(),
                };
                for code in range {
                    let (p, q) = pairs[(code / pairs.len() as u64) as usize];
                    let (r, s) = pairs[(code % pairs.len() as u64) as usize];
                    // first transposition holds the smallest moved code;
                    // the two transpositions must be disjoint
                    if r <= p || q == r || q == s {
                        continue;
                    }
                    let mut image: Vec<usize> = (0..points).collect();
                    image.swap(p, q);
                    image.swap(r, s);
                    let u = Permutation::from_image(n, 2, image)?;
                    part.examined += 1;
                    if is_stable_rank1_exact(&u)?.0 {
                        part.stable.push(format_cycles(&u));
                    }
                }
                Ok(part)
            })?;
            Ok(finish_census(space, partials, partitions, started))
        }
        other => Err(Error::InfeasibleSpace {
            space: other.kind_label().into(),
            reason: "census_rank1 runs on all-of-sn2 or two-transposition-involutions".into(),
        }),
    }
}

struct FamilyPartial {
    examined: u64,
    stable: u64,
    cond_i: u64,
    cond_ii: u64,
    mismatches: Vec<String>,
    rows: Vec<FamilyRow>,
}

fn verify_into(spec: FamilySpec, part: &mut FamilyPartial) -> Result<()> {
    part.examined += 1;
    match spec.verify() {
        Ok(verdict) => {
            part.cond_i += verdict.condition_i as u64;
            part.cond_ii += verdict.condition_ii as u64;
            part.stable += verdict.verified_stable as u64;
            part.rows.push(FamilyRow {
                spec,
                condition_i: verdict.condition_i,
                condition_ii: verdict.condition_ii,
                stable: verdict.verified_stable,
            });
        }
        Err(Error::PredictionMismatch {
            spec,
            predicted,
            verified,
        }) => {
            part.mismatches.push(format!(
                "{spec}: predicted {predicted}, verified {verified}"
            ));
            let (condition_i, condition_ii) = spec.classify();
            part.rows.push(FamilyRow {
                spec,
                condition_i,
                condition_ii,
                stable: verified,
            });
        }
        Err(other) => return Err(other),
    }
    Ok(())
}

fn finish_family(
    space: SearchSpace,
    partials: Vec<FamilyPartial>,
    partitions: u64,
    sampled: bool,
    seed: Option<u64>,
    started: Instant,
) -> EnumReport {
    let mut examined = 0;
    let mut stable = 0;
    let mut cond_i = 0;
    let mut cond_ii = 0;
    let mut mismatches = Vec::new();
    let mut rows = Vec::new();
    for p in partials {
        examined += p.examined;
        stable += p.stable;
        cond_i += p.cond_i;
        cond_ii += p.cond_ii;
        mismatches.extend(p.mismatches);
        rows.extend(p.rows);
    }
    EnumReport {
        space,
        examined,
        stable_count: stable,
        mismatches,
        partitions,
        wall: started.elapsed(),
        seed,
        detail: ReportDetail::FamilySweep {
            condition_i_count: cond_i,
            condition_ii_count: cond_ii,
            sampled,
            rows,
        },
    }
}

/// Runs [`FamilySpec::verify`] over family tuples: exhaustively for
/// 2 ≤ n ≤ 4 (tuples indexed by their base-n code), by seeded sampling for
/// n ≥ 5. Any classifier/criterion disagreement lands in `mismatches`.
pub fn sweep_family(n: usize, opts: &RunOptions) -> Result<EnumReport> {
    let space = SearchSpace::FamilyTuples { n };
    space.ensure_feasible()?;
    let started = Instant::now();

    if n <= 4 {
        let total = (n as u64).pow(6);
        let ranges = partition_ranges(total);
        let partitions = ranges.len() as u64;
        let partials = map_partitions(ranges, opts.jobs, |range| {
            let mut part = FamilyPartial {
                examined: 0,
                stable: 0,
                cond_i: 0,
                cond_ii: 0,
                mismatches: Vec::new(),
                rows: Vec::new(),
            };
            for code in range {
                let mut digits = [0usize; 6];
                let mut rest = code;
                for d in digits.iter_mut().rev() {
                    *d = (rest % n as u64) as usize + 1;
                    rest /= n as u64;
                }
                let [a1, a2, b1, b2, b3, b4] = digits;
                if a1 == a2 || b1 == b2 || b3 == b4 {
                    continue;
                }
                let spec = FamilySpec::new(n, a1, a2, b1, b2, b3, b4)?;
                verify_into(spec, &mut part)?;
            }
            Ok(part)
        })?;
        return Ok(finish_family(space, partials, partitions, false, None, started));
    }

    // sampled run: draw the candidate list up front so partitioning stays
    // independent of the worker count
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut specs = Vec::with_capacity(opts.samples as usize);
    while (specs.len() as u64) < opts.samples {
        let a1 = rng.random_range(1..=n);
        let a2 = rng.random_range(1..=n);
        let b1 = rng.random_range(1..=n);
        let b2 = rng.random_range(1..=n);
        let b3 = rng.random_range(1..=n);
        let b4 = rng.random_range(1..=n);
        if a1 == a2 || b1 == b2 || b3 == b4 {
            continue;
        }
        specs.push(FamilySpec::new(n, a1, a2, b1, b2, b3, b4)?);
    }
    let ranges = partition_ranges(opts.samples);
    let partitions = ranges.len() as u64;
    let specs = &specs;
    let partials = map_partitions(ranges, opts.jobs, move |range| {
        let mut part = FamilyPartial {
            examined: 0,
            stable: 0,
            cond_i: 0,
            cond_ii: 0,
            mismatches: Vec::new(),
            rows: Vec::new(),
        };
        for index in range {
            verify_into(specs[index as usize], &mut part)?;
        }
        Ok(part)
    })?;
    Ok(finish_family(
        space,
        partials,
        partitions,
        true,
        Some(opts.seed),
        started,
    ))
}

/// Checks that every element of `S_n` is stable of rank 1 under the bounded
/// test at `k_max = 1`, `l_max = 2`.
pub fn sweep_t1(n: usize, opts: &RunOptions) -> Result<EnumReport> {
    let space = SearchSpace::FullSn { n };
    space.ensure_feasible()?;
    let started = Instant::now();
    let total = space.cardinality().expect("n! fits u64 for n ≤ 5");
    let ranges = partition_ranges(total);
    let partitions = ranges.len() as u64;
    struct Partial {
        examined: u64,
        stable: u64,
        mismatches: Vec<String>,
        rows: Vec<LengthOneRow>,
    }
    let partials = map_partitions(ranges, opts.jobs, |range| {
        let mut part = Partial {
            examined: 0,
            stable: 0,
            mismatches: Vec::new(),
            rows: Vec::new(),
        };
        for index in range {
            let u = Permutation::from_image(n, 1, nth_permutation(n, index))?;
            let verdict = stability_bounded(&u, 1, 2)?;
            let ok = verdict.status == StabilityStatus::StableWithRank(1);
            part.examined += 1;
            part.stable += ok as u64;
            let cycles = format_cycles(&u);
            if !ok {
                part.mismatches.push(cycles.clone());
            }
            part.rows.push(LengthOneRow {
                cycles,
                stable_rank1: ok,
            });
        }
        Ok(part)
    })?;
    let mut examined = 0;
    let mut stable = 0;
    let mut mismatches = Vec::new();
    let mut rows = Vec::new();
    for p in partials {
        examined += p.examined;
        stable += p.stable;
        mismatches.extend(p.mismatches);
        rows.extend(p.rows);
    }
    Ok(EnumReport {
        space,
        examined,
        stable_count: stable,
        mismatches,
        partitions,
        wall: started.elapsed(),
        seed: None,
        detail: ReportDetail::LengthOneSweep { rows },
    })
}

/// Cross-checks the exact rank-1 criterion against the bounded Ψ-based test
/// (`k_max = 1`, `l_max = 2`) on every element of `S([n]^2)`. Disagreements
/// land in `mismatches`; the stable census (on which both routes concur) is
/// returned as the detail.
pub fn sweep_agreement(n: usize, opts: &RunOptions) -> Result<EnumReport> {
    let space = SearchSpace::FullSn2 { n };
    space.ensure_feasible()?;
    let started = Instant::now();
    let total = space.cardinality().expect("feasible space fits u64");
    let ranges = partition_ranges(total);
    let partitions = ranges.len() as u64;
    struct Partial {
        examined: u64,
        stable: Vec<String>,
        mismatches: Vec<String>,
    }
    let partials = map_partitions(ranges, opts.jobs, |range| {
        let mut part = Partial {
            examined: 0,
            stable: Vec::new(),
            mismatches: Vec::new(),
        };
        for index in range {
            let u = Permutation::from_image(n, 2, nth_permutation(n * n, index))?;
            let exact = is_stable_rank1_exact(&u)?.0;
            let bounded = stability_bounded(&u, 1, 2)?.status
                == StabilityStatus::StableWithRank(1);
            part.examined += 1;
            if exact != bounded {
                part.mismatches.push(format!(
                    "{}: exact {exact}, bounded {bounded}",
                    format_cycles(&u)
                ));
            } else if exact {
                part.stable.push(format_cycles(&u));
            }
        }
        Ok(part)
    })?;
    let mut examined = 0;
    let mut stable = Vec::new();
    let mut mismatches = Vec::new();
    for p in partials {
        examined += p.examined;
        stable.extend(p.stable);
        mismatches.extend(p.mismatches);
    }
    stable.sort_unstable();
    Ok(EnumReport {
        space,
        examined,
        stable_count: stable.len() as u64,
        mismatches,
        partitions,
        wall: started.elapsed(),
        seed: None,
        detail: ReportDetail::Census { stable },
    })
}
