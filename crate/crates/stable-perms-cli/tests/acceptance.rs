//! Acceptance suite. Each test is one release criterion; it prints a PASS
//! line on success (visible with `--nocapture`):
//!
//! 1. the family classifier is mismatch-free exhaustively at n = 2, 3, 4;
//! 2. the exact rank-1 criterion and the bounded Ψ-based test agree on all
//!    of S([2]^2) and S([3]^2), with worker-count-independent reports;
//! 3. every unstable family spec at n ≤ 4 gets a table witness whose sides
//!    recompute independently and match the per-case symbolic outputs;
//! 4. every element of S_n for n ≤ 5 is stable of rank 1;
//! 5. the algebraic property suite holds exhaustively at n = 2 and on 10^3
//!    seeded random instances at n = 3, 4;
//! 6. enumerate reports are byte-identical across worker counts and repeats.

use std::collections::HashMap;
use std::process::Command;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stable_perms::enumerate::{sweep_agreement, sweep_family, sweep_t1, RunOptions};
use stable_perms::{
    degree, format_cycles, is_stable_rank1_exact, parse_cycles, FamilySpec, MultiIndex,
    Permutation, WitnessCase,
};

fn opts_with_jobs(jobs: usize) -> RunOptions {
    RunOptions {
        jobs,
        ..RunOptions::default()
    }
}

/// All valid family tuples over `[n]`.
fn all_family_specs(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for a1 in 1..=n {
        for a2 in 1..=n {
            for b1 in 1..=n {
                for b2 in 1..=n {
                    for b3 in 1..=n {
                        for b4 in 1..=n {
                            if a1 != a2 && b1 != b2 && b3 != b4 {
                                out.push(FamilySpec::new(n, a1, a2, b1, b2, b3, b4).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_1_family_classifier_mismatch_free_n2_to_n4() {
    // frozen from the exhaustive oracle loop: (tuples, stable, cond_i, cond_ii)
    let expected = [
        (2, 8u64, 8u64, 0u64, 8u64),
        (3, 216, 24, 0, 24),
        (4, 1728, 96, 48, 48),
    ];
    for (n, tuples, stable, cond_i, cond_ii) in expected {
        let report = sweep_family(n, &RunOptions::default()).unwrap();
        assert!(
            report.mismatches.is_empty(),
            "n={n}: classifier mismatches {:?}",
            report.mismatches
        );
        assert_eq!(report.examined, tuples, "n={n} tuple count");
        assert_eq!(report.stable_count, stable, "n={n} stable count");
        let stable_perms::enumerate::ReportDetail::FamilySweep {
            condition_i_count,
            condition_ii_count,
            ..
        } = report.detail
        else {
            panic!("family sweep detail expected");
        };
        assert_eq!(condition_i_count, cond_i, "n={n} condition (i) count");
        assert_eq!(condition_ii_count, cond_ii, "n={n} condition (ii) count");
    }
    println!("[PASS] criterion 1: family sweeps exhaustive and mismatch-free at n=2,3,4");
}

#[test]
fn criterion_2_exact_and_bounded_verdicts_agree_exhaustively() {
    // n=2: 24 elements; n=3: 362,880 elements
    for (n, total, stable) in [(2usize, 24u64, 4u64), (3, 362_880, 54)] {
        let report = sweep_agreement(n, &RunOptions::default()).unwrap();
        assert_eq!(report.examined, total, "n={n}");
        assert!(
            report.mismatches.is_empty(),
            "n={n}: disagreements {:?}",
            report.mismatches
        );
        // stable census frozen from the brute-force oracle
        assert_eq!(report.stable_count, stable, "n={n} census");
    }
    // the parallel run must reproduce the sequential report exactly
    let seq = sweep_agreement(3, &opts_with_jobs(1)).unwrap();
    let par = sweep_agreement(3, &opts_with_jobs(4)).unwrap();
    assert_eq!(seq.examined, par.examined);
    assert_eq!(seq.stable_count, par.stable_count);
    assert_eq!(seq.partitions, par.partitions);
    assert_eq!(seq.mismatches, par.mismatches);
    assert_eq!(seq.detail, par.detail);
    println!(
        "[PASS] criterion 2: exact/bounded agreement on all of S([2]^2) and S([3]^2), \
         worker-count independent"
    );
}

/// Applies the family involution to a letter pair straight from the tuple,
/// bypassing the permutation machinery entirely.
fn family_pair_action(s: &FamilySpec, x: usize, y: usize) -> (usize, usize) {
    if (x, y) == (s.a1, s.b1) {
        (s.a1, s.b2)
    } else if (x, y) == (s.a1, s.b2) {
        (s.a1, s.b1)
    } else if (x, y) == (s.a2, s.b3) {
        (s.a2, s.b4)
    } else if (x, y) == (s.a2, s.b4) {
        (s.a2, s.b3)
    } else {
        (x, y)
    }
}

fn sides_by_letters(s: &FamilySpec, alpha: [usize; 3]) -> ([usize; 3], [usize; 3]) {
    // lhs = (u⊗1)((1⊗u)(α)); rhs = (1⊗u)((u⊗1)(α))
    let (m2, m3) = family_pair_action(s, alpha[1], alpha[2]);
    let (l1, l2) = family_pair_action(s, alpha[0], m2);
    let (r1, r2) = family_pair_action(s, alpha[0], alpha[1]);
    let (r2b, r3) = family_pair_action(s, r2, alpha[2]);
    ([l1, l2, m3], [r1, r2b, r3])
}

fn in_set(x: usize, set: &[usize]) -> bool {
    set.contains(&x)
}

/// The symbolic α/lhs/rhs each case promises, in the normalized tuple's
/// letters.
fn symbolic_outputs(case: WitnessCase, s: &FamilySpec) -> ([usize; 3], [usize; 3], [usize; 3]) {
    match case {
        WitnessCase::Overlap1 | WitnessCase::Overlap3 | WitnessCase::Subset3 => (
            [s.a1, s.b1, s.b2],
            [s.a1, s.b2, s.b1],
            [s.a1, s.b2, s.b2],
        ),
        WitnessCase::Overlap2 => (
            [s.a2, s.a1, s.b1],
            [s.a2, s.b4, s.b2],
            [s.a2, s.b4, s.b1],
        ),
        WitnessCase::Subset1 | WitnessCase::Subset2 => {
            let rhs_last = if s.b3 == s.a1 {
                s.b2
            } else if s.b3 == s.a2 {
                s.b1
            } else {
                s.b3
            };
            (
                [s.a1, s.b2, s.b3],
                [s.a1, s.b1, s.b4],
                [s.a1, s.a1, rhs_last],
            )
        }
        WitnessCase::Subset4 => (
            [s.a1, s.b1, s.b3],
            [s.a1, s.b2, s.b4],
            [s.a1, s.b2, s.b3],
        ),
        WitnessCase::Generic => panic!("table witnesses never carry the generic label"),
    }
}

/// The preconditions each case promises of its normalized tuple.
fn check_case_preconditions(case: WitnessCase, s: &FamilySpec) {
    let a = [s.a1, s.a2];
    let b12 = [s.b1, s.b2];
    let b34 = [s.b3, s.b4];
    let b = [s.b1, s.b2, s.b3, s.b4];
    match case {
        WitnessCase::Overlap1 => {
            assert!(!in_set(s.a2, &b));
            assert_eq!(s.b1, s.a1);
            assert!(!in_set(s.a1, &b34));
        }
        WitnessCase::Overlap2 => {
            assert!(!in_set(s.a2, &b));
            assert!(!in_set(s.a1, &b12));
            assert_eq!(s.b3, s.a1);
        }
        WitnessCase::Overlap3 => {
            assert!(!in_set(s.a2, &b));
            assert_eq!(s.b1, s.a1);
            assert_eq!(s.b3, s.a1);
        }
        WitnessCase::Subset1 | WitnessCase::Subset2 => {
            // normalized to the first-pair-equality orientation
            assert_eq!(s.b1, s.a1);
            assert_eq!(s.b2, s.a2);
            assert!(!in_set(s.b4, &a));
        }
        WitnessCase::Subset3 => {
            assert_eq!(s.b1, s.a1);
            assert_eq!(s.b3, s.a2);
            assert!(!in_set(s.b2, &a));
            assert!(!in_set(s.b4, &a));
        }
        WitnessCase::Subset4 => {
            assert_eq!(s.b1, s.a2);
            assert_eq!(s.b3, s.a1);
            assert!(!in_set(s.b2, &a));
            assert!(!in_set(s.b4, &a));
        }
        WitnessCase::Generic => unreachable!(),
    }
}

#[test]
fn criterion_3_witness_table_covers_every_unstable_spec_below_n5() {
    let mut seen: HashMap<&'static str, u64> = HashMap::new();
    for n in 2..=4 {
        for spec in all_family_specs(n) {
            let (ci, cii) = spec.classify();
            let cw = spec.case_witness().unwrap();
            if ci || cii {
                assert!(cw.is_none(), "{spec}: stable specs get no table witness");
                continue;
            }
            let cw = cw.unwrap_or_else(|| panic!("{spec}: missing witness"));
            *seen.entry(cw.case.label()).or_insert(0) += 1;

            // the two sides recompute independently and disagree
            let alpha: [usize; 3] = cw.witness.alpha.letters().try_into().unwrap();
            let (lhs, rhs) = sides_by_letters(&spec, alpha);
            assert_ne!(lhs, rhs, "{spec}: witness sides must differ");
            assert_eq!(cw.witness.lhs.letters(), &lhs, "{spec}: lhs mismatch");
            assert_eq!(cw.witness.rhs.letters(), &rhs, "{spec}: rhs mismatch");

            // the normalized tuple satisfies the case preconditions and
            // reproduces the symbolic outputs
            assert_eq!(spec.build(), cw.normalized.build());
            check_case_preconditions(cw.case, &cw.normalized);
            let (s_alpha, s_lhs, s_rhs) = symbolic_outputs(cw.case, &cw.normalized);
            assert_eq!(alpha, s_alpha, "{spec}: α formula");
            assert_eq!(lhs, s_lhs, "{spec}: symbolic lhs");
            assert_eq!(rhs, s_rhs, "{spec}: symbolic rhs");
        }
    }
    // every case row is exercised by at least one instance
    for label in [
        "L2.2-C1", "L2.2-C2", "L2.2-C3", "L2.3-C1", "L2.3-C2", "L2.3-C3", "L2.3-C4",
    ] {
        assert!(
            seen.get(label).copied().unwrap_or(0) > 0,
            "case {label} never exercised; saw {seen:?}"
        );
    }
    println!("[PASS] criterion 3: witness table verified on every unstable spec at n ≤ 4 ({seen:?})");
}

#[test]
fn criterion_4_every_length_one_permutation_is_stable_rank_one() {
    for n in 2..=5 {
        let report = sweep_t1(n, &RunOptions::default()).unwrap();
        let expected: u64 = (1..=n as u64).product();
        assert_eq!(report.examined, expected, "n={n}");
        assert_eq!(report.stable_count, expected, "n={n}");
        assert!(report.mismatches.is_empty(), "n={n}");
    }
    println!("[PASS] criterion 4: 100% stable of rank 1 across S_2..S_5");
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Permutation {
    let mut image: Vec<usize> = (0..degree(n, k).unwrap()).collect();
    image.shuffle(rng);
    Permutation::from_image(n, k, image).unwrap()
}

fn all_s22() -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if let Ok(p) = Permutation::from_image(2, 2, vec![a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
    }
    assert_eq!(out.len(), 24);
    out
}

#[test]
fn criterion_5_algebraic_property_suite() {
    // exhaustive n=2 set: group laws and cycle round-trip
    let elements = all_s22();
    let id = Permutation::identity(2, 2).unwrap();
    for p in &elements {
        assert_eq!(&p.compose(&id).unwrap(), p);
        assert_eq!(&id.compose(p).unwrap(), p);
        assert_eq!(p.compose(&p.inverse()).unwrap(), id);
        assert_eq!(p.inverse().compose(p).unwrap(), id);
        let text = format_cycles(p);
        assert_eq!(
            &parse_cycles(&text, 2, 2).unwrap().to_permutation().unwrap(),
            p
        );
    }
    for a in &elements {
        for b in &elements {
            for c in &elements {
                assert_eq!(
                    a.compose(b).unwrap().compose(c).unwrap(),
                    a.compose(&b.compose(c).unwrap()).unwrap()
                );
            }
        }
    }

    // rank/unrank bijection over every shape with degree ≤ 10^4
    for n in 1..=10 {
        for k in 1..=14 {
            let Ok(d) = degree(n, k) else { break };
            if d > 10_000 {
                break;
            }
            for code in 0..d {
                assert_eq!(MultiIndex::from_rank(code, n, k).unwrap().rank(), code);
            }
        }
    }

    // 10^3 seeded random instances at n = 3 and n = 4
    let mut rng = ChaCha8Rng::seed_from_u64(0x57AB1E);
    for n in [3usize, 4] {
        for _ in 0..1000 {
            let u1 = random_perm(&mut rng, n, 1);
            let u2 = random_perm(&mut rng, n, 1);
            let v1 = random_perm(&mut rng, n, 2);
            let v2 = random_perm(&mut rng, n, 2);

            // tensor is a homomorphism commuting with inverse
            assert_eq!(
                u1.tensor(&v1).unwrap().compose(&u2.tensor(&v2).unwrap()).unwrap(),
                u1.compose(&u2).unwrap().tensor(&v1.compose(&v2).unwrap()).unwrap()
            );
            assert_eq!(
                u1.tensor(&v1).unwrap().inverse(),
                u1.inverse().tensor(&v1.inverse()).unwrap()
            );
            // tensor associativity after flattening
            assert_eq!(
                u1.tensor(&v1).unwrap().tensor(&u2).unwrap(),
                u1.tensor(&v1.tensor(&u2).unwrap()).unwrap()
            );
            // cycle notation round-trip
            let text = format_cycles(&v1);
            assert_eq!(
                parse_cycles(&text, n, 2).unwrap().to_permutation().unwrap(),
                v1
            );
            // inverse symmetry of the rank-1 criterion
            assert_eq!(
                is_stable_rank1_exact(&v1).unwrap().0,
                is_stable_rank1_exact(&v1.inverse()).unwrap().0
            );
            // relabeling invariance: conjugate by σ⊗σ
            let relabel = u1.tensor(&u1).unwrap();
            let conjugated = relabel
                .compose(&v1)
                .unwrap()
                .compose(&relabel.inverse())
                .unwrap();
            assert_eq!(
                is_stable_rank1_exact(&v1).unwrap().0,
                is_stable_rank1_exact(&conjugated).unwrap().0
            );
        }
    }
    println!("[PASS] criterion 5: algebraic properties hold (exhaustive n=2, 10^3 seeded at n=3,4)");
}

fn run_enumerate(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_stableperm"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "stableperm {args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    output.stdout
}

#[test]
fn criterion_6_reports_are_byte_identical_across_workers_and_repeats() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["enumerate", "--mode", "rank1", "--n", "3"],
        vec!["enumerate", "--mode", "rank1", "--n", "4", "--space", "involutions"],
        vec!["enumerate", "--mode", "family", "--n", "4"],
        vec!["enumerate", "--mode", "family", "--n", "5", "--samples", "500"],
        vec!["enumerate", "--mode", "t1", "--n", "5"],
        vec!["enumerate", "--mode", "family", "--n", "3", "--format", "csv"],
        vec!["enumerate", "--mode", "t1", "--n", "4", "--format", "text"],
    ];
    for case in &cases {
        let mut outputs = Vec::new();
        for jobs in ["1", "4"] {
            for _ in 0..3 {
                let mut args = case.clone();
                args.extend_from_slice(&["--jobs", jobs]);
                outputs.push(run_enumerate(&args));
            }
        }
        assert!(
            outputs.windows(2).all(|w| w[0] == w[1]),
            "outputs differ for {case:?}"
        );
        assert!(!outputs[0].is_empty());
    }
    println!("[PASS] criterion 6: byte-identical reports across --jobs 1/4 and three repeats");
}
