//! Report rendering. JSON reports are a single envelope object with keys in
//! a fixed order (`command`, `version`, `inputs`, `seed` when sampling,
//! `result`), newline-terminated; identical invocations produce identical
//! bytes. Execution knobs (worker count, output format) are deliberately not
//! echoed. See `schemas/report.schema.json`.

use serde::Serialize;

use stable_perms::enumerate::{EnumReport, ReportDetail};
use stable_perms::{
    CaseWitness, FamilySpec, FamilyVerdict, MultiIndex, PsiTrace, StabilityStatus,
    StabilityVerdict, Witness,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub version: &'static str,
    pub inputs: I,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: R,
}

impl<I: Serialize, R: Serialize> Envelope<I, R> {
    pub fn new(command: &'static str, inputs: I, result: R) -> Self {
        Envelope {
            command,
            version: VERSION,
            inputs,
            seed: None,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("report types serialize");
        text.push('\n');
        text
    }
}

fn letters(m: &MultiIndex) -> Vec<usize> {
    m.letters().to_vec()
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub alpha: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            alpha: letters(&w.alpha),
            lhs: letters(&w.lhs),
            rhs: letters(&w.rhs),
        }
    }
}

// ---- check ----------------------------------------------------------------

#[derive(Serialize)]
pub struct CheckInputs {
    pub n: usize,
    pub k: usize,
    /// Canonical cycle notation of the parsed permutation.
    pub perm: String,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_max: Option<usize>,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub stable: bool,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

pub fn check_result(verdict: &StabilityVerdict) -> CheckResult {
    let (status, rank) = match verdict.status {
        StabilityStatus::StableWithRank(r) => ("stable-with-rank", Some(r)),
        StabilityStatus::NotStableWithinHorizon => ("not-stable-within-horizon", None),
        StabilityStatus::Rank1Exact(_) => ("rank1-exact", None),
    };
    CheckResult {
        stable: verdict.is_stable(),
        status,
        rank,
        witness: verdict.witness.as_ref().map(WitnessJson::from),
    }
}

pub fn check_text(inputs: &CheckInputs, verdict: &StabilityVerdict) -> String {
    let mut out = format!(
        "permutation: {} over [{}]^{}\n",
        inputs.perm, inputs.n, inputs.k
    );
    match verdict.status {
        StabilityStatus::StableWithRank(r) => {
            out.push_str(&format!(
                "status: stable with rank {} (horizon k_max={}, l_max={})\n",
                r,
                inputs.k_max.unwrap_or_default(),
                inputs.l_max.unwrap_or_default()
            ));
        }
        StabilityStatus::NotStableWithinHorizon => {
            out.push_str(&format!(
                "status: not stable within horizon (k_max={}, l_max={})\n",
                inputs.k_max.unwrap_or_default(),
                inputs.l_max.unwrap_or_default()
            ));
        }
        StabilityStatus::Rank1Exact(stable) => {
            out.push_str(&format!(
                "status: {} (exact rank-1 criterion)\n",
                if stable { "stable of rank 1" } else { "not stable of rank 1" }
            ));
        }
    }
    if let Some(w) = &verdict.witness {
        out.push_str(&format!("witness: {w}\n"));
    }
    out
}

// ---- family ---------------------------------------------------------------

#[derive(Serialize)]
pub struct FamilyInputs {
    pub n: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub b4: usize,
}

impl From<&FamilySpec> for FamilyInputs {
    fn from(s: &FamilySpec) -> Self {
        FamilyInputs {
            n: s.n,
            a1: s.a1,
            a2: s.a2,
            b1: s.b1,
            b2: s.b2,
            b3: s.b3,
            b4: s.b4,
        }
    }
}

#[derive(Serialize)]
pub struct CaseWitnessJson {
    pub case: &'static str,
    pub role_swapped: bool,
    pub b12_swapped: bool,
    pub b34_swapped: bool,
    pub normalized: FamilyInputs,
    pub alpha: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl From<&CaseWitness> for CaseWitnessJson {
    fn from(cw: &CaseWitness) -> Self {
        CaseWitnessJson {
            case: cw.case.label(),
            role_swapped: cw.role_swapped,
            b12_swapped: cw.b12_swapped,
            b34_swapped: cw.b34_swapped,
            normalized: FamilyInputs::from(&cw.normalized),
            alpha: letters(&cw.witness.alpha),
            lhs: letters(&cw.witness.lhs),
            rhs: letters(&cw.witness.rhs),
        }
    }
}

#[derive(Serialize)]
pub struct FamilyResult {
    pub condition_i: bool,
    pub condition_ii: bool,
    pub predicted_stable: bool,
    pub verified_stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CaseWitnessJson>,
}

pub fn family_result(verdict: &FamilyVerdict) -> FamilyResult {
    FamilyResult {
        condition_i: verdict.condition_i,
        condition_ii: verdict.condition_ii,
        predicted_stable: verdict.predicted_stable,
        verified_stable: verdict.verified_stable,
        witness: verdict.witness.as_ref().map(CaseWitnessJson::from),
    }
}

pub fn family_text(spec: &FamilySpec, verdict: &FamilyVerdict) -> String {
    let mut out = format!("spec: {spec}\n");
    out.push_str(&format!(
        "condition (i) disjoint: {}\ncondition (ii) equal sets: {}\n",
        verdict.condition_i, verdict.condition_ii
    ));
    out.push_str(&format!(
        "predicted stable: {}\nverified stable: {}\n",
        verdict.predicted_stable, verdict.verified_stable
    ));
    if let Some(cw) = &verdict.witness {
        out.push_str(&format!("witness [{}]: {}\n", cw.case.label(), cw.witness));
        out.push_str(&format!(
            "normalization: role_swapped={} b12_swapped={} b34_swapped={} normalized={}\n",
            cw.role_swapped, cw.b12_swapped, cw.b34_swapped, cw.normalized
        ));
    }
    out
}

// ---- psi ------------------------------------------------------------------

#[derive(Serialize)]
pub struct PsiInputs {
    pub n: usize,
    pub k: usize,
    pub perm: String,
    pub upto: usize,
}

#[derive(Serialize)]
pub struct PsiLevel {
    pub level: usize,
    pub cycles: String,
    /// Whether this term equals the previous one tensored with the identity;
    /// `null` at level 0.
    pub stabilized: Option<bool>,
}

#[derive(Serialize)]
pub struct PsiResult {
    pub levels: Vec<PsiLevel>,
}

pub fn psi_result(trace: &PsiTrace) -> PsiResult {
    let levels = trace
        .terms()
        .iter()
        .enumerate()
        .map(|(level, term)| PsiLevel {
            level,
            cycles: stable_perms::format_cycles(term),
            stabilized: (level > 0).then(|| trace.stabilized_at(level)),
        })
        .collect();
    PsiResult { levels }
}

pub fn psi_text(inputs: &PsiInputs, result: &PsiResult) -> String {
    let mut out = format!(
        "permutation: {} over [{}]^{}\n",
        inputs.perm, inputs.n, inputs.k
    );
    for level in &result.levels {
        match level.stabilized {
            None => out.push_str(&format!("psi_{}: {}\n", level.level, level.cycles)),
            Some(flag) => out.push_str(&format!(
                "psi_{}: {} [stabilized: {}]\n",
                level.level, level.cycles, flag
            )),
        }
    }
    out
}

// ---- enumerate ------------------------------------------------------------

#[derive(Serialize)]
pub struct EnumInputs {
    pub mode: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
}

#[derive(Serialize)]
pub struct SpaceJson {
    pub kind: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cardinality: Option<u64>,
}

#[derive(Serialize)]
pub struct EnumResult {
    pub space: SpaceJson,
    pub examined: u64,
    pub stable_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_i_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_ii_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled: Option<bool>,
    pub mismatch_count: u64,
    pub mismatches: Vec<String>,
    pub partitions: u64,
    /// Census modes only: canonical cycle strings of the stable elements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<Vec<String>>,
}

pub fn enumerate_result(report: &EnumReport) -> EnumResult {
    let mut result = EnumResult {
        space: SpaceJson {
            kind: report.space.kind_label(),
            n: report.space.n(),
            cardinality: report.space.cardinality(),
        },
        examined: report.examined,
        stable_count: report.stable_count,
        condition_i_count: None,
        condition_ii_count: None,
        sampled: None,
        mismatch_count: report.mismatches.len() as u64,
        mismatches: report.mismatches.clone(),
        partitions: report.partitions,
        stable: None,
    };
    match &report.detail {
        ReportDetail::Census { stable } => result.stable = Some(stable.clone()),
        ReportDetail::FamilySweep {
            condition_i_count,
            condition_ii_count,
            sampled,
            ..
        } => {
            result.condition_i_count = Some(*condition_i_count);
            result.condition_ii_count = Some(*condition_ii_count);
            result.sampled = Some(*sampled);
        }
        ReportDetail::LengthOneSweep { .. } => {}
    }
    result
}

pub fn enumerate_text(report: &EnumReport) -> String {
    let mut out = format!(
        "space: {} n={}",
        report.space.kind_label(),
        report.space.n()
    );
    if let Some(c) = report.space.cardinality() {
        out.push_str(&format!(" (cardinality {c})"));
    }
    out.push('\n');
    if let Some(seed) = report.seed {
        out.push_str(&format!("seed: {seed}\n"));
    }
    out.push_str(&format!("examined: {}\n", report.examined));
    out.push_str(&format!("stable: {}\n", report.stable_count));
    if let ReportDetail::FamilySweep {
        condition_i_count,
        condition_ii_count,
        ..
    } = &report.detail
    {
        out.push_str(&format!("condition (i): {condition_i_count}\n"));
        out.push_str(&format!("condition (ii): {condition_ii_count}\n"));
    }
    out.push_str(&format!("mismatches: {}\n", report.mismatches.len()));
    for m in &report.mismatches {
        out.push_str(&format!("  mismatch: {m}\n"));
    }
    out.push_str(&format!("partitions: {}\n", report.partitions));
    if let ReportDetail::Census { stable } = &report.detail {
        out.push_str("stable elements:\n");
        for s in stable {
            out.push_str(&format!("  {s}\n"));
        }
    }
    out
}

/// One row per itemized result: census modes list the stable elements,
/// sweep modes list every examined candidate with its verdict.
pub fn enumerate_csv(report: &EnumReport) -> Vec<u8> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    match &report.detail {
        ReportDetail::Census { stable } => {
            writer.write_record(["permutation"]).expect("csv record");
            for s in stable {
                writer.write_record([s.as_str()]).expect("csv record");
            }
        }
        ReportDetail::FamilySweep { rows, .. } => {
            writer
                .write_record([
                    "a1",
                    "a2",
                    "b1",
                    "b2",
                    "b3",
                    "b4",
                    "condition_i",
                    "condition_ii",
                    "stable",
                ])
                .expect("csv record");
            for row in rows {
                let s = &row.spec;
                writer
                    .write_record([
                        s.a1.to_string(),
                        s.a2.to_string(),
                        s.b1.to_string(),
                        s.b2.to_string(),
                        s.b3.to_string(),
                        s.b4.to_string(),
                        row.condition_i.to_string(),
                        row.condition_ii.to_string(),
                        row.stable.to_string(),
                    ])
                    .expect("csv record");
            }
        }
        ReportDetail::LengthOneSweep { rows } => {
            writer
                .write_record(["permutation", "stable_rank1"])
                .expect("csv record");
            for row in rows {
                writer
                    .write_record([row.cycles.as_str(), if row.stable_rank1 { "true" } else { "false" }])
                    .expect("csv record");
            }
        }
    }
    writer.into_inner().expect("csv buffer")
}
