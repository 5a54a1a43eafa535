//! Campaign runner: sweeps a corpus of instances through the certifiers with
//! independent verification and deterministic, streamable reporting.
//!
//! Reports are line-delimited JSON records followed by one summary object.
//! Two runs with the same config produce byte-identical report bytes: the
//! random stream is split per instance index, instances are aggregated in
//! index order regardless of scheduling, and wall-clock timing stays out of
//! the serialized artifact.

use crate::certify::{self, Certificate, TheoremId, TheoremReport};
use crate::error::{Error, Result};
use crate::gen;
use crate::graph::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignMode {
    /// Every labeled connected graph with `n_min <= n <= n_max`.
    Exhaustive,
    /// `instances` seeded random graphs, `n` uniform in `[n_min, n_max]`.
    Random,
    /// Graphs read from `corpus_file` (graph6 lines or one edge list).
    CorpusFile,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Vertex cap for exhaustive bond enumeration fallbacks.
    pub bond_enumeration: usize,
    /// Maximum paths the enumeration verifier may visit per instance.
    pub path_enumeration: u64,
    /// Maximum longest paths the transversal solver may collect.
    pub lpt_paths: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            bond_enumeration: crate::bond::DEFAULT_BOND_ENUM_CAP,
            path_enumeration: 50_000_000,
            lpt_paths: crate::path::DEFAULT_LPT_CAP,
        }
    }
}

fn default_theorems() -> Vec<u8> {
    vec![1]
}

fn default_k() -> usize {
    3
}

fn default_schema() -> u32 {
    REPORT_SCHEMA_VERSION
}

/// Full description of a verification sweep. The seed determines the random
/// instance stream completely.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CampaignConfig {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub mode: CampaignMode,
    /// Theorem numbers to certify (subset of {1, 2, 3}).
    #[serde(default = "default_theorems")]
    pub theorems: Vec<u8>,
    #[serde(default)]
    pub n_min: usize,
    #[serde(default)]
    pub n_max: usize,
    /// Connectivity for the generator and the k-connected certifier.
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub instances: usize,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus_file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl CampaignConfig {
    pub fn from_json(text: &str) -> Result<CampaignConfig> {
        let cfg: CampaignConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.theorems.is_empty() {
            return Err(Error::Config("select at least one theorem".into()));
        }
        for &t in &self.theorems {
            if TheoremId::from_number(t).is_none() {
                return Err(Error::Config(format!("unknown theorem {t}")));
            }
        }
        if self.caps.bond_enumeration == 0 || self.caps.path_enumeration == 0 || self.caps.lpt_paths == 0
        {
            return Err(Error::Config("caps must be positive".into()));
        }
        match self.mode {
            CampaignMode::Exhaustive | CampaignMode::Random => {
                if self.n_min < 1 || self.n_max < self.n_min {
                    return Err(Error::Config("need 1 <= n_min <= n_max".into()));
                }
                if self.mode == CampaignMode::Random && self.instances == 0 {
                    return Err(Error::Config("random mode needs instances >= 1".into()));
                }
            }
            CampaignMode::CorpusFile => {
                if self.corpus_file.is_none() {
                    return Err(Error::Config("corpus-file mode needs corpus_file".into()));
                }
            }
        }
        Ok(())
    }

    /// k-connectivity the random generator must provide to feed every
    /// selected certifier.
    fn generator_k(&self) -> usize {
        let mut k = 1;
        if self.theorems.contains(&2) {
            k = k.max(3);
        }
        if self.theorems.contains(&3) {
            k = k.max(self.k);
        }
        k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceStatus {
    /// Certified and independently verified.
    Verified,
    /// Hypotheses of the selected theorem not met; not an error.
    Skipped,
    /// Verification hit its enumeration cap; recorded, not fatal.
    Capped,
    /// Certification or verification failed: falsification territory.
    Failed,
}

/// One (instance, theorem) outcome; serialized as one report line.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub record: &'static str,
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub theorem: u8,
    pub status: InstanceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub record: &'static str,
    pub schema_version: u32,
    pub config: CampaignConfig,
    pub instances: usize,
    pub certified: usize,
    pub verified: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub capped: usize,
    pub failed: usize,
    /// Must be empty on a passing run.
    pub falsifications: Vec<String>,
}

/// Aggregated result of a sweep. `wall` is stdout-only; the serialized report
/// is a pure function of the config.
#[derive(Debug)]
pub struct CampaignReport {
    pub records: Vec<InstanceRecord>,
    pub summary: CampaignSummary,
    pub wall: std::time::Duration,
}

impl CampaignReport {
    /// Line-delimited records followed by the summary line.
    pub fn to_jsonl(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for rec in &self.records {
            serde_json::to_writer(&mut out, rec).expect("serializable record");
            out.push(b'\n');
        }
        serde_json::to_writer(&mut out, &self.summary).expect("serializable summary");
        out.push(b'\n');
        out
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.falsifications.is_empty()
    }
}

fn corpus_from_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Config(format!("{} is empty", path.display())));
    }
    // an edge-list file starts with a digit header; graph6 bytes are >= '?'
    let first = trimmed.lines().next().unwrap();
    if first.split_whitespace().count() >= 2 || first.chars().next().is_some_and(|c| c.is_ascii_digit())
    {
        Ok(vec![Graph::from_edge_list_text(trimmed)?])
    } else {
        trimmed.lines().map(Graph::from_graph6).collect()
    }
}

/// Theorem hypotheses, checked before certification; a miss is a skip.
fn hypothesis_gap(g: &Graph, theorem: TheoremId, k: usize) -> Option<String> {
    match theorem {
        TheoremId::Connected => {
            if g.n() < 4 {
                return Some(format!("n = {} < 4", g.n()));
            }
            if !g.is_connected() {
                return Some("not connected".into());
            }
        }
        TheoremId::ThreeConnected => {
            if g.n() < 6 {
                return Some(format!("n = {} < 6", g.n()));
            }
            if !crate::connectivity::is_k_connected(g, 3) {
                return Some("not 3-connected".into());
            }
        }
        TheoremId::KConnected => {
            if !crate::connectivity::is_k_connected(g, k) {
                return Some(format!("not {k}-connected"));
            }
        }
    }
    None
}

fn certify_with_caps(g: &Graph, theorem: TheoremId, k: usize, caps: &Caps) -> Result<Certificate> {
    match theorem {
        TheoremId::Connected => certify::certify_connected(g),
        TheoremId::ThreeConnected => {
            certify::certify_three_connected_with_cap(g, caps.bond_enumeration)
        }
        TheoremId::KConnected => certify::certify_k_connected_with_cap(g, k, caps.bond_enumeration),
    }
}

fn run_one(index: usize, g: &Graph, theorem: TheoremId, cfg: &CampaignConfig) -> InstanceRecord {
    let base = |status, skip_reason| InstanceRecord {
        record: "instance",
        index,
        graph6: g.to_graph6(),
        n: g.n(),
        m: g.edge_count(),
        theorem: theorem.number(),
        status,
        skip_reason,
        p: None,
        threshold: None,
        certificate: None,
        verified: None,
        failures: Vec::new(),
    };
    if let Some(reason) = hypothesis_gap(g, theorem, cfg.k) {
        return base(InstanceStatus::Skipped, Some(reason));
    }
    match certify_with_caps(g, theorem, cfg.k, &cfg.caps) {
        Err(e) => {
            let mut rec = base(InstanceStatus::Failed, None);
            rec.failures.push(format!("certification failed: {e}"));
            rec
        }
        Ok(cert) => {
            let report: TheoremReport =
                certify::verify_certificate_capped(g, &cert, cfg.caps.path_enumeration);
            let status = if report.capped {
                InstanceStatus::Capped
            } else if report.verified {
                InstanceStatus::Verified
            } else {
                InstanceStatus::Failed
            };
            let mut rec = base(status, None);
            rec.p = Some(cert.p);
            rec.threshold = Some(cert.threshold);
            rec.certificate = Some(cert.kind.name().to_string());
            rec.verified = Some(report.verified);
            rec.failures = report.failures;
            rec
        }
    }
}

/// Runs the sweep described by `config`: streams instances, certifies with
/// every selected theorem, independently verifies each certificate, and
/// aggregates in instance order. Writes the report to `config.out` if set.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let start = std::time::Instant::now();
    let graphs: Vec<Graph> = match config.mode {
        CampaignMode::Exhaustive => {
            let mut all = Vec::new();
            for n in config.n_min..=config.n_max {
                all.extend(gen::exhaustive_connected_graphs(n)?);
            }
            all
        }
        CampaignMode::Random => {
            let gen_k = config.generator_k();
            let span = config.n_max - config.n_min + 1;
            (0..config.instances)
                .into_par_iter()
                .map(|i| {
                    let seed = gen::split_seed(config.seed, i as u64);
                    let n = config.n_min + (gen::split_seed(seed, 1) % span as u64) as usize;
                    if gen_k >= 2 {
                        let n = n.max(gen_k + 1);
                        gen::gen_k_connected(n, gen_k, seed)
                    } else {
                        gen::gen_connected(n, seed)
                    }
                })
                .collect::<Result<Vec<_>>>()?
        }
        CampaignMode::CorpusFile => corpus_from_file(config.corpus_file.as_ref().unwrap())?,
    };

    let theorems: Vec<TheoremId> = config
        .theorems
        .iter()
        .map(|&t| TheoremId::from_number(t).unwrap())
        .collect();

    let mut work: Vec<(usize, &Graph, TheoremId)> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for &t in &theorems {
            work.push((i, g, t));
        }
    }
    let records: Vec<InstanceRecord> = work
        .into_par_iter()
        .map(|(i, g, t)| run_one(i, g, t, config))
        .collect();
    // par_iter preserves input order, which is instance order by construction

    let mut summary = CampaignSummary {
        record: "summary",
        schema_version: REPORT_SCHEMA_VERSION,
        config: config.clone(),
        instances: records.len(),
        certified: 0,
        verified: 0,
        vacuous: 0,
        skipped: 0,
        capped: 0,
        failed: 0,
        falsifications: Vec::new(),
    };
    for rec in &records {
        match rec.status {
            InstanceStatus::Verified => {
                summary.certified += 1;
                summary.verified += 1;
                if rec.certificate.as_deref() == Some("vacuous") {
                    summary.vacuous += 1;
                }
            }
            InstanceStatus::Skipped => summary.skipped += 1,
            InstanceStatus::Capped => {
                summary.certified += 1;
                summary.capped += 1;
            }
            InstanceStatus::Failed => {
                summary.failed += 1;
                summary.falsifications.push(format!(
                    "instance {} ({}) theorem {}: {}",
                    rec.index,
                    rec.graph6,
                    rec.theorem,
                    rec.failures.join("; ")
                ));
            }
        }
    }

    let report = CampaignReport {
        records,
        summary,
        wall: start.elapsed(),
    };
    if let Some(out) = &config.out {
        let mut file = std::fs::File::create(out)?;
        file.write_all(&report.to_jsonl())?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> CampaignConfig {
        CampaignConfig {
            schema_version: REPORT_SCHEMA_VERSION,
            mode: CampaignMode::Exhaustive,
            theorems: vec![1],
            n_min: 4,
            n_max: 4,
            k: 3,
            seed: 1,
            instances: 0,
            caps: Caps::default(),
            corpus_file: None,
            out: None,
        }
    }

    #[test]
    fn exhaustive_n4_all_verified() {
        let report = run_campaign(&base_config()).unwrap();
        assert_eq!(report.summary.instances, 38);
        assert_eq!(report.summary.verified, 38);
        assert_eq!(report.summary.failed, 0);
        assert!(report.passed());
    }

    #[test]
    fn random_mode_is_deterministic() {
        let mut cfg = base_config();
        cfg.mode = CampaignMode::Random;
        cfg.n_min = 6;
        cfg.n_max = 8;
        cfg.instances = 12;
        cfg.seed = 99;
        let a = run_campaign(&cfg).unwrap().to_jsonl();
        let b = run_campaign(&cfg).unwrap().to_jsonl();
        assert_eq!(a, b);
    }

    #[test]
    fn corpus_file_skips_hypothesis_misses() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w4.g6");
        std::fs::write(&path, crate::catalog::catalog("W4").unwrap().to_graph6()).unwrap();
        let mut cfg = base_config();
        cfg.mode = CampaignMode::CorpusFile;
        cfg.corpus_file = Some(path);
        cfg.theorems = vec![2];
        let report = run_campaign(&cfg).unwrap();
        assert_eq!(report.summary.skipped, 1, "wheel has n = 5 < 6");
        assert_eq!(report.summary.failed, 0);
        assert!(report.passed());
    }

    #[test]
    fn config_validation() {
        let mut cfg = base_config();
        cfg.theorems = vec![9];
        assert!(cfg.validate().is_err());
        let mut cfg = base_config();
        cfg.n_min = 5;
        cfg.n_max = 4;
        assert!(cfg.validate().is_err());
        let mut cfg = base_config();
        cfg.mode = CampaignMode::CorpusFile;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn config_json_round_trip() {
        let text = r#"{
            "mode": "random",
            "theorems": [2],
            "n_min": 7,
            "n_max": 9,
            "seed": 5,
            "instances": 3
        }"#;
        let cfg = CampaignConfig::from_json(text).unwrap();
        assert_eq!(cfg.k, 3);
        assert_eq!(cfg.caps.bond_enumeration, crate::bond::DEFAULT_BOND_ENUM_CAP);
        let report = run_campaign(&cfg).unwrap();
        assert_eq!(report.summary.instances, 3);
        assert!(report.passed());
    }
}
