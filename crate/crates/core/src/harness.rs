//! Parameter-grid sweeps over the identity catalog and their reports.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bernoulli::GenBernTable;
use crate::error::{Error, Result};
use crate::identities::{
    verify, Adjudication, AlphaMode, CaseId, IdentityCase, Param, Status, SumSpec,
    VerificationResult,
};
use crate::rational::Rational;
use crate::text::{format_alpha, format_bipoly, format_rat_poly};

/// Residual text longer than this is truncated in reports.
pub const RESIDUAL_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub max_n: u32,
    pub max_l: u32,
    pub max_r: u32,
    pub max_s: u32,
    pub max_m: u32,
    pub lambda_points: Vec<Rational>,
    pub alpha_points: Vec<AlphaMode>,
    pub x_points: Vec<Rational>,
    pub y_points: Vec<Rational>,
    pub t_points: Vec<Rational>,
    pub beta_points: Vec<Rational>,
    pub cases: Vec<CaseId>,
    pub parallelism: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        let q = |n, d| Rational::new(n, d);
        SweepConfig {
            max_n: 3,
            max_l: 3,
            max_r: 2,
            max_s: 2,
            max_m: 3,
            lambda_points: vec![q(0, 1), q(1, 1), q(2, 1), q(5, 1), q(1, 2), q(-3, 2)],
            alpha_points: vec![AlphaMode::Symbolic, AlphaMode::Value(q(1, 1)), AlphaMode::Value(q(-1, 2))],
            x_points: vec![q(0, 1), q(1, 2), q(3, 1)],
            y_points: vec![q(0, 1), q(-1, 3)],
            t_points: vec![q(1, 2), q(2, 1)],
            beta_points: vec![q(0, 1), q(1, 3)],
            cases: CaseId::ALL.to_vec(),
            parallelism: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

impl SweepConfig {
    /// A config with default grids restricted to the given cases.
    pub fn for_cases(cases: &[CaseId]) -> Self {
        SweepConfig {
            cases: cases.to_vec(),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.parallelism == 0 {
            return Err(Error::Config("parallelism must be at least 1".into()));
        }
        for case in &self.cases {
            for param in case.params() {
                let empty = match param {
                    Param::Lambda => self.lambda_points.is_empty(),
                    Param::Alpha => self.alpha_points.is_empty(),
                    Param::X => self.x_points.is_empty(),
                    Param::Y => self.y_points.is_empty(),
                    Param::T => self.t_points.is_empty(),
                    Param::Beta => self.beta_points.is_empty(),
                    _ => false,
                };
                if empty {
                    return Err(Error::Config(format!(
                        "case `{case}` needs a non-empty {param:?} point list"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every instance of one case on the configured grid.
    pub fn instances(&self, case: CaseId) -> Vec<IdentityCase> {
        let range = |max: u32| (0..=max).collect::<Vec<_>>();
        let mut specs = vec![SumSpec::default()];
        for param in case.params() {
            specs = match param {
                Param::N => expand(specs, &range(self.max_n), |s, v| s.n = Some(*v)),
                Param::L => expand(specs, &range(self.max_l), |s, v| s.l = Some(*v)),
                Param::R => expand(specs, &range(self.max_r), |s, v| s.r = Some(*v)),
                Param::S => expand(specs, &range(self.max_s), |s, v| s.s = Some(*v)),
                Param::M => expand(specs, &range(self.max_m), |s, v| s.m = Some(*v)),
                Param::Lambda => expand(specs, &self.lambda_points, |s, v| s.lambda = Some(v.clone())),
                Param::X => expand(specs, &self.x_points, |s, v| s.x = Some(v.clone())),
                Param::Y => expand(specs, &self.y_points, |s, v| s.y = Some(v.clone())),
                Param::T => expand(specs, &self.t_points, |s, v| s.t = Some(v.clone())),
                Param::Beta => expand(specs, &self.beta_points, |s, v| s.beta = Some(v.clone())),
                Param::Alpha => expand(specs, &self.alpha_points, |s, v| s.alpha = Some(v.clone())),
            };
        }
        specs.into_iter().map(|p| IdentityCase::new(case, p)).collect()
    }

    /// Largest Bernoulli index any instance may touch.
    fn table_bound(&self) -> usize {
        let nl = self.max_n.max(self.max_l) as usize;
        2 * nl + 2 * self.max_r as usize + 4
    }
}

fn expand<T>(specs: Vec<SumSpec>, values: &[T], set: impl Fn(&mut SumSpec, &T)) -> Vec<SumSpec> {
    let mut out = Vec::with_capacity(specs.len() * values.len());
    for spec in specs {
        for v in values {
            let mut s = spec.clone();
            set(&mut s, v);
            out.push(s);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexample: usize,
    pub not_applicable: usize,
    pub adjudicated: usize,
}

impl Summary {
    fn count(results: &[VerificationResult]) -> Self {
        results.iter().fold(Summary::default(), |mut s, r| {
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Counterexample => s.counterexample += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::Adjudicated => s.adjudicated += 1,
            }
            s
        })
    }

    pub fn total(&self) -> usize {
        self.verified + self.counterexample + self.not_applicable + self.adjudicated
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub config: SweepConfig,
    pub results: Vec<VerificationResult>,
    pub summary: Summary,
    pub elapsed: Duration,
}

impl Report {
    pub fn success(&self) -> bool {
        self.summary.counterexample == 0
    }

    /// The serializable form of the report.
    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            config: self.config.clone(),
            results: self.results.iter().map(ResultRecord::from).collect(),
            summary: self.summary,
            elapsed_ms: millis(self.elapsed),
        }
    }
}

/// Runs every configured case over its grid. Results come back sorted by
/// case id and then parameters, so the output does not depend on the
/// thread count.
pub fn run_suite(config: &SweepConfig) -> Result<Report> {
    run_suite_with(config, GenBernTable::global())
}

pub fn run_suite_with(config: &SweepConfig, table: &GenBernTable) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let mut cases: Vec<CaseId> = config.cases.clone();
    cases.sort();
    cases.dedup();
    let instances: Vec<IdentityCase> = cases.iter().flat_map(|c| config.instances(*c)).collect();
    if !instances.is_empty() {
        table.ensure(config.table_bound());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let mut results: Vec<VerificationResult> =
        pool.install(|| instances.par_iter().map(|c| verify(c, table)).collect::<Result<_>>())?;
    results.sort_by(|a, b| {
        (a.case.id.as_str(), &a.case.params).cmp(&(b.case.id.as_str(), &b.case.params))
    });
    let summary = Summary::count(&results);
    Ok(Report {
        config: config.clone(),
        results,
        summary,
        elapsed: start.elapsed(),
    })
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub case: CaseId,
    pub params: SumSpec,
    pub status: Status,
    pub residual: String,
    /// SHA-256 of the full residual text, present when it was truncated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_sha256: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjudication: Option<Adjudication>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

impl From<&VerificationResult> for ResultRecord {
    fn from(r: &VerificationResult) -> Self {
        let full = format_bipoly(&r.residual);
        let (residual, residual_sha256) = truncate_residual(full);
        ResultRecord {
            case: r.case.id,
            params: r.case.params.clone(),
            status: r.status,
            residual,
            residual_sha256,
            adjudication: r.adjudication.clone(),
            note: r.note.clone(),
            elapsed_ms: millis(r.elapsed),
        }
    }
}

fn truncate_residual(full: String) -> (String, Option<String>) {
    if full.len() <= RESIDUAL_LIMIT {
        return (full, None);
    }
    let digest = hex::encode(Sha256::digest(full.as_bytes()));
    let mut cut = RESIDUAL_LIMIT;
    while !full.is_char_boundary(cut) {
        cut -= 1;
    }
    (format!("{}...", &full[..cut]), Some(digest))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub config: SweepConfig,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
    pub elapsed_ms: f64,
}

impl ReportRecord {
    /// Equality ignoring every timing field.
    pub fn same_content(&self, other: &ReportRecord) -> bool {
        let strip = |r: &ReportRecord| {
            let mut r = r.clone();
            r.elapsed_ms = 0.0;
            r.results.iter_mut().for_each(|x| x.elapsed_ms = 0.0);
            r
        };
        strip(self) == strip(other)
    }
}

pub fn emit_json(report: &Report) -> Result<String> {
    Ok(serde_json::to_string_pretty(&report.record())?)
}

pub fn parse_json(text: &str) -> Result<ReportRecord> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `B_n`.
    Classical,
    /// `B_n(x)`.
    ClassicalPoly,
    /// `B_n^(a)`.
    Generalized,
    /// `B_n^(a)(x)`.
    GeneralizedPoly,
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(TableKind::Classical),
            "classical-poly" => Ok(TableKind::ClassicalPoly),
            "generalized" => Ok(TableKind::Generalized),
            "generalized-poly" => Ok(TableKind::GeneralizedPoly),
            other => Err(Error::Usage(format!("unknown table kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Usage(format!("unknown table format `{other}`"))),
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    value: String,
}

/// Rows `n, value` for `n = 0..=max`, as CSV with a `n,value` header or as a
/// JSON array of objects.
pub fn emit_tables(table: &GenBernTable, kind: TableKind, max: usize, format: TableFormat) -> Result<String> {
    table.ensure(max);
    let rows: Vec<TableRow> = (0..=max)
        .map(|n| {
            let value = match kind {
                TableKind::Classical => table.classical(n).to_string(),
                TableKind::ClassicalPoly => format_rat_poly(&table.classical_poly(n)),
                TableKind::Generalized => format_alpha(&table.number(n)),
                TableKind::GeneralizedPoly => format_bipoly(&table.poly(n)),
            };
            TableRow { n, value }
        })
        .collect();
    match format {
        TableFormat::Csv => {
            let mut out = String::from("n,value\n");
            for row in &rows {
                out.push_str(&format!("{},{}\n", row.n, row.value));
            }
            Ok(out)
        }
        TableFormat::Json => Ok(serde_json::to_string_pretty(&rows)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(cases: &[CaseId]) -> SweepConfig {
        SweepConfig {
            max_n: 2,
            max_l: 2,
            max_r: 1,
            max_s: 1,
            max_m: 2,
            parallelism: 2,
            ..SweepConfig::for_cases(cases)
        }
    }

    #[test]
    fn t3_grid_has_eighteen_instances() {
        let report = run_suite(&small(&[CaseId::T3])).unwrap();
        assert_eq!(report.results.len(), 18);
        assert_eq!(report.summary.verified, 18);
        assert!(report.success());
    }

    #[test]
    fn empty_case_list() {
        let report = run_suite(&small(&[])).unwrap();
        assert!(report.results.is_empty());
        assert_eq!(report.summary.total(), 0);
        assert!(report.success());
    }

    #[test]
    fn k3_at_zero_is_out_of_domain() {
        let mut cfg = small(&[CaseId::K3]);
        cfg.max_n = 0;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.summary.not_applicable, 1);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = small(&[CaseId::TheoremLe1]);
        cfg.lambda_points.clear();
        assert!(matches!(run_suite(&cfg), Err(Error::Config(_))));
        let mut cfg = small(&[]);
        cfg.parallelism = 0;
        assert!(run_suite(&cfg).is_err());
        assert!(serde_json::from_str::<SweepConfig>(r#"{"max_q": 3}"#).is_err());
    }

    #[test]
    fn deterministic_across_parallelism() {
        let mut a = small(&[CaseId::E1, CaseId::T4, CaseId::P1]);
        a.parallelism = 1;
        let mut b = a.clone();
        b.parallelism = 4;
        let ra = run_suite(&a).unwrap().record();
        let mut rb = run_suite(&b).unwrap().record();
        rb.config.parallelism = 1;
        assert!(ra.same_content(&rb));
    }

    #[test]
    fn json_schema_and_round_trip() {
        let mut cfg = small(&[CaseId::T3]);
        cfg.max_n = 1;
        cfg.max_l = 0;
        cfg.max_r = 0;
        let report = run_suite(&cfg).unwrap();
        let json = emit_json(&report).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let pos = |key: &str| json.find(&format!("\"{key}\"")).unwrap();
        assert!(pos("config") < pos("results") && pos("results") < pos("summary"));
        assert!(json.rfind("\"elapsed_ms\"").unwrap() > pos("summary"));
        let entry = &value["results"][1];
        assert_eq!(entry["case"], "t3");
        assert_eq!(entry["params"], serde_json::json!({"n": 1, "l": 0, "r": 0}));
        assert_eq!(entry["status"], "verified");
        assert_eq!(entry["residual"], "0");
        let mut entry_keys: Vec<&String> = entry.as_object().unwrap().keys().collect();
        entry_keys.sort();
        assert_eq!(entry_keys, ["case", "elapsed_ms", "params", "residual", "status"]);
        let line = serde_json::to_string(&report.record().results[1]).unwrap();
        assert!(line.starts_with(r#"{"case":"t3","params":{"n":1,"l":0,"r":0},"status":"verified","residual":"0","elapsed_ms":"#));
        assert_eq!(value["summary"]["verified"], 2);
        let back = parse_json(&json).unwrap();
        assert!(back.same_content(&report.record()));
    }

    #[test]
    fn long_residuals_are_hashed() {
        let long = "x".repeat(RESIDUAL_LIMIT + 10);
        let (text, hash) = truncate_residual(long.clone());
        assert!(text.len() < long.len());
        assert_eq!(hash.unwrap(), hex::encode(Sha256::digest(long.as_bytes())));
        assert_eq!(truncate_residual("0".into()), ("0".to_string(), None));
    }

    #[test]
    fn tables() {
        let t = GenBernTable::with_max(4);
        let csv = emit_tables(&t, TableKind::Classical, 2, TableFormat::Csv).unwrap();
        assert_eq!(csv, "n,value\n0,1\n1,-1/2\n2,1/6\n");
        let gen = emit_tables(&t, TableKind::Generalized, 1, TableFormat::Csv).unwrap();
        assert_eq!(gen, "n,value\n0,1\n1,(-1/2)*a\n");
        let zero = emit_tables(&t, TableKind::Classical, 0, TableFormat::Csv).unwrap();
        assert_eq!(zero, "n,value\n0,1\n");
        let json = emit_tables(&t, TableKind::Classical, 1, TableFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v, serde_json::json!([{"n": 0, "value": "1"}, {"n": 1, "value": "-1/2"}]));
        let poly = emit_tables(&t, TableKind::ClassicalPoly, 1, TableFormat::Csv).unwrap();
        assert_eq!(poly, "n,value\n0,1\n1,-1/2 + x\n");
    }
}
