//! Batch driver for the certificate suites: constants, zeta-bound table,
//! exponential-sum oracle sweeps, the zero-free-region chain and region
//! comparisons. Every suite yields a [`Report`] whose JSON is deterministic.

pub mod config;
pub mod regions;

use std::path::Path;

use serde::Serialize;

use explicit_zeta::expsum::constants::{kth_derivative_constants, uniform_certificate, UNIFORM_ETA3};
use explicit_zeta::expsum::sweep::{dominance_sweep, DOMINANCE_TOL};
use explicit_zeta::report::{confirm, run_confirmed, REPORT_DIGITS};
use explicit_zeta::zeta_bounds::certificate::{gamma_certificate, parse_table2, table2, uniform_branch_certificate, Table2Row};
use explicit_zeta::zfr::{self, consts, lemmas, smoothing_certificate, smoothing_constants, TrigPolyData};
use explicit_zeta::{CheckItem, DirectedReal as DR, Error, Verdict};

pub use config::RunConfig;
pub use regions::{cmd_regions, LogGrid, RegionTable};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for usage and input problems, 1 for anything the certificates raised.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(Error::UsageError(_) | Error::Parse { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: RunConfig,
    pub items: Vec<CheckItem>,
    /// Checks of individual published steps that do not decide the exit status.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<CheckItem>,
}

impl Report {
    fn new(suite: &str, cfg: &RunConfig, items: Vec<CheckItem>) -> Self {
        Report {
            suite: suite.to_string(),
            config: cfg.clone(),
            items,
            audit: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        let section = |out: &mut String, items: &[CheckItem]| {
            for i in items {
                out.push_str(&format!(
                    "{}  {}  {}  [{}, {}]\n",
                    i.verdict, i.name, i.paper_target, i.computed_lo, i.computed_hi
                ));
            }
        };
        section(&mut out, &self.items);
        if !self.audit.is_empty() {
            out.push_str("audit of published steps:\n");
            section(&mut out, &self.audit);
        }
        let failed = self.items.iter().filter(|i| !i.passed()).count();
        out.push_str(&format!("{} items, {} failed\n", self.items.len(), failed));
        out
    }
}

/// A failing item standing in for a computation that raised an error.
pub fn error_item(name: &str, e: &Error) -> CheckItem {
    CheckItem {
        name: name.to_string(),
        paper_target: format!("error: {e}"),
        computed_lo: String::new(),
        computed_hi: String::new(),
        verdict: Verdict::Fail,
    }
}

fn or_error(name: &str, r: explicit_zeta::Result<Vec<CheckItem>>) -> Vec<CheckItem> {
    r.unwrap_or_else(|e| vec![error_item(name, &e)])
}

fn constants_suite(p: u32) -> Vec<CheckItem> {
    let mut items = Vec::new();
    let eta = DR::lit(UNIFORM_ETA3, p);
    let h = DR::int(3, p);
    match kth_derivative_constants(20, &eta, &h) {
        Ok(c) => {
            for k in 3..=20 {
                let (Some(a), Some(b)) = (c.a(k), c.b(k)) else { continue };
                if k >= 10 {
                    items.push(CheckItem::le(&format!("A_{k}(4.7399, 3)"), a, "2.762"));
                    items.push(CheckItem::le(&format!("B_{k}(4.7399)"), b, "1.02"));
                } else {
                    items.push(CheckItem::holds(&format!("A_{k}(4.7399, 3)"), "value", a, true));
                    items.push(CheckItem::holds(&format!("B_{k}(4.7399)"), "value", b, true));
                }
            }
        }
        Err(e) => items.push(error_item("A_k, B_k table", &e)),
    }
    items.extend(or_error("uniform constants", uniform_certificate(60, p).map(|u| u.items)));
    items.extend(or_error("smoothing constants", smoothing_certificate(p)));
    match smoothing_constants(&TrigPolyData::default(), p) {
        Ok(s) => {
            for (name, r, target) in [("c(R), R = 441.729", consts::R, "1.02268"), ("c(R'), R' = 350.588", consts::R_PRIME, "1.0288")] {
                match zfr::c_of_r(&DR::lit(r, p), &s) {
                    Ok(v) => items.push(CheckItem::le(name, &v, target)),
                    Err(e) => items.push(error_item(name, &e)),
                }
            }
        }
        Err(e) => items.push(error_item("c(R)", &e)),
    }
    items
}

/// The derivative-test constants, the uniform certificate, the smoothing
/// constants and `c(R)`.
pub fn cmd_constants(cfg: &RunConfig) -> Report {
    Report::new("constants", cfg, run_confirmed(constants_suite, cfg.precision_bits, cfg.confirm_bits))
}

pub fn load_table2(cfg: &RunConfig) -> Result<Vec<Table2Row>, CliError> {
    match &cfg.table2_path {
        Some(path) => {
            let rows = parse_table2(&read_file(path)?)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            if rows.is_empty() {
                return Err(CliError::Usage(format!("{}: no rows", path.display())));
            }
            Ok(rows)
        }
        None => Ok(table2()),
    }
}

/// One gamma certificate per row plus the `k >= 10` branch. The published
/// intermediate steps of that branch go to the audit list.
pub fn cmd_table2(cfg: &RunConfig) -> Result<Report, CliError> {
    let rows = load_table2(cfg)?;
    let suite = |p: u32| {
        let mut items = Vec::new();
        for row in &rows {
            items.extend(or_error(&format!("k={}", row.k), gamma_certificate(row, p).map(|c| c.items)));
        }
        items.extend(or_error("k>=10 branch", uniform_branch_certificate(p).map(|u| u.items)));
        items
    };
    let mut report = Report::new("table2", cfg, run_confirmed(suite, cfg.precision_bits, cfg.confirm_bits));
    report.audit = or_error("k>=10 branch", uniform_branch_certificate(cfg.precision_bits).map(|u| u.chain));
    Ok(report)
}

/// Largest sum length drawn by the oracle sweep.
pub const SWEEP_N_MAX: u64 = 100_000;

/// Seeded random zeta-log instances, each bound compared with the brute-force sum.
pub fn cmd_expsum_check(cfg: &RunConfig, samples: usize) -> Report {
    let p = cfg.precision_bits;
    let items = match dominance_sweep(samples, cfg.seed, SWEEP_N_MAX, cfg.oracle_cap, p) {
        Ok(sweep) => {
            let mut items: Vec<CheckItem> = sweep
                .samples
                .iter()
                .map(|s| {
                    let (margin, name) = s
                        .worst()
                        .map(|w| (w.margin, w.name.as_str()))
                        .unwrap_or((f64::INFINITY, "none"));
                    CheckItem::holds(
                        &format!("sample {}: k={}, t={}, a={}, N={}", s.index, s.k, s.t, s.a, s.n),
                        &format!("bound - |S| >= -{DOMINANCE_TOL} (tightest: {name})"),
                        &DR::from_f64(margin, p),
                        s.violations() == 0,
                    )
                })
                .collect();
            items.push(CheckItem::holds(
                "violations",
                "0",
                &DR::int(sweep.violations as i64, p),
                sweep.violations == 0,
            ));
            if let (Some(m), Some(b)) = (sweep.worst_margin, &sweep.worst_bound) {
                items.push(CheckItem::holds(
                    &format!("worst margin ({b})"),
                    &format!(">= -{DOMINANCE_TOL}"),
                    &DR::from_f64(m, p),
                    m >= -DOMINANCE_TOL,
                ));
            }
            items
        }
        Err(e) => vec![error_item("dominance sweep", &e)],
    };
    Report::new("expsum-check", cfg, items)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Branch {
    LargeT,
    SmallT,
    All,
}

impl Branch {
    pub fn id(self) -> &'static str {
        match self {
            Branch::LargeT => "large-t",
            Branch::SmallT => "small-t",
            Branch::All => "all",
        }
    }
}

/// Runs a chain at both precisions; the audit comes from the working precision.
fn chain_items(
    name: &str,
    f: fn(u32) -> explicit_zeta::Result<zfr::ZfrChain>,
    cfg: &RunConfig,
) -> (Vec<CheckItem>, Vec<CheckItem>) {
    let main = match f(cfg.precision_bits) {
        Ok(c) => c,
        Err(e) => return (vec![error_item(name, &e)], Vec::new()),
    };
    let items = if cfg.confirm_bits == cfg.precision_bits {
        main.items
    } else {
        match f(cfg.confirm_bits) {
            Ok(c) => confirm(main.items, &c.items),
            Err(e) => confirm(main.items, &[error_item(name, &e)]),
        }
    };
    (items, main.audit)
}

fn lemma_suite(p: u32) -> Vec<CheckItem> {
    let mut items = or_error("zero count", lemmas::zero_count_provenance(p));
    items.extend(lemmas::small_eta_rederivation(p));
    items.extend(lemmas::large_eta_rederivation(p));
    items.extend(lemmas::convexity_rederivation(p));
    items.extend(lemmas::integral_lemma_error_items(p));
    let m1 = DR::lit(consts::M1, p);
    let inv = DR::lit(consts::REGION_CONSTANT, p).recip();
    items.push(CheckItem::holds("1/21.233 <= M1", &format!("<= {}", consts::M1), &inv, inv.certainly_le(&m1)));
    items
}

/// The main inequality on either or both ranges of `t`, with the lemma
/// checks when both are requested.
pub fn cmd_zfr(cfg: &RunConfig, branch: Branch) -> Report {
    let mut items = Vec::new();
    let mut audit = Vec::new();
    if matches!(branch, Branch::LargeT | Branch::All) {
        let (i, a) = chain_items("large-t chain", zfr::large_t_chain, cfg);
        items.extend(i);
        audit.extend(a);
    }
    if matches!(branch, Branch::SmallT | Branch::All) {
        let (i, a) = chain_items("small-t chain", zfr::small_t_chain, cfg);
        items.extend(i);
        audit.extend(a);
    }
    if branch == Branch::All {
        items.extend(run_confirmed(lemma_suite, cfg.precision_bits, cfg.confirm_bits));
    }
    let mut report = Report::new(&format!("zfr {}", branch.id()), cfg, items);
    report.audit = audit;
    report
}

/// Decimal rendering used for table cells.
pub fn endpoints(v: &DR) -> (String, String) {
    (v.lo_string(REPORT_DIGITS), v.hi_string(REPORT_DIGITS))
}
