use std::f64::consts::PI;
use std::fmt::Write as _;

use clap::Args;
use genergy::census::{conjecture_report, ConjectureReport};
use genergy::closedform::{direct_cos_sum, direct_sin_sum, trig_sum_cos, trig_sum_sin, verify_family};
use genergy::par;
use genergy::{Family, Subclass, ToleranceConfig, Workers};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::census::{compute_rows, OrderRange};
use crate::{CliError, Common, Format};

pub const LEMMA_TOL: f64 = 1e-9;
pub const LEMMA_MAX_N: usize = 500;

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("suite").required(true).multiple(true).args(["theorems", "lemma", "conjecture"])))]
pub struct VerifyArgs {
    /// Paths, cycles and complete graphs: closed forms and predicted subclasses.
    #[arg(long)]
    theorems: bool,
    /// Closed-form trig sums against direct summation.
    #[arg(long)]
    lemma: bool,
    /// Census ratio trend for orders 1..=max-n.
    #[arg(long)]
    conjecture: bool,
    /// Largest order (default 200 for --theorems, 8 for --conjecture).
    #[arg(long)]
    max_n: Option<usize>,
    /// Random triples for --lemma.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 2017)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: Family,
    pub from: usize,
    pub to: usize,
    pub checked: usize,
    /// Orders with each class, in order of first appearance.
    pub classes: Vec<(Subclass, Vec<usize>)>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaSummary {
    pub samples: usize,
    pub seed: u64,
    pub max_error: f64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<FamilySummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<LemmaSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
    pub tolerance: ToleranceConfig,
}

fn theorems(max_n: usize, tol: &ToleranceConfig, workers: Workers) -> Result<Vec<FamilySummary>, CliError> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let from = family.min_order();
        let orders: Vec<usize> = (from..=max_n.max(from)).collect();
        let checks = par::map(&orders, workers, |&n| verify_family(family, n, tol));
        let mut classes: Vec<(Subclass, Vec<usize>)> = Vec::new();
        let mut failures = Vec::new();
        for (n, check) in orders.iter().zip(checks) {
            let check = check?;
            let class = check.classification.subclass;
            match classes.iter_mut().find(|(c, _)| *c == class) {
                Some((_, ns)) => ns.push(*n),
                None => classes.push((class, vec![*n])),
            }
            failures.extend(check.failures.into_iter().map(|f| format!("({family}, {n}): {f}")));
        }
        out.push(FamilySummary {
            family,
            from,
            to: max_n.max(from),
            checked: orders.len(),
            classes,
            failures,
        });
    }
    Ok(out)
}

fn lemma(samples: usize, seed: u64) -> Result<LemmaSummary, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_error = 0.0f64;
    let mut failures = Vec::new();
    for _ in 0..samples {
        let theta = rng.gen_range(0.0..2.0 * PI);
        let alpha = rng.gen_range(0.01..=2.0 * PI - 0.01);
        let n = rng.gen_range(0..=LEMMA_MAX_N);
        let cos_err = (trig_sum_cos(theta, alpha, n)? - direct_cos_sum(theta, alpha, n)).abs();
        let sin_err = (trig_sum_sin(theta, alpha, n)? - direct_sin_sum(theta, alpha, n)).abs();
        let err = cos_err.max(sin_err);
        max_error = max_error.max(err);
        if err >= LEMMA_TOL {
            failures.push(format!("(theta={theta}, alpha={alpha}, n={n}): error {err:.3e}"));
        }
    }
    Ok(LemmaSummary {
        samples,
        seed,
        max_error,
        failures,
    })
}

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    let tol = args.common.tolerance()?;
    let workers = args.common.workers()?;
    let mut report = VerifyReport {
        passed: true,
        theorems: None,
        lemma: None,
        conjecture: None,
        tolerance: tol,
    };
    let mut text = String::new();

    if args.theorems {
        let max_n = args.max_n.unwrap_or(200);
        let summaries = theorems(max_n, &tol, workers)?;
        for s in &summaries {
            let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
            let classes: Vec<String> = s.classes.iter().map(|(c, ns)| format!("{c} x{}", ns.len())).collect();
            let _ = writeln!(
                text,
                "{status} theorems {} n={}..{}: {} checked [{}]",
                s.family,
                s.from,
                s.to,
                s.checked,
                classes.join(", ")
            );
            for f in &s.failures {
                let _ = writeln!(text, "  {f}");
            }
            report.passed &= s.failures.is_empty();
        }
        report.theorems = Some(summaries);
    }

    if args.lemma {
        let s = lemma(args.samples, args.seed)?;
        let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} lemma: {} samples (seed {}), max error {:.3e} (limit {LEMMA_TOL:e})",
            s.samples, s.seed, s.max_error
        );
        for f in &s.failures {
            let _ = writeln!(text, "  {f}");
        }
        report.passed &= s.failures.is_empty();
        report.lemma = Some(s);
    }

    if args.conjecture {
        let max_n = args.max_n.unwrap_or(8);
        let rows = compute_rows(
            OrderRange { start: 1, end: max_n },
            "builtin",
            &tol,
            workers,
            None,
            args.common.verbose,
        )?;
        let partition_ok = rows
            .iter()
            .all(|r| Subclass::ALL.iter().map(|&c| r.count(c)).sum::<usize>() == r.total);
        let trend = conjecture_report(&rows)?;
        let status = if partition_ok { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{status} conjecture: ratio trend for n=1..{max_n}");
        let _ = write!(text, "{trend}");
        report.passed &= partition_ok;
        report.conjecture = Some(trend);
    }

    let out = match args.common.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Table | Format::Csv => text,
    };
    args.common.emit(&out)?;
    if report.passed {
        Ok(())
    } else {
        Err(CliError::Integrity("verification failed".into()))
    }
}
