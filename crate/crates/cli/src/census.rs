use std::path::PathBuf;

use clap::Args;
use genergy::census::{self, census_csv, census_json, ratios_csv, render_table, CensusInput, CensusRow};
use genergy::enumerate::{connected_graphs_by_order, read_graph6_file, ErrorPolicy, MAX_ENUMERATION_ORDER};
use genergy::{ToleranceConfig, Workers};

use crate::{emit, CliError, Common, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRange {
    pub start: usize,
    pub end: usize,
}

/// Parses `A..B` or `A..=B`, both inclusive.
pub fn parse_range(text: &str) -> Result<OrderRange, String> {
    let (a, b) = text
        .split_once("..=")
        .or_else(|| text.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got `{text}`"))?;
    let start: usize = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let end: usize = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if start == 0 || start > end {
        return Err(format!("empty or invalid range {start}..{end}"));
    }
    Ok(OrderRange { start, end })
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("orders").required(true).args(["n", "n_range"])))]
pub struct CensusArgs {
    /// A single order.
    #[arg(long)]
    n: Option<usize>,
    /// An inclusive range of orders, `A..B`.
    #[arg(long, value_parser = parse_range)]
    n_range: Option<OrderRange>,
    /// `builtin` for the enumerator, otherwise a graph6 file.
    #[arg(long, default_value = "builtin")]
    source: String,
    /// Also write the ratio table as CSV here.
    #[arg(long)]
    ratios_out: Option<PathBuf>,
    /// Write per-class canonical graph6 listings into this directory.
    #[arg(long)]
    list_classes: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

pub fn compute_rows(
    orders: OrderRange,
    source: &str,
    tol: &ToleranceConfig,
    workers: Workers,
    list_dir: Option<&std::path::Path>,
    verbose: u8,
) -> Result<Vec<CensusRow>, CliError> {
    let inputs: Vec<CensusInput> = if source == "builtin" {
        if orders.end > MAX_ENUMERATION_ORDER {
            return Err(CliError::Usage(format!(
                "builtin enumeration supports orders up to {MAX_ENUMERATION_ORDER}"
            )));
        }
        let mut levels = connected_graphs_by_order(orders.end, workers)?;
        levels.truncate(orders.end);
        levels
            .into_iter()
            .enumerate()
            .skip(orders.start - 1)
            .map(|(i, graphs)| CensusInput::from_levels(i + 1, graphs))
            .collect()
    } else {
        let batch = read_graph6_file(source, ErrorPolicy::FailFast)?;
        (orders.start..=orders.end)
            .map(|n| CensusInput::from_file_graphs(n, &batch.graphs, workers))
            .collect()
    };

    let mut rows = Vec::with_capacity(inputs.len());
    let mut offenders = Vec::new();
    for input in &inputs {
        let started = std::time::Instant::now();
        match census::run_census(input, tol, workers, list_dir.is_some()) {
            Ok(outcome) => {
                if let Some(dir) = list_dir {
                    census::write_listings(dir, input.n, &outcome.listings)?;
                }
                if outcome.row.skipped_disconnected > 0 {
                    eprintln!(
                        "genergy: n={}: skipped {} disconnected graph(s)",
                        input.n, outcome.row.skipped_disconnected
                    );
                }
                if verbose > 0 {
                    eprintln!(
                        "genergy: n={} classified {} graphs in {:.2?}",
                        input.n,
                        input.graphs.len(),
                        started.elapsed()
                    );
                }
                rows.push(outcome.row);
            }
            Err(genergy::Error::Integrity { offenders: o, .. }) => offenders.extend(o),
            Err(e) => return Err(e.into()),
        }
    }
    if !offenders.is_empty() {
        return Err(CliError::Integrity(format!(
            "{} graph(s) failed integrity checks:\n  {}",
            offenders.len(),
            offenders.join("\n  ")
        )));
    }
    Ok(rows)
}

pub fn run(args: CensusArgs) -> Result<(), CliError> {
    let tol = args.common.tolerance()?;
    let workers = args.common.workers()?;
    let orders = match (args.n, args.n_range) {
        (Some(0), _) => return Err(CliError::Usage("--n must be at least 1".into())),
        (Some(n), _) => OrderRange { start: n, end: n },
        (None, Some(r)) => r,
        (None, None) => unreachable!("clap requires one of --n, --n-range"),
    };
    let rows = compute_rows(
        orders,
        &args.source,
        &tol,
        workers,
        args.list_classes.as_deref(),
        args.common.verbose,
    )?;

    let text = match args.common.format {
        Format::Table => format!(
            "{}\ntolerance abs={:e} rel={:e}\n",
            render_table(&rows),
            tol.eps_abs,
            tol.eps_rel
        ),
        Format::Csv => {
            eprintln!("genergy: tolerance abs={:e} rel={:e}", tol.eps_abs, tol.eps_rel);
            census_csv(&rows)
        }
        Format::Json => census_json(&rows, &tol)?,
    };
    args.common.emit(&text)?;
    if let Some(path) = &args.ratios_out {
        emit(Some(path), &ratios_csv(&rows))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..8").unwrap(), OrderRange { start: 1, end: 8 });
        assert_eq!(parse_range("3..=5").unwrap(), OrderRange { start: 3, end: 5 });
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("7").is_err());
    }
}
