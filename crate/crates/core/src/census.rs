//! Exhaustive classification of all connected graphs of an order, with
//! per-class counts, ratios and the trend of those ratios across orders.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::classify::{classify, Classification, Subclass, ToleranceConfig};
use crate::energy::{profile, EnergyProfile};
use crate::enumerate::{connected_graphs, CanonicalGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Workers};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    Builtin,
    File,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub counts: BTreeMap<Subclass, usize>,
    pub source: SourceKind,
    pub tolerance: ToleranceConfig,
    pub borderline_count: usize,
    #[serde(default)]
    pub skipped_disconnected: usize,
}

impl CensusRow {
    pub fn count(&self, class: Subclass) -> usize {
        self.counts.get(&class).copied().unwrap_or(0)
    }
}

/// Graphs of one order, each with its canonical form.
#[derive(Debug, Clone)]
pub struct CensusInput {
    pub n: usize,
    pub graphs: Vec<CanonicalGraph>,
    pub source: SourceKind,
    pub skipped_disconnected: usize,
}

impl CensusInput {
    pub fn builtin(n: usize, workers: Workers) -> Result<Self> {
        Ok(CensusInput {
            n,
            graphs: connected_graphs(n, workers)?,
            source: SourceKind::Builtin,
            skipped_disconnected: 0,
        })
    }

    pub fn from_levels(n: usize, graphs: Vec<CanonicalGraph>) -> Self {
        CensusInput {
            n,
            graphs,
            source: SourceKind::Builtin,
            skipped_disconnected: 0,
        }
    }

    /// Graphs read from a file. Those of other orders are ignored and
    /// disconnected ones are tallied and dropped.
    pub fn from_file_graphs(n: usize, graphs: &[Graph], workers: Workers) -> Self {
        let of_order: Vec<&Graph> = graphs.iter().filter(|g| g.order() == n).collect();
        let connected: Vec<&Graph> = of_order.iter().copied().filter(|g| g.is_connected()).collect();
        let skipped = of_order.len() - connected.len();
        CensusInput {
            n,
            graphs: par::map(&connected, workers, |g| CanonicalGraph {
                form: canonical_form(g),
                graph: (*g).clone(),
            }),
            source: SourceKind::File,
            skipped_disconnected: skipped,
        }
    }
}

/// A classified graph as it appears in listings.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedGraph {
    pub form: CanonicalForm,
    pub profile: EnergyProfile,
    pub classification: Classification,
}

#[derive(Debug, Clone)]
pub struct CensusOutcome {
    pub row: CensusRow,
    /// Canonical forms per class, sorted. Empty unless requested.
    pub listings: BTreeMap<Subclass, Vec<CanonicalForm>>,
}

/// Profiles every graph in `input`; eigensolver failures are reported with
/// the offending canonical form.
pub fn profile_all(input: &CensusInput, workers: Workers) -> Result<Vec<(CanonicalForm, EnergyProfile)>> {
    let results = par::map(&input.graphs, workers, |g| {
        profile(&g.graph).map_err(|e| format!("{}: {e}", g.form))
    });
    collect_offenders(
        input
            .graphs
            .iter()
            .zip(results)
            .map(|(g, r)| r.map(|p| (g.form.clone(), p))),
    )
}

fn collect_offenders<T>(results: impl Iterator<Item = std::result::Result<T, String>>) -> Result<Vec<T>> {
    let mut ok = Vec::new();
    let mut offenders = Vec::new();
    for r in results {
        match r {
            Ok(v) => ok.push(v),
            Err(e) => offenders.push(e),
        }
    }
    if offenders.is_empty() {
        Ok(ok)
    } else {
        Err(Error::Integrity {
            count: offenders.len(),
            offenders,
        })
    }
}

pub fn classify_all(
    profiles: &[(CanonicalForm, EnergyProfile)],
    tol: &ToleranceConfig,
    workers: Workers,
) -> Result<Vec<ClassifiedGraph>> {
    let results = par::map(profiles, workers, |(form, p)| {
        classify(p, tol)
            .map(|classification| ClassifiedGraph {
                form: form.clone(),
                profile: *p,
                classification,
            })
            .map_err(|e| format!("{form}: {e}"))
    });
    collect_offenders(results.into_iter())
}

pub fn run_census(
    input: &CensusInput,
    tol: &ToleranceConfig,
    workers: Workers,
    listing: bool,
) -> Result<CensusOutcome> {
    if let Some(g) = input.graphs.iter().find(|g| g.graph.order() != input.n) {
        return Err(Error::InvalidArgument(format!(
            "graph {} has order {}, census is for order {}",
            g.form,
            g.graph.order(),
            input.n
        )));
    }
    let profiles = profile_all(input, workers)?;
    let classified = classify_all(&profiles, tol, workers)?;

    let mut counts: BTreeMap<Subclass, usize> = Subclass::ALL.iter().map(|&c| (c, 0)).collect();
    let mut listings: BTreeMap<Subclass, Vec<CanonicalForm>> = BTreeMap::new();
    let mut borderline_count = 0;
    for g in classified {
        *counts.entry(g.classification.subclass).or_default() += 1;
        borderline_count += g.classification.borderline as usize;
        if listing {
            listings.entry(g.classification.subclass).or_default().push(g.form);
        }
    }
    for forms in listings.values_mut() {
        forms.sort();
    }
    Ok(CensusOutcome {
        row: CensusRow {
            n: input.n,
            total: input.graphs.len(),
            counts,
            source: input.source,
            tolerance: *tol,
            borderline_count,
            skipped_disconnected: input.skipped_disconnected,
        },
        listings,
    })
}

/// Writes one `n{N}_g{k}.g6` file per class into `dir`.
pub fn write_listings(dir: &Path, n: usize, listings: &BTreeMap<Subclass, Vec<CanonicalForm>>) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for class in Subclass::ALL {
        let path = dir.join(format!("n{n}_g{}.g6", class.index() + 1));
        let mut text = String::new();
        for form in listings.get(&class).into_iter().flatten() {
            text.push_str(form.as_str());
            text.push('\n');
        }
        std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub n: usize,
    pub ratios: BTreeMap<Subclass, f64>,
}

impl RatioRow {
    pub fn ratio(&self, class: Subclass) -> f64 {
        self.ratios.get(&class).copied().unwrap_or(0.0)
    }
}

pub fn ratios(row: &CensusRow) -> Result<RatioRow> {
    if row.total == 0 {
        return Err(Error::InvalidArgument(format!("census for n={} is empty", row.n)));
    }
    Ok(RatioRow {
        n: row.n,
        ratios: Subclass::ALL
            .iter()
            .map(|&c| (c, row.count(c) as f64 / row.total as f64))
            .collect(),
    })
}

/// `count / total` to `decimals` places, rounded half to even on the exact
/// rational value.
pub fn format_ratio(count: usize, total: usize, decimals: u32) -> String {
    let scale = 10u128.pow(decimals);
    let num = count as u128 * scale;
    let den = total as u128;
    let (mut q, r) = (num / den, num % den);
    if 2 * r > den || (2 * r == den && q % 2 == 1) {
        q += 1;
    }
    let int = q / scale;
    let frac = q % scale;
    format!("{int}.{frac:0width$}", width = decimals as usize)
}

/// Limits the ratio series is compared against: one half for `G1` and `G2`,
/// zero for `G3` and `G4`.
pub const CONJECTURED_LIMITS: [f64; 4] = [0.5, 0.5, 0.0, 0.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendRow {
    pub n: usize,
    pub ratios: [f64; 4],
    /// Change from the previous row; absent on the first row.
    pub differences: Option<[f64; 4]>,
    /// `|ratio - limit|` per class.
    pub distance: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub rows: Vec<TrendRow>,
}

pub fn conjecture_report(rows: &[CensusRow]) -> Result<ConjectureReport> {
    if rows.len() < 2 {
        return Err(Error::InvalidArgument("a trend needs at least two census rows".into()));
    }
    let mut out: Vec<TrendRow> = Vec::with_capacity(rows.len());
    for row in rows {
        let r = ratios(row)?;
        let ratios: [f64; 4] = Subclass::ALL.map(|c| r.ratio(c));
        let differences = out
            .last()
            .map(|prev| std::array::from_fn(|k| ratios[k] - prev.ratios[k]));
        let distance = std::array::from_fn(|k| (ratios[k] - CONJECTURED_LIMITS[k]).abs());
        out.push(TrendRow {
            n: row.n,
            ratios,
            differences,
            distance,
        });
    }
    Ok(ConjectureReport { rows: out })
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:>8} {:>8} {:>8} {:>8}  {:>9} {:>9} {:>9} {:>9}  {:>8} {:>8} {:>8} {:>8}",
            "n", "r1", "r2", "r3", "r4", "d1", "d2", "d3", "d4", "|r1-.5|", "|r2-.5|", "r3", "r4"
        )?;
        for row in &self.rows {
            write!(f, "{:>3} ", row.n)?;
            for r in row.ratios {
                write!(f, " {r:>8.5}")?;
            }
            write!(f, " ")?;
            match row.differences {
                Some(d) => {
                    for x in d {
                        write!(f, " {x:>+9.5}")?;
                    }
                }
                None => write!(f, " {:>9} {:>9} {:>9} {:>9}", "-", "-", "-", "-")?,
            }
            write!(f, " ")?;
            for x in row.distance {
                write!(f, " {x:>8.5}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub const CENSUS_CSV_HEADER: &str = "n,total,g1,g2,g3,g4,borderline";
pub const RATIO_CSV_HEADER: &str = "n,r1,r2,r3,r4";

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CENSUS_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{},{}", row.n, row.total);
        for c in Subclass::ALL {
            let _ = write!(out, ",{}", row.count(c));
        }
        let _ = writeln!(out, ",{}", row.borderline_count);
    }
    out
}

pub fn ratios_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(RATIO_CSV_HEADER);
    out.push('\n');
    for row in rows.iter().filter(|r| r.total > 0) {
        let _ = write!(out, "{}", row.n);
        for c in Subclass::ALL {
            let _ = write!(out, ",{}", format_ratio(row.count(c), row.total, 6));
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusDocument {
    pub schema_version: u32,
    pub tolerance: ToleranceConfig,
    pub rows: Vec<CensusRow>,
    #[serde(default)]
    pub ratios: Vec<RatioRow>,
}

impl CensusDocument {
    pub fn new(rows: Vec<CensusRow>, tolerance: ToleranceConfig) -> Result<Self> {
        let ratios = rows.iter().filter(|r| r.total > 0).map(ratios).collect::<Result<_>>()?;
        Ok(CensusDocument {
            schema_version: SCHEMA_VERSION,
            tolerance,
            rows,
            ratios,
        })
    }
}

pub fn census_json(rows: &[CensusRow], tolerance: &ToleranceConfig) -> Result<String> {
    let doc = CensusDocument::new(rows.to_vec(), *tolerance)?;
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn parse_census_json(text: &str) -> Result<CensusDocument> {
    let doc: CensusDocument = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::InvalidArgument(format!(
            "unsupported schema_version {}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    CensusCsv,
    RatiosCsv,
    Json,
}

pub fn export(rows: &[CensusRow], tolerance: &ToleranceConfig, format: ExportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ExportFormat::CensusCsv => census_csv(rows),
        ExportFormat::RatiosCsv => ratios_csv(rows),
        ExportFormat::Json => census_json(rows, tolerance)?,
    };
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Counts and ratios laid out with one column per order.
pub fn render_table(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    let width = rows.iter().map(|r| r.total.to_string().len()).max().unwrap_or(1).max(7);
    let line = |out: &mut String, label: &str, cells: Vec<String>| {
        let _ = write!(out, "{label:<10}");
        for c in cells {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    };
    line(&mut out, "n", rows.iter().map(|r| r.n.to_string()).collect());
    line(&mut out, "|G_n|", rows.iter().map(|r| r.total.to_string()).collect());
    for c in Subclass::ALL {
        let label = format!("|G_n^{}|", c.index() + 1);
        line(&mut out, &label, rows.iter().map(|r| r.count(c).to_string()).collect());
    }
    line(
        &mut out,
        "borderline",
        rows.iter().map(|r| r.borderline_count.to_string()).collect(),
    );
    out.push('\n');
    for c in Subclass::ALL {
        let label = format!("r{}", c.index() + 1);
        let cells = rows
            .iter()
            .map(|r| {
                if r.total == 0 {
                    "-".into()
                } else {
                    format_ratio(r.count(c), r.total, 5)
                }
            })
            .collect();
        line(&mut out, &label, cells);
    }
    out
}
