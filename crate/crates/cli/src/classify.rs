use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use genergy::classify::BoundaryFlag;
use genergy::closedform::FamilyPrediction;
use genergy::enumerate::{read_graph6_file, ErrorPolicy};
use genergy::{canonical_form, classify, parse_graph6, predicted_subclass, profile, to_graph6};
use genergy::{EnergyProfile, Family, Graph, Subclass, ToleranceConfig};
use serde::{Deserialize, Serialize};

use crate::{CliError, Common, Format};

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["graph6", "file", "family"])))]
pub struct ClassifyArgs {
    /// A graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// A graph6 file; the first graph is used.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A named family, together with --n.
    #[arg(long, value_parser = ["path", "cycle", "complete"], requires = "n")]
    family: Option<String>,
    /// Order of the family member.
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[command(flatten)]
    common: Common,
}

/// JSON document printed by `classify --format json`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub graph6: String,
    pub canonical: String,
    pub profile: EnergyProfile,
    pub subclass: Subclass,
    pub flags: Vec<BoundaryFlag>,
    pub borderline: bool,
    pub tolerance: ToleranceConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<FamilyPrediction>,
}

fn load(args: &ClassifyArgs) -> Result<(Graph, Option<(Family, usize)>), CliError> {
    if let Some(text) = &args.graph6 {
        return Ok((parse_graph6(text.trim())?, None));
    }
    if let Some(path) = &args.file {
        let batch = read_graph6_file(path, ErrorPolicy::FailFast)?;
        let g = batch
            .graphs
            .into_iter()
            .next()
            .ok_or_else(|| CliError::Usage(format!("{}: no graphs", path.display())))?;
        return Ok((g, None));
    }
    let family: Family = args.family.as_deref().unwrap_or_default().parse()?;
    let n = args.n.unwrap_or_default();
    Ok((family.graph(n)?, Some((family, n))))
}

pub fn run(args: ClassifyArgs) -> Result<(), CliError> {
    let tol = args.common.tolerance()?;
    let (g, family) = load(&args)?;
    if !g.is_connected() {
        return Err(CliError::Domain(format!(
            "graph of order {} is disconnected; subclasses are defined for connected graphs only",
            g.order()
        )));
    }
    let p = profile(&g)?;
    let c = classify(&p, &tol)?;
    let graph6 = to_graph6(&g).unwrap_or_else(|_| "-".into());
    let canonical = if g.order() <= genergy::graph6::MAX_ORDER {
        canonical_form(&g).into_string()
    } else {
        "-".into()
    };
    let prediction = family.and_then(|(f, n)| predicted_subclass(f, n).ok());
    let report = ClassifyReport {
        graph6,
        canonical,
        profile: p,
        subclass: c.subclass,
        flags: c.flags,
        borderline: c.borderline,
        tolerance: tol,
        prediction,
    };
    let text = match args.common.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Table => render(&report),
        Format::Csv => csv(&report),
    };
    args.common.emit(&text)
}

fn render(r: &ClassifyReport) -> String {
    let p = &r.profile;
    let mut out = String::new();
    let _ = writeln!(out, "graph6     {}", r.graph6);
    let _ = writeln!(out, "canonical  {}", r.canonical);
    let _ = writeln!(out, "n          {}", p.n);
    let _ = writeln!(out, "m          {}", p.m);
    for (name, v) in [
        ("E", p.energy),
        ("LE", p.laplacian_energy),
        ("LEL", p.lel),
        ("IE", p.incidence_energy),
        ("pi", p.pi),
        ("pi*", p.pi_star),
    ] {
        let _ = writeln!(out, "{name:<10} {v:.12}");
    }
    let _ = writeln!(out, "subclass   {}", r.subclass);
    let flags = if r.flags.is_empty() {
        "none".to_string()
    } else {
        r.flags.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(out, "flags      {flags}");
    if r.borderline {
        let _ = writeln!(out, "borderline yes");
    }
    if let Some(pred) = &r.prediction {
        let verdict = if pred.predicted == r.subclass {
            "agrees"
        } else {
            "DISAGREES"
        };
        let _ = writeln!(out, "predicted  {} ({verdict})", pred.predicted);
    }
    let _ = writeln!(
        out,
        "tolerance  abs={:e} rel={:e}",
        r.tolerance.eps_abs, r.tolerance.eps_rel
    );
    out
}

fn csv(r: &ClassifyReport) -> String {
    let p = &r.profile;
    let flags: Vec<String> = r.flags.iter().map(|f| format!("E={}", f.threshold)).collect();
    format!(
        "graph6,n,m,E,LE,LEL,IE,pi,pi_star,subclass,flags\n{},{},{},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{},{}\n",
        r.graph6,
        p.n,
        p.m,
        p.energy,
        p.laplacian_energy,
        p.lel,
        p.incidence_energy,
        p.pi,
        p.pi_star,
        r.subclass,
        flags.join(";")
    )
}
