use clap::Args;
use genergy::connected_graphs;
use serde::{Deserialize, Serialize};

use crate::{CliError, Common, Format};

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Order of the graphs.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub n: usize,
    pub count: usize,
    pub graphs: Vec<String>,
}

pub fn run(args: EnumerateArgs) -> Result<(), CliError> {
    let workers = args.common.workers()?;
    let graphs = connected_graphs(args.n, workers)?;
    let forms: Vec<String> = graphs.into_iter().map(|g| g.form.into_string()).collect();
    let count = forms.len();
    let text = match args.common.format {
        Format::Json => {
            serde_json::to_string_pretty(&EnumerateReport {
                n: args.n,
                count,
                graphs: forms,
            })? + "\n"
        }
        Format::Table | Format::Csv => forms.iter().map(|f| format!("{f}\n")).collect(),
    };
    args.common.emit(&text)?;
    if args.common.out.is_some() {
        println!("{count}");
    } else {
        eprintln!("{count} connected graphs of order {}", args.n);
    }
    Ok(())
}
