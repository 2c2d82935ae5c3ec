mod config;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use config::{parse_method, CaseConfig};
use run::Command;

/// Construct and verify the almost central element Z.
#[derive(Parser, Debug)]
#[command(name = "zcentral", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Typed key-value config file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    tau: Option<u8>,
    #[arg(long)]
    n: Option<usize>,
    /// hat | solved-symbolic | free | explicit
    #[arg(long)]
    mode: Option<String>,
    /// exact | random
    #[arg(long)]
    method: Option<String>,
    /// Comma-separated seeds for the random method
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Height bound for `dims` and `radical`
    #[arg(long)]
    height: Option<i64>,
    /// Write the report here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn config(cli: &Cli) -> anyhow::Result<CaseConfig> {
    let mut cfg = CaseConfig::default();
    if let Some(path) = &cli.config {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        cfg.apply(&config::parse(&text)?)?;
    }
    if let Some(t) = cli.tau {
        cfg.tau = t;
    }
    if let Some(n) = cli.n {
        cfg.n = n;
    }
    if let Some(m) = &cli.mode {
        cfg.mode = m.parse().map_err(anyhow::Error::msg)?;
    }
    if let Some(m) = &cli.method {
        cfg.method = parse_method(m)?;
    }
    if !cli.seeds.is_empty() {
        cfg.seeds = cli.seeds.clone();
    }
    if let Some(t) = cli.trials {
        cfg.trials = t;
    }
    if cli.height.is_some() {
        cfg.height = cli.height;
    }
    if cli.output.is_some() {
        cfg.output = cli.output.clone();
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(&cli).and_then(|cfg| {
        let report = run::run(cli.command, &cfg)?;
        let json = report.to_json();
        match &cfg.output {
            Some(p) => {
                std::fs::write(p, &json).with_context(|| format!("writing {}", p.display()))?
            }
            None => print!("{json}"),
        }
        for f in report.failures() {
            let why = f.witness.as_deref().unwrap_or(&f.paper_ref);
            let short: String = why.chars().take(200).collect();
            eprintln!("FAIL {}: {short}", f.id);
        }
        Ok(report.all_ok())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
