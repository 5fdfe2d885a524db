use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use drinfeld_core::drinfeld::DrinfeldModuleSpec;
use drinfeld_core::frobenius::oracles::{equivalence_sweep, smith_vs_scan};
use drinfeld_core::poly_arith::Fq;
use drinfeld_core::quadforms::{class_number_csv, class_number_table};
use drinfeld_core::survey::{
    density_report, growth_report, read_csv, read_jsonl, rows_from_records, run, FSpec,
    SurveyConfig,
};

#[derive(Parser)]
#[command(
    name = "drinfeld-survey",
    version,
    about = "Frobenius and endomorphism-ring survey for psi_T = T + g1 tau + g2 tau^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep all good primes in a degree range and emit one record per prime.
    Survey(SurveyArgs),
    /// Rebuild the density or growth table from a record file.
    Tables {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "density")]
        report: Report,
        /// Threshold f for the density column.
        #[arg(long, default_value = "sqrt")]
        f: String,
        #[arg(long, default_value_t = 3)]
        q: u64,
    },
    /// Cross-check the conductor and invariant-factor computations by brute force.
    Oracles {
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value = "1")]
        g1: String,
        #[arg(long, default_value = "1")]
        g2: String,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        #[arg(long, default_value_t = 3)]
        smith_max_deg: usize,
    },
    /// Class numbers of the imaginary squarefree discriminants up to a degree.
    ClassNumbers {
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Density,
    Growth,
}

#[derive(clap::Args)]
struct SurveyArgs {
    /// `key = value` file; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    g1: Option<String>,
    #[arg(long)]
    g2: Option<String>,
    #[arg(long)]
    deg_min: Option<usize>,
    #[arg(long)]
    deg_max: Option<usize>,
    /// const:k, sqrt, log2 or linear:num/den
    #[arg(long)]
    f: Option<String>,
    /// csv or jsonl
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

impl SurveyArgs {
    fn to_config(&self) -> Result<SurveyConfig> {
        let mut text = match &self.config {
            Some(path) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            None => String::new(),
        };
        let mut set = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                text.push_str(&format!("\n{k} = {v}"));
            }
        };
        set("q", self.q.map(|v| v.to_string()));
        set("g1", self.g1.clone());
        set("g2", self.g2.clone());
        set("deg_min", self.deg_min.map(|v| v.to_string()));
        set("deg_max", self.deg_max.map(|v| v.to_string()));
        set("f", self.f.clone());
        set("format", self.format.clone());
        set("workers", self.workers.map(|v| v.to_string()));
        let mut cfg = SurveyConfig::from_text(&text)?;
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        Ok(cfg)
    }
}

fn survey(args: &SurveyArgs) -> Result<()> {
    let cfg = args.to_config()?;
    log::info!(
        "q = {}, g1 = {}, g2 = {}, degrees {}..={}, f = {}, {} workers",
        cfg.q(),
        cfg.psi.g1(),
        cfg.psi.g2(),
        cfg.deg_min,
        cfg.deg_max,
        cfg.f,
        cfg.workers
    );
    let summary = match &cfg.out {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            run(&cfg, BufWriter::new(file))?
        }
        None => run(&cfg, BufWriter::new(io::stdout().lock()))?,
    };
    for p in &summary.bad {
        eprintln!("bad reduction: {}", p.to_human());
    }
    eprint!("{}", density_report(&summary.rows, cfg.q()));
    eprint!("{}", growth_report(&summary.rows, cfg.q())?);
    Ok(())
}

fn tables(input: &PathBuf, report: Report, f: &str, q: u64) -> Result<()> {
    let f: FSpec = f.parse()?;
    let file = File::open(input).with_context(|| format!("opening {}", input.display()))?;
    let records = if input
        .extension()
        .is_some_and(|e| e == "jsonl" || e == "json")
    {
        read_jsonl(BufReader::new(file))?
    } else {
        read_csv(file)?
    };
    let q = records.first().map_or(q as u32, |r| r.q());
    let rows = rows_from_records(&records, &f);
    let text = match report {
        Report::Density => density_report(&rows, q),
        Report::Growth => growth_report(&rows, q)?,
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn oracles(q: u64, g1: &str, g2: &str, max_deg: usize, smith_max_deg: usize) -> Result<bool> {
    let psi = DrinfeldModuleSpec::parse(Fq::new(q)?, g1, g2)?;
    let eq = equivalence_sweep(&psi, max_deg)?;
    println!(
        "conductor membership: {} primes, {} tests, {} nontrivial passes, {} disagreements",
        eq.primes,
        eq.tests,
        eq.nontrivial_passes,
        eq.disagreements.len()
    );
    for (p, m0, s, o, c) in &eq.disagreements {
        println!("  p = {p}, m = {m0}: skew {s}, scalar {o}, centralizer {c}");
    }
    let sm = smith_vs_scan(&psi, smith_max_deg)?;
    println!(
        "invariant factors: {} primes, {} mismatches",
        sm.primes,
        sm.mismatches.len()
    );
    for (p, a, b) in &sm.mismatches {
        println!("  p = {p}: smith {a:?}, scan {b:?}");
    }
    Ok(eq.disagreements.is_empty() && sm.mismatches.is_empty())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Survey(args) => survey(args).map(|_| true),
        Command::Tables {
            input,
            report,
            f,
            q,
        } => tables(input, *report, f, *q).map(|_| true),
        Command::Oracles {
            q,
            g1,
            g2,
            max_deg,
            smith_max_deg,
        } => oracles(*q, g1, g2, *max_deg, *smith_max_deg),
        Command::ClassNumbers { q, max_deg } => (|| {
            let rows = class_number_table(Fq::new(*q)?, *max_deg)?;
            io::stdout().write_all(class_number_csv(&rows)?.as_bytes())?;
            anyhow::Ok(true)
        })(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
