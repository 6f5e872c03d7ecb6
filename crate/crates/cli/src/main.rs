//! `softedge`: tabulate soft-edge expansions, run seeded simulations,
//! validate the numerical stack, and export derived coefficient sets.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage error.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use softedge::checks::{self, McBudget};
use softedge::expansion::{
    expansion_term, histogram_adjust, make_scaling, pq_recursion, wave_expansion, EnsembleKind,
    PqCase, WaveCase,
};
use softedge::painleve::Beta;
use softedge::sampler::{mc_histogram, sample_batch, save_batch, EnsembleSpec};

use config::{load_file, optional, parse_beta, parse_kind, require, ConfigError, FileConfig};
use output::{float_cell, CsvWriter};

#[derive(Parser)]
#[command(name = "softedge", version, about)]
struct Cli {
    /// Optional JSON config file; explicit flags win over file values.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate F_beta, its derivative and the correction terms on a grid.
    Tabulate(TabulateArgs),
    /// Draw a seeded Monte-Carlo batch and emit the histogram panels.
    Simulate(SimulateArgs),
    /// Run the named validation checks; nonzero exit on any failure.
    Validate(ValidateArgs),
    /// Re-derive the beta = 1, 4 coefficient polynomials and export them.
    Derive(DeriveArgs),
    /// Export hardcoded coefficient sets (expansion terms, P/Q tables,
    /// wave-expansion polynomials) as exact JSON.
    Coeffs(CoeffsArgs),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TabulateArgs {
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    /// Number of correction terms (0..3).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t_min: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    t_step: Option<f64>,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SimulateArgs {
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Bin width in units of the expansion parameter h.
    #[arg(long)]
    eta: Option<f64>,
    /// Output base path (writes <base>.csv, <base>.f64, <base>.json).
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Run only checks whose name contains this substring.
    #[arg(long)]
    filter: Option<String>,
    /// Write the JSON report here (defaults to stdout only).
    #[arg(long)]
    output: Option<String>,
    #[arg(long)]
    mc_calibration: Option<u64>,
    #[arg(long)]
    mc_panel: Option<u64>,
    #[arg(long)]
    mc_decimation: Option<u64>,
}

#[derive(Args)]
struct DeriveArgs {
    /// Directory for the derived-coefficient JSON files.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Expansion-term export: requires --j and --kind.
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    kind: Option<String>,
    /// P/Q table export for `hermite` or `laguerre` (symbolic a^2).
    #[arg(long)]
    pq: Option<String>,
    /// Largest index K for the P/Q export.
    #[arg(long)]
    k: Option<usize>,
    /// Wave-expansion polynomial export for `hermite` or `laguerre`.
    #[arg(long)]
    wave: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    output: Option<String>,
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    let file = match cli.config.as_deref().map(load_file).transpose() {
        Ok(f) => f.unwrap_or_default(),
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = match cli.command {
        Command::Tabulate(args) => cmd_tabulate(args, &file),
        Command::Simulate(args) => cmd_simulate(args, &file),
        Command::Validate(args) => return cmd_validate(args, &file),
        Command::Derive(args) => cmd_derive(args),
        Command::Coeffs(args) => cmd_coeffs(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Cap the global thread pool from SOFTEDGE_THREADS.
fn init_threads() {
    if let Ok(value) = std::env::var("SOFTEDGE_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn cmd_tabulate(args: TabulateArgs, file: &FileConfig) -> Result<(), CliError> {
    let beta = parse_beta(&require(args.beta, file.beta.clone(), "beta")?)?;
    let kind = parse_kind(&require(args.kind, file.kind.clone(), "kind")?)?;
    let m = optional(args.m, file.m).unwrap_or(0);
    if m > 3 {
        return Err(CliError::Usage("m must be 0..3".into()));
    }
    let t_min = require(args.t_min, file.t_min, "t_min")?;
    let t_max = require(args.t_max, file.t_max, "t_max")?;
    let t_step = require(args.t_step, file.t_step, "t_step")?;
    if t_step <= 0.0 || t_max < t_min {
        return Err(CliError::Usage("empty or inverted t grid".into()));
    }
    let out_path = require(args.output, file.output.clone(), "output")?;
    let n = optional(args.n, file.n);
    let p = optional(args.p, file.p);

    // h and tau are needed once correction terms enter.
    let scaling = if m > 0 || kind == EnsembleKind::Laguerre {
        let n = n.ok_or(ConfigError::Missing("n"))?;
        Some(
            make_scaling(kind, beta, n, p)
                .map_err(|e| CliError::Usage(e.to_string()))?,
        )
    } else {
        None
    };
    let (h, tau) = scaling.map_or((0.0, 0.0), |s| (s.h, s.tau));

    let tw = checks::tracy_widom();
    let mut header = vec!["t".to_string(), "F".to_string(), "Fp".to_string()];
    for j in 1..=m {
        header.push(format!("E{j}"));
        header.push(format!("E{j}p"));
        header.push(format!("sum{j}"));
    }
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut csv = CsvWriter::new(std::fs::File::create(&out_path)?, &header_refs)?;

    let steps = ((t_max - t_min) / t_step).round() as usize;
    for i in 0..=steps {
        let t = t_min + t_step * i as f64;
        let f = tw.eval(beta, 0, t).map_err(|e| CliError::Failed(e.to_string()))?;
        let fp = tw.eval(beta, 1, t).map_err(|e| CliError::Failed(e.to_string()))?;
        let mut cells = vec![float_cell(t), float_cell(f), float_cell(fp)];
        let mut partial = f;
        let mut h_pow = 1.0;
        for j in 1..=m {
            h_pow *= h;
            let term = expansion_term(beta, j, kind);
            let e = term
                .eval(tw, t, tau, false)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            let ep = term
                .eval(tw, t, tau, true)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            partial += e * h_pow;
            cells.push(float_cell(e));
            cells.push(float_cell(ep));
            cells.push(float_cell(partial));
        }
        csv.row(&cells)?;
    }
    csv.finish()?;
    Ok(())
}

fn cmd_simulate(args: SimulateArgs, file: &FileConfig) -> Result<(), CliError> {
    let beta = parse_beta(&require(args.beta, file.beta.clone(), "beta")?)?;
    let kind = parse_kind(&require(args.kind, file.kind.clone(), "kind")?)?;
    let n = require(args.n, file.n, "n")? as u32;
    let p = optional(args.p, file.p).map(|v| v as u32);
    let samples = require(args.samples, file.samples, "samples")?;
    let seed = optional(args.seed, file.seed).unwrap_or(0);
    let eta = optional(args.eta, file.eta).unwrap_or(4.0);
    let out_base = PathBuf::from(require(args.output, file.output.clone(), "output")?);

    let spec = EnsembleSpec { beta, kind, n, p };
    let batch =
        sample_batch(spec, samples, seed).map_err(|e| CliError::Usage(e.to_string()))?;
    save_batch(&out_base, &batch).map_err(|e| CliError::Failed(e.to_string()))?;

    let hist = mc_histogram(&batch, eta, -5.0, 4.0)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let adjusted = histogram_adjust(kind, beta, eta);
    let tw = checks::tracy_widom();
    let h = batch.scaling.h;
    let tau = batch.scaling.tau;

    let mut csv = CsvWriter::new(
        std::fs::File::create(out_base.with_extension("csv"))?,
        &[
            "t_mid",
            "density",
            "F2p",
            "corr1",
            "corr2_adj",
            "diff1_scaled",
            "diff2_scaled",
            "ci_lo",
            "ci_hi",
        ],
    )?;
    for i in 0..hist.counts.len() {
        let t = hist.mid(i);
        let density = hist.density(i);
        let (ci_lo, ci_hi) = hist.density_ci(i);
        let fp = tw.eval(beta, 1, t).map_err(|e| CliError::Failed(e.to_string()))?;
        let corr1 = adjusted
            .eval(1, tw, t, tau, true)
            .map_err(|e| CliError::Failed(e.to_string()))?;
        let corr2 = adjusted
            .eval(2, tw, t, tau, true)
            .map_err(|e| CliError::Failed(e.to_string()))?;
        let diff1 = (density - fp) / h;
        let diff2 = (density - fp - h * corr1) / (h * h);
        csv.row(&[
            float_cell(t),
            float_cell(density),
            float_cell(fp),
            float_cell(corr1),
            float_cell(corr2),
            float_cell(diff1),
            float_cell(diff2),
            float_cell(ci_lo),
            float_cell(ci_hi),
        ])?;
    }
    csv.finish()?;
    Ok(())
}

fn cmd_validate(args: ValidateArgs, file: &FileConfig) -> ExitCode {
    let defaults = McBudget::default();
    let budget = McBudget {
        calibration: optional(args.mc_calibration, file.mc_calibration)
            .unwrap_or(defaults.calibration),
        panel: optional(args.mc_panel, file.mc_panel).unwrap_or(defaults.panel),
        decimation: optional(args.mc_decimation, file.mc_decimation)
            .unwrap_or(defaults.decimation),
        superposition: optional(args.mc_calibration, file.mc_calibration)
            .unwrap_or(defaults.superposition),
    };
    let filter = optional(args.filter, file.filter.clone());
    let results = checks::run_all(filter.as_deref(), budget);
    if results.is_empty() {
        eprintln!("no checks matched the filter");
        return ExitCode::from(2);
    }
    let mut all_passed = true;
    for r in &results {
        all_passed &= r.passed;
        println!(
            "[{}] {}: measured {:.6e} vs tolerance {:.6e} ({} ms) - {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.measured,
            r.tolerance,
            r.runtime_ms,
            r.detail
        );
    }
    let report = serde_json::json!({
        "passed": all_passed,
        "checks": results,
    });
    let rendered = serde_json::to_string_pretty(&report).expect("report serialization");
    if let Some(path) = args.output.or(file.output.clone()) {
        if std::fs::write(&path, &rendered).is_err() {
            eprintln!("error: cannot write report to {path}");
            return ExitCode::from(1);
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_derive(args: DeriveArgs) -> Result<(), CliError> {
    let dir = PathBuf::from(args.output.unwrap_or_else(|| "derived".into()));
    std::fs::create_dir_all(&dir)?;
    for kind in [EnsembleKind::Gaussian, EnsembleKind::Laguerre] {
        for j in 1..=3usize {
            let term = softedge::algebra::derive_beta14(j, kind)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            let tag = match kind {
                EnsembleKind::Gaussian => "gaussian",
                EnsembleKind::Laguerre => "laguerre",
            };
            let payload = serde_json::json!({
                "family": "p_plus",
                "j": j,
                "kind": tag,
                "coeffs": term.coeffs,
            });
            std::fs::write(
                dir.join(format!("p_plus_{tag}_j{j}.json")),
                serde_json::to_string_pretty(&payload).expect("serialize"),
            )?;
        }
    }
    println!("derived coefficient files written to {}", dir.display());
    Ok(())
}

fn cmd_coeffs(args: CoeffsArgs) -> Result<(), CliError> {
    let payload = if let Some(pq) = &args.pq {
        let case = match pq.to_ascii_lowercase().as_str() {
            "hermite" => PqCase::Hermite,
            "laguerre" => PqCase::LaguerreSymbolic,
            other => return Err(CliError::Usage(format!("unknown pq case `{other}`"))),
        };
        let k = args.k.unwrap_or(6);
        if !(1..=6).contains(&k) {
            return Err(CliError::Usage("pq index k must be 1..6".into()));
        }
        let table = pq_recursion(case.clone(), k).map_err(|e| CliError::Failed(e.to_string()))?;
        let entries: Vec<_> = table
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "k": e.k,
                    "q": e.q,
                    "p": e.p,
                    "w_shift": e.w_shift,
                    "lambda": e.lambda,
                })
            })
            .collect();
        serde_json::json!({ "case": pq, "entries": entries })
    } else if let Some(wave) = &args.wave {
        let case = match wave.to_ascii_lowercase().as_str() {
            "hermite" => WaveCase::Hermite,
            "laguerre" => WaveCase::Laguerre,
            other => return Err(CliError::Usage(format!("unknown wave case `{other}`"))),
        };
        let m = args.m.unwrap_or(3);
        if m > 3 {
            return Err(CliError::Usage("wave order m must be 0..3".into()));
        }
        let exp = wave_expansion(case, m);
        serde_json::json!({ "case": wave, "order": m, "p": exp.p, "q": exp.q })
    } else {
        let beta = parse_beta(&args.beta.ok_or(ConfigError::Missing("beta"))?)?;
        let j = args.j.ok_or(ConfigError::Missing("j"))?;
        if !(1..=3).contains(&j) {
            return Err(CliError::Usage("expansion order j must be 1..3".into()));
        }
        let kind = parse_kind(&args.kind.ok_or(ConfigError::Missing("kind"))?)?;
        let term = expansion_term(beta, j, kind);
        let tag = match kind {
            EnsembleKind::Gaussian => "gaussian",
            EnsembleKind::Laguerre => "laguerre",
        };
        serde_json::json!({
            "beta": match beta { Beta::One => 1, Beta::Two => 2, Beta::Four => 4, _ => 0 },
            "j": j,
            "kind": tag,
            "coeffs": term.coeffs,
        })
    };
    let rendered = serde_json::to_string_pretty(&payload).expect("serialize");
    match args.output {
        Some(path) => std::fs::write(path, rendered)?,
        None => println!("{rendered}"),
    }
    Ok(())
}
