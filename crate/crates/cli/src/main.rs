use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use explicit_zeta_cli::config::parse_count;
use explicit_zeta_cli::{
    cmd_constants, cmd_expsum_check, cmd_regions, cmd_table2, cmd_zfr, read_file, Branch, CliError, LogGrid,
    RunConfig,
};

#[derive(Parser)]
#[command(name = "explicit-zeta", version, about = "Certified checks of explicit zeta-function constants")]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Precision of the confirmation run; at least the working precision.
    #[arg(long = "confirm-precision", global = true)]
    confirm_precision: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Summand cap for brute-force oracles, e.g. 1e8.
    #[arg(long = "oracle-cap", global = true)]
    oracle_cap: Option<String>,
    /// File of `key = value` lines; flags given on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write the region table as CSV (regions only).
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derivative-test constants, uniform constants and smoothing constants.
    Constants,
    /// The zeta-bound parameter table and the k >= 10 branch.
    Table2 {
        /// Rows `k, eta3, h0, h1, h2, h3, gamma[, alpha=.., beta=.., phi=..]`.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Random exponential sums against every applicable bound.
    ExpsumCheck {
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// The main inequality behind the zero-free region.
    Zfr {
        #[arg(long, value_enum, default_value = "all")]
        branch: Branch,
    },
    /// Compare zero-free regions over a range of heights.
    Regions {
        /// Lines `name, formula, parameters..., valid_from`.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Geometric grid in log t, as `lo:hi:points`.
        #[arg(long = "log-t", default_value = "10:1000000:121")]
        grid: LogGrid,
    },
}

fn build_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_config_text(&read_file(path)?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    if let Some(p) = cli.precision {
        cfg.precision_bits = p;
        if cli.confirm_precision.is_none() && cfg.confirm_bits < p {
            cfg.confirm_bits = p;
        }
    }
    if let Some(p) = cli.confirm_precision {
        cfg.confirm_bits = p;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(c) = &cli.oracle_cap {
        cfg.oracle_cap = parse_count(c).ok_or_else(|| CliError::Usage(format!("bad oracle cap `{c}`")))?;
    }
    match &cli.command {
        Command::Table2 { table: Some(t) } => cfg.table2_path = Some(t.clone()),
        Command::Regions { catalog: Some(c), .. } => cfg.region_catalog_path = Some(c.clone()),
        _ => {}
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cfg = build_config(&cli)?;
    if cli.csv.is_some() && !matches!(cli.command, Command::Regions { .. }) {
        return Err(CliError::Usage("--csv applies to the regions subcommand only".into()));
    }
    let mut text = String::new();
    let report = match &cli.command {
        Command::Constants => cmd_constants(&cfg),
        Command::Table2 { .. } => cmd_table2(&cfg)?,
        Command::ExpsumCheck { samples } => cmd_expsum_check(&cfg, *samples),
        Command::Zfr { branch } => cmd_zfr(&cfg, *branch),
        Command::Regions { grid, .. } => {
            let (report, table) = cmd_regions(&cfg, grid)?;
            if let Some(path) = &cli.csv {
                let f = std::fs::File::create(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                table.write_csv(f)?;
            }
            text.push_str(&table.render());
            report
        }
    };
    let to_stdout = cli.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    match &cli.json {
        Some(_) if to_stdout => print!("{}", report.to_json()),
        Some(path) => write_out(path, &report.to_json())?,
        None => {}
    }
    if !to_stdout {
        print!("{}{}", text, report.render());
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
