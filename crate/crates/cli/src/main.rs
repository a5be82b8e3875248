//! `sally`: invariants, Betti numbers, generator checks and conjecture scans
//! for Sally-type numerical semigroups.

mod commands;
mod report;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use commands::{GensSelection, Outcome, Selection};
use report::Format;

#[derive(Parser, Debug)]
#[command(name = "sally", version, about = "Exact invariants and free resolutions of Sally-type semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Output file, or a directory for per-report files (scan only).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Multiplicity {
    /// A single multiplicity.
    #[arg(long)]
    e: Option<u32>,
    /// An inclusive range of multiplicities, written A..B.
    #[arg(long, value_parser = parse_range)]
    e_range: Option<(u32, u32)>,
}

#[derive(Args, Debug)]
struct Select {
    #[command(flatten)]
    mult: Multiplicity,
    /// First dropped index.
    #[arg(long, conflicts_with_all = ["all_m", "all_mn"])]
    m: Option<u32>,
    /// Second dropped index.
    #[arg(long, requires = "m")]
    n: Option<u32>,
    /// Every single-drop semigroup for each e.
    #[arg(long, conflicts_with = "all_mn")]
    all_m: bool,
    /// Every double-drop semigroup for each e.
    #[arg(long)]
    all_mn: bool,
}

#[derive(Args, Debug)]
struct BettiArgs {
    #[command(flatten)]
    select: Select,
    /// Largest degree examined; defaults to a bound past the last syzygy.
    #[arg(long)]
    lambda_max: Option<u64>,
}

#[derive(Args, Debug)]
struct GensArgs {
    #[command(flatten)]
    mult: Multiplicity,
    /// Dropped index for the single-drop family.
    #[arg(long, conflicts_with_all = ["all_m", "family"])]
    m: Option<u32>,
    /// Every single-drop semigroup for each e.
    #[arg(long, conflicts_with = "family")]
    all_m: bool,
    /// Double-drop family with matrices: 23 or 34.
    #[arg(long, value_parser = ["23", "34"])]
    family: Option<String>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[command(flatten)]
    mult: Multiplicity,
    /// Conjecture id 1..5, or all.
    #[arg(long, default_value = "all")]
    conjecture: String,
    /// Largest degree examined for each Betti table.
    #[arg(long)]
    lambda_max: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius number, type, pseudo-Frobenius set and symmetry, by definition and closed form.
    Invariants(Select),
    /// Betti numbers via Hochster's formula, with closed forms and structural checks.
    Betti(BettiArgs),
    /// Check the determinantal generating sets against the toric ideal.
    VerifyGens(GensArgs),
    /// Evaluate the Betti-number conjectures.
    Scan(ScanArgs),
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

impl Multiplicity {
    fn values(&self) -> Vec<u32> {
        match (self.e, self.e_range) {
            (Some(e), _) => vec![e],
            (None, Some((a, b))) => (a..=b).collect(),
            (None, None) => unreachable!("clap requires one of --e/--e-range"),
        }
    }

    fn params(&self, p: &mut Map<String, Value>) {
        match (self.e, self.e_range) {
            (Some(e), _) => p.insert("e".into(), json!(e)),
            (None, Some((a, b))) => p.insert("e_range".into(), json!([a, b])),
            _ => None,
        };
    }
}

impl Select {
    fn selection(&self) -> Result<Selection> {
        Ok(match (self.m, self.all_m, self.all_mn) {
            (Some(m), _, _) => Selection::One { m, n: self.n },
            (None, true, _) => Selection::AllM,
            (None, false, true) => Selection::AllMn,
            _ => bail!("one of --m, --all-m or --all-mn is required"),
        })
    }

    fn params(&self) -> Map<String, Value> {
        let mut p = Map::new();
        self.mult.params(&mut p);
        if let Some(m) = self.m {
            p.insert("m".into(), json!(m));
        }
        if let Some(n) = self.n {
            p.insert("n".into(), json!(n));
        }
        if self.all_m {
            p.insert("all_m".into(), json!(true));
        }
        if self.all_mn {
            p.insert("all_mn".into(), json!(true));
        }
        p
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn is_dir_target(path: &Path) -> bool {
    path.is_dir() || path.as_os_str().to_string_lossy().ends_with('/')
}

fn scan(args: &ScanArgs, format: Format, out: Option<&Path>) -> Result<bool> {
    let ids = commands::parse_conjecture(&args.conjecture)?;
    let es = args.mult.values();
    let mut params = Map::new();
    args.mult.params(&mut params);
    params.insert("conjecture".into(), json!(args.conjecture));
    if let Some(l) = args.lambda_max {
        params.insert("lambda_max".into(), json!(l));
    }
    let reports = commands::scan_reports(&ids, &es, args.lambda_max)?;
    let summary = commands::scan_summary(&reports);
    match out {
        Some(dir) if is_dir_target(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            for r in &reports {
                let path = dir.join(format!("conjecture{}_e{}.{}", r.id, r.e, format.extension()));
                let text = commands::render_scan(&params, std::slice::from_ref(r), format)?;
                emit(&text, Some(&path))?;
            }
            print!("{summary}");
        }
        Some(file) => {
            emit(&commands::render_scan(&params, &reports, format)?, Some(file))?;
            print!("{summary}");
        }
        None => {
            emit(&commands::render_scan(&params, &reports, format)?, None)?;
            eprint!("{summary}");
        }
    }
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool> {
    let out = cli.out.as_deref();
    if out.is_some_and(is_dir_target) && !matches!(cli.command, Command::Scan(_)) {
        bail!("--out must name a file for this command");
    }
    let finish = |o: Outcome| -> Result<bool> {
        emit(&o.text, out)?;
        Ok(o.ok)
    };
    match &cli.command {
        Command::Invariants(sel) => {
            let targets = commands::targets(&sel.mult.values(), sel.selection()?)?;
            finish(commands::invariants(sel.params(), &targets, cli.format)?)
        }
        Command::Betti(args) => {
            let targets = commands::targets(&args.select.mult.values(), args.select.selection()?)?;
            let mut params = args.select.params();
            if let Some(l) = args.lambda_max {
                params.insert("lambda_max".into(), json!(l));
            }
            finish(commands::betti(params, &targets, args.lambda_max, cli.format)?)
        }
        Command::VerifyGens(args) => {
            let sel = match (args.m, args.all_m, args.family.as_deref()) {
                (Some(m), _, _) => GensSelection::M(m),
                (None, true, _) => GensSelection::AllM,
                (None, false, Some("23")) => GensSelection::Family23,
                (None, false, Some(_)) => GensSelection::Family34,
                _ => bail!("one of --m, --all-m or --family is required"),
            };
            let mut params = Map::new();
            args.mult.params(&mut params);
            if let Some(m) = args.m {
                params.insert("m".into(), json!(m));
            }
            if args.all_m {
                params.insert("all_m".into(), json!(true));
            }
            if let Some(f) = &args.family {
                params.insert("family".into(), json!(f));
            }
            finish(commands::verify_gens(params, &args.mult.values(), sel, cli.format)?)
        }
        Command::Scan(args) => scan(args, cli.format, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(&cli)),
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
