use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use deletion_games::engine::{Engine, EngineConfig};
use deletion_games::families::FamilyKind;
use deletion_games::graphgames::cache::CacheLoad;
use deletion_games::graphgames::{VariantKind, DEFAULT_MAX_COMPONENT};
use deletion_games::input::GraphInput;
use deletion_games::output::{AwReport, ValueReport};
use deletion_games::verify::{self, Suite, VerifyConfig, VERIFY_MAX_COMPONENT};
use deletion_games::Error;

#[derive(Parser)]
#[command(name = "mdg", version, about = "Game values of vertex/edge deletion games on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical value and outcome of a position.
    Value(PositionArgs),
    /// Atomic weight of an all-small position.
    Aw(PositionArgs),
    /// Re-check the known results and report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct EngineArgs {
    /// Largest connected component that may be canonically labelled.
    #[arg(long)]
    max_component: Option<usize>,
    /// Entry cap on the comparison memo; exceeding it is an error.
    #[arg(long)]
    memo_cap: Option<usize>,
    /// First remote-star order to try.
    #[arg(long)]
    remote_star: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl EngineArgs {
    fn config(&self, default_max_component: usize) -> EngineConfig {
        EngineConfig {
            max_component: self.max_component.unwrap_or(default_max_component),
            memo_cap: self.memo_cap,
            remote_star: self.remote_star,
            ..EngineConfig::default()
        }
    }
}

#[derive(Args)]
struct PositionArgs {
    /// Family terms joined by `+`, e.g. `path 4 + cycle 5`.
    #[arg(num_args = 0..)]
    term: Vec<String>,
    /// Edge-list file instead of a family term.
    #[arg(long, conflicts_with = "term")]
    file: Option<PathBuf>,
    /// classic, fl or mf. Defaults to classic for `value` and mf for `aw`.
    #[arg(long)]
    variant: Option<VariantKind>,
    /// Component-value cache to load and update.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (table-aw, winners, signs, farstar, bias); all by default.
    #[arg(long)]
    suite: Vec<Suite>,
    /// Restrict winner and sign checks to these variants.
    #[arg(long)]
    variant: Vec<VariantKind>,
    /// Restrict winner checks to these families.
    #[arg(long)]
    family: Vec<FamilyKind>,
    #[arg(long)]
    exclude_family: Vec<FamilyKind>,
    /// First family size in winner checks.
    #[arg(long)]
    from: Option<usize>,
    /// Last family size in winner checks.
    #[arg(long)]
    to: Option<usize>,
    /// Largest path for the table-aw, signs and farstar suites.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest vertex count for the bias suite.
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the JSON reports to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

enum Failure {
    Engine(Error),
    Io(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Value(args) => position(args, VariantKind::Classic, |engine, input, variant, g| {
            let r = ValueReport::new(engine, input, variant, g)?;
            Ok((r.text(), json(&r)))
        }),
        Command::Aw(args) => position(args, VariantKind::MutualFailures, |engine, input, variant, g| {
            let r = AwReport::new(engine, input, variant, g)?;
            Ok((r.text(), json(&r)))
        }),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Engine(e)) => {
            eprintln!("mdg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Io(e)) => {
            eprintln!("mdg: {e}");
            ExitCode::from(2)
        }
    }
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

type Render = fn(&mut Engine, String, VariantKind, deletion_games::cgt::GameId) -> deletion_games::Result<(String, String)>;

fn position(args: PositionArgs, default_variant: VariantKind, render: Render) -> Result<(), Failure> {
    let input = match &args.file {
        Some(path) => GraphInput::parse_edge_list(&std::fs::read_to_string(path)?)?,
        None if args.term.is_empty() => return Err(Error::Parse("no graph given".into()).into()),
        None => GraphInput::parse_family(&args.term.join(" "))?,
    };
    let variant = args.variant.unwrap_or(default_variant);
    let mut engine = Engine::new(args.engine.config(DEFAULT_MAX_COMPONENT));
    if let Some(path) = &args.cache {
        if engine.load_cache(path)? == CacheLoad::Ignored && path.exists() {
            eprintln!("mdg: ignoring unreadable or outdated cache {}", path.display());
        }
    }
    let graph = input.to_graph()?;
    let g = engine.game_of(&graph, variant)?;
    let label = match &input {
        GraphInput::Family(_) => input.to_string(),
        GraphInput::EdgeList(_) => args.file.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
    };
    let (text, json) = render(&mut engine, label, variant, g)?;
    match args.engine.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
    }
    if let Some(path) = &args.cache {
        engine.save_cache(path)?;
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let mut config = VerifyConfig { engine: args.engine.config(VERIFY_MAX_COMPONENT), jobs: args.jobs, ..VerifyConfig::default() };
    if !args.suite.is_empty() {
        config.suites = args.suite;
    }
    if !args.variant.is_empty() {
        config.variants = args.variant;
    }
    if !args.family.is_empty() {
        config.families = args.family;
    }
    config.families.retain(|f| !args.exclude_family.contains(f));
    config.from = args.from;
    config.to = args.to;
    if let Some(n) = args.max_n {
        config.table_max_n = n;
        config.signs_max_n = n;
        config.farstar_max_n = n;
    }
    if let Some(v) = args.max_vertices {
        config.bias_max_vertices = v;
    }
    let reports = verify::run_all(&config)?;
    match args.engine.format {
        Format::Text => {
            for r in &reports {
                println!("{}", r.summary());
            }
        }
        Format::Json => println!("{}", json(&reports)),
    }
    if let Some(path) = &args.out {
        std::fs::write(path, json(&reports) + "\n")?;
    }
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
