use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lsg_core::graph::{to_dot, GraphDocument};
use lsg_core::harness::{
    run_suite, CorpusSpec, ModuleAnalysis, RingPolicy, SuiteOptions, TheoremId,
};
use lsg_core::{Caps, Error, ModuleSpec};

mod describe;

const EXIT_VIOLATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_UNWRITABLE: u8 = 4;
const EXIT_INCONCLUSIVE: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "lsg-lab",
    version,
    about = "Large sum graphs of finite modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest module order that will be enumerated.
    #[arg(long, global = true)]
    cap_elements: Option<usize>,

    /// Largest submodule lattice that will be enumerated.
    #[arg(long, global = true)]
    cap_submodules: Option<usize>,

    /// Default caps as `<elements>,<submodules>`.
    #[arg(long = "caps-env", env = "LSG_LAB_CAPS", hide = true, global = true)]
    env: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebraic summary of one module.
    Describe {
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The large sum graph of one module.
    Graph {
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact graph invariants of one module.
    Invariants {
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the structural claims on a module or a corpus.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
    module: Option<String>,

    /// `cyclic`, `two_factor` or `file:<path>`.
    #[arg(long)]
    corpus: Option<String>,

    /// Upper bound for generated corpora (n for cyclic, d for two_factor).
    #[arg(long)]
    max: Option<u64>,

    /// Comma-separated claim ids, `all` (claims and lemmas) or `lemmas`.
    #[arg(long)]
    theorems: Option<String>,

    /// Also record conclusions that fail on non-comultiplication modules.
    #[arg(long)]
    catalog: bool,

    /// Rings for generated corpora: `Z`, `Zn` (Z/exp(M)) or `both`.
    #[arg(long, default_value = "Z")]
    rings: String,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    #[arg(long)]
    out: Option<PathBuf>,

    /// Exit 0 even when some checks were inconclusive.
    #[arg(long)]
    allow_inconclusive: bool,

    /// Wrap the JSON report with run metadata (version, caps, timing).
    #[arg(long)]
    meta: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Csv,
    Text,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. }
            | Error::InvalidCyclicOrder(_)
            | Error::InvalidModulus(_)
            | Error::IncompatibleRing { .. }
            | Error::MalformedElement(_) => EXIT_PARSE,
            e if e.is_cap() => EXIT_CAP,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn caps(args: &CapArgs) -> Result<Caps, Failure> {
    let mut caps = match &args.env {
        Some(s) => Caps::parse_pair(s)?,
        None => Caps::default(),
    };
    if let Some(n) = args.cap_elements {
        caps.max_elements = n;
    }
    if let Some(n) = args.cap_submodules {
        caps.max_submodules = n;
    }
    Ok(caps)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let caps = caps(&cli.caps)?;
    match cli.command {
        Command::Describe {
            module,
            format,
            out,
        } => {
            let a = analyse(&module, &caps)?;
            let text = match format {
                Format::Text => describe::text(&a),
                Format::Json => describe::json(&a),
                _ => return Err(usage("describe supports --format text or json")),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Graph {
            module,
            format,
            out,
        } => {
            let a = analyse(&module, &caps)?;
            let text = match format {
                Format::Dot => to_dot(&a.graph),
                Format::Json => GraphDocument::new(&a.graph, a.invariants.clone()).to_json(),
                _ => return Err(usage("graph supports --format dot or json")),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Invariants {
            module,
            format,
            out,
        } => {
            let a = analyse(&module, &caps)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "module": a.spec.to_string(),
                        "invariants": a.invariants,
                    }))
                    .expect("invariants serialize");
                    s.push('\n');
                    s
                }
                Format::Text => describe::invariants_text(&a),
                _ => return Err(usage("invariants supports --format json or text")),
            };
            emit(&text, out.as_deref())?;
            Ok(if a.invariants.aborted.is_empty() {
                0
            } else {
                EXIT_INCONCLUSIVE
            })
        }
        Command::Verify(args) => verify(args, caps),
    }
}

fn analyse(module: &str, caps: &Caps) -> Result<ModuleAnalysis, Failure> {
    let spec: ModuleSpec = module.parse()?;
    Ok(ModuleAnalysis::new(&spec, caps)?)
}

fn parse_theorems(s: &str) -> Result<Vec<TheoremId>, Failure> {
    match s.trim() {
        "all" => Ok(TheoremId::all()),
        "lemmas" => Ok(TheoremId::LEMMAS.to_vec()),
        "theorems" => Ok(TheoremId::THEOREMS.to_vec()),
        list => {
            let mut ids = list
                .split(',')
                .map(|t| t.parse::<TheoremId>())
                .collect::<Result<Vec<_>, _>>()?;
            ids.sort();
            ids.dedup();
            Ok(ids)
        }
    }
}

fn corpus(args: &VerifyArgs) -> Result<CorpusSpec, Failure> {
    if let Some(m) = &args.module {
        return Ok(CorpusSpec::explicit(vec![m.parse()?]));
    }
    let name = args
        .corpus
        .as_deref()
        .expect("clap enforces --module or --corpus");
    let rings: RingPolicy = args.rings.parse()?;
    let spec = match name {
        "cyclic" => CorpusSpec::cyclic(2, args.max.unwrap_or(500)),
        "two_factor" => CorpusSpec::two_factor(args.max.unwrap_or(12)),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read corpus file {path}: {e}")))?;
                CorpusSpec::from_file_contents(&text)?
            }
            None => return Err(usage(format!("unknown corpus `{other}`"))),
        },
    };
    Ok(spec.with_rings(rings))
}

fn verify(args: VerifyArgs, caps: Caps) -> Result<u8, Failure> {
    let corpus = corpus(&args)?;
    let theorems = match &args.theorems {
        Some(s) => parse_theorems(s)?,
        None => TheoremId::THEOREMS.to_vec(),
    };
    let opts = SuiteOptions {
        theorems,
        caps,
        catalog: args.catalog,
    };
    let start = Instant::now();
    let report = run_suite(&corpus, &opts);
    let elapsed = start.elapsed();

    let text = match args.format {
        Format::Json if args.meta => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "meta": {
                    "tool": "lsg-lab",
                    "version": env!("CARGO_PKG_VERSION"),
                    "caps": caps,
                    "elapsed_ms": elapsed.as_millis() as u64,
                },
                "report": report,
            }))
            .expect("report serializes");
            s.push('\n');
            s
        }
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
        Format::Dot => return Err(usage("verify supports --format json, csv or text")),
    };
    emit(&text, args.out.as_deref())?;

    let violations = report.violations().count();
    if violations > 0 {
        eprintln!("{violations} violation(s) among applicable checks");
        return Ok(EXIT_VIOLATION);
    }
    if report.has_inconclusive() && !args.allow_inconclusive {
        eprintln!("some checks were inconclusive (caps reached)");
        return Ok(EXIT_INCONCLUSIVE);
    }
    Ok(0)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: EXIT_UNWRITABLE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
