use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kthue::constructions::{k_thue_word, ConstructionKind, WREATH_DISPLAY_OFFSET};
use kthue::exponent::max_exponent;
use kthue::morphisms::{parse_morphism, write_morphism};
use kthue::search::{search_with, SearchConfig};
use kthue::text::{parse_words, render, WordFormat};
use kthue::verify::{
    exit_code, run_suite, Certificate, KappaProperty, LambdaProperty, SuiteConfig, Task, VerifyOptions, WindowScope,
};
use kthue::{is_k_thue, Error};

#[derive(Parser)]
#[command(name = "kthue", version, about = "Build and check k-Thue words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a k-Thue word over k+2 symbols.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        length: usize,
    },
    /// Print a wreath construction.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        t: u32,
        /// Label of the smallest symbol.
        #[arg(long, default_value_t = WREATH_DISPLAY_OFFSET)]
        offset: u8,
    },
    /// Report the first repetition in each input word, or its largest exponent.
    Inspect(InspectArgs),
    /// Run exhaustive checks and print certificates.
    Verify(VerifyArgs),
    /// Search for ternary uniform morphisms passing the image filters.
    Search(SearchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Phi4,
    Phi6,
}

impl From<Kind> for ConstructionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Phi4 => ConstructionKind::Phi4,
            Kind::Phi6 => ConstructionKind::Phi6,
        }
    }
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long, required_unless_present = "exponent")]
    k: Option<usize>,
    /// Print the largest exponent instead.
    #[arg(long)]
    exponent: bool,
    /// Read `a, b, c, ...` as symbols 0, 1, 2, ...
    #[arg(long)]
    letters: bool,
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TaskName {
    BoundedImages,
    WindowDeterminism,
    Tightness,
    Kappa,
    Lambda,
    Construction,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Windows {
    All,
    SquareFree,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    task: TaskName,
    /// Every supported k when absent.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long, default_value_t = 40)]
    max_len: usize,
    /// Property names such as K3 or L7; all when absent.
    #[arg(long = "property")]
    properties: Vec<String>,
    #[arg(long, value_enum, default_value = "all")]
    windows: Windows,
    /// Morphism file replacing the built-in table for its k.
    #[arg(long)]
    morphism: Option<PathBuf>,
    #[arg(long, env = "KTHUE_JOBS")]
    jobs: Option<usize>,
    /// Node budget per task.
    #[arg(long)]
    budget: Option<u64>,
    /// One JSON certificate per line.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    width: usize,
    /// Defaults to k+2.
    #[arg(long)]
    alphabet: Option<usize>,
    /// Leading symbols of each image as digit strings, e.g. `0,0,0`.
    #[arg(long, value_delimiter = ',', num_args = 1..=3)]
    prefix: Vec<String>,
    #[arg(long, default_value_t = 20)]
    test_len: usize,
    /// Length of the final bounded-image test; 0 skips it.
    #[arg(long, default_value_t = 40)]
    recheck_len: usize,
    #[arg(long, value_enum, default_value = "all")]
    windows: Windows,
    /// Node budget.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    max_results: Option<usize>,
    #[arg(long)]
    resume: Option<String>,
    #[arg(long, default_value_t = 4)]
    partition_depth: usize,
    #[arg(long, env = "KTHUE_JOBS")]
    jobs: Option<usize>,
    /// Print a JSON summary after the morphisms.
    #[arg(long)]
    json: bool,
}

fn scope(w: Windows) -> WindowScope {
    match w {
        Windows::All => WindowScope::All,
        Windows::SquareFree => WindowScope::SquareFree,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { k, length } => generate(k, length),
        Command::Construct { kind, t, offset } => construct(kind.into(), t, offset),
        Command::Inspect(a) => inspect(&a),
        Command::Verify(a) => verify(&a),
        Command::Search(a) => search(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn generate(k: usize, length: usize) -> Result<u8, Error> {
    let w = k_thue_word(k, length)?;
    println!("{}", render(&w, 0));
    Ok(0)
}

fn construct(kind: ConstructionKind, t: u32, offset: u8) -> Result<u8, Error> {
    let w = kind.build(t)?;
    println!("{}", render(&w, offset));
    Ok(0)
}

fn read_input(file: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    let res = match file.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| text = s),
        _ => io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|e| Error::Argument(format!("cannot read input: {e}")))?;
    Ok(text)
}

fn inspect(a: &InspectArgs) -> Result<u8, Error> {
    let text = read_input(&a.file)?;
    let fmt = if a.letters {
        WordFormat::Letters
    } else {
        WordFormat::Auto
    };
    let words = parse_words(&text, fmt, None)?;
    let mut code = 0;
    for (n, w) in words.iter().enumerate() {
        let label = if words.len() > 1 {
            format!("word {}: ", n + 1)
        } else {
            String::new()
        };
        if a.exponent {
            let m = max_exponent(w)?;
            println!("{label}{m}");
            continue;
        }
        let k = a.k.expect("clap requires --k without --exponent");
        match is_k_thue(w, k) {
            None => println!("{label}{k}-Thue, length {}", w.len()),
            Some(r) => {
                code = 1;
                println!(
                    "{label}square in the {}-subsequence at {}, half length {}",
                    r.d, r.start, r.half_length
                );
            }
        }
    }
    Ok(code)
}

fn properties<P: std::str::FromStr<Err = Error> + Copy>(names: &[String], all: &[P]) -> Result<Vec<P>, Error> {
    if names.is_empty() {
        return Ok(all.to_vec());
    }
    names.iter().map(|n| n.parse()).collect()
}

fn tasks(a: &VerifyArgs) -> Result<Vec<Task>, Error> {
    let ks = |range: std::ops::RangeInclusive<usize>| a.k.map_or_else(|| range.collect(), |k| vec![k]);
    let mut out = Vec::new();
    match a.task {
        TaskName::All => return Ok(Task::all(a.max_len)),
        TaskName::BoundedImages => {
            for k in ks(2..=8) {
                out.push(Task::BoundedImages { k, max_len: a.max_len });
            }
        }
        TaskName::WindowDeterminism => {
            for k in ks(2..=8) {
                out.push(Task::WindowDeterminism {
                    k,
                    scope: scope(a.windows),
                });
            }
        }
        TaskName::Tightness => {
            for k in ks(1..=8) {
                out.push(Task::Tightness { k });
            }
        }
        TaskName::Kappa => out.push(Task::Kappa {
            t: a.t.unwrap_or(6),
            properties: properties(&a.properties, &KappaProperty::ALL)?,
        }),
        TaskName::Lambda => out.push(Task::Lambda {
            t: a.t.unwrap_or(6),
            properties: properties(&a.properties, &LambdaProperty::ALL)?,
        }),
        TaskName::Construction => {
            let kinds = match a.kind {
                Some(k) => vec![k.into()],
                None => vec![ConstructionKind::Phi4, ConstructionKind::Phi6],
            };
            for kind in kinds {
                let top = match kind {
                    ConstructionKind::Phi4 => 7,
                    ConstructionKind::Phi6 => 6,
                };
                let ts = a.t.map_or_else(|| (1..=top).collect(), |t| vec![t]);
                for t in ts {
                    out.push(Task::Construction { kind, t });
                }
            }
        }
    }
    Ok(out)
}

fn verify(a: &VerifyArgs) -> Result<u8, Error> {
    let mut options = VerifyOptions::default();
    if let Some(j) = a.jobs {
        options = options.with_jobs(j);
    }
    options.max_nodes = a.budget;
    let mut overrides = BTreeMap::new();
    if let Some(p) = &a.morphism {
        let text =
            std::fs::read_to_string(p).map_err(|e| Error::Argument(format!("cannot read {}: {e}", p.display())))?;
        let (k, m) = parse_morphism(&text)?;
        overrides.insert(k, m);
    }
    let cfg = SuiteConfig {
        tasks: tasks(a)?,
        options,
        mu_overrides: overrides,
    };
    let certs = run_suite(&cfg);
    let mut out = io::stdout().lock();
    for c in &certs {
        let _ = if a.json {
            writeln!(out, "{}", serde_json::to_string(c).expect("certificate serializes"))
        } else {
            writeln!(out, "{}", describe(c))
        };
    }
    Ok(exit_code(&certs) as u8)
}

fn describe(c: &Certificate) -> String {
    match &c.witness {
        None => c.summary(),
        Some(w) => format!(
            "{}\n  witness: {}",
            c.summary(),
            serde_json::to_string(w).expect("witness serializes")
        ),
    }
}

fn search(a: &SearchArgs) -> Result<u8, Error> {
    // A single prefix applies to all three images.
    let parsed = a.prefix.iter().map(|p| digits(p)).collect::<Result<Vec<_>, _>>()?;
    let mut prefixes: [Vec<u8>; 3] = Default::default();
    for (i, slot) in prefixes.iter_mut().enumerate() {
        if let Some(p) = parsed.get(if parsed.len() == 1 { 0 } else { i }) {
            *slot = p.clone();
        }
    }
    let mut cfg = SearchConfig::new(a.k, a.width);
    if let Some(al) = a.alphabet {
        cfg.alphabet_size = al;
    }
    cfg.prefixes = prefixes;
    cfg.test_len = a.test_len;
    cfg.recheck_len = (a.recheck_len > 0).then_some(a.recheck_len);
    cfg.window_scope = scope(a.windows);
    cfg.max_nodes = a.budget;
    cfg.max_results = a.max_results;
    cfg.partition_depth = a.partition_depth;
    if let Some(j) = a.jobs {
        cfg.jobs = j.max(1);
    }
    let mut out = io::stdout().lock();
    let r = search_with(&cfg, a.resume.as_deref(), |m| {
        let _ = writeln!(out, "{}", write_morphism(cfg.k, m));
        let _ = out.flush();
    })?;
    let stats: BTreeMap<&str, u64> = r.stats.entries().into_iter().collect();
    if a.json {
        let summary = serde_json::json!({
            "found": r.morphisms.len(),
            "nodes": r.nodes,
            "stats": stats,
            "complete": r.is_complete(),
            "checkpoint": r.checkpoint,
        });
        let _ = writeln!(out, "{summary}");
    }
    eprintln!("found {} morphisms, {} nodes, {:?}", r.morphisms.len(), r.nodes, stats);
    match &r.checkpoint {
        Some(t) if Some(r.morphisms.len()) == cfg.max_results => {
            eprintln!("result limit reached; continue with --resume '{t}'");
            Ok(0)
        }
        Some(t) => {
            eprintln!("budget exhausted; resume with --resume '{t}'");
            Ok(2)
        }
        None => Ok(0),
    }
}

fn digits(s: &str) -> Result<Vec<u8>, Error> {
    s.chars()
        .enumerate()
        .map(|(i, c)| {
            c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("prefix {s:?}: expected a digit, found {c:?}"),
            })
        })
        .collect()
}
