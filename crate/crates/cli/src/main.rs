use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gtbracket::sweep::{
    identities_exhaustive, identities_random, invariance_random, oracle_exhaustive, oracle_random,
    Exec, Report,
};
use gtbracket::{
    bracket, cobracket, cobracket_word, lk_pair, lk_self, Diagram, Letter, LinComb, TensorComb,
    Word,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "gtbracket",
    version,
    about = "Goldman bracket and Turaev cobracket on cyclic words"
)]
struct Cli {
    /// Genus of the surface (default 1; `check` picks its own per suite)
    #[arg(short, long, global = true)]
    genus: Option<u32>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Freely reduce a word
    Reduce { word: String },
    /// Canonical cyclic form of a word
    Canon { word: String },
    /// Linking number of partitions i and j (1-based)
    ///
    /// `lk WORD I J`, or `lk --pair V W I J` for partition I of V against J of W.
    Lk {
        #[arg(long)]
        pair: bool,
        #[arg(required = true, num_args = 3..=4)]
        args: Vec<String>,
    },
    /// Turaev cobracket, modulo the trivial class unless --raw
    Cobracket {
        word: String,
        /// Print as a sum of u∧v with u < v
        #[arg(long)]
        wedge: bool,
        /// Keep terms with a trivial factor
        #[arg(long)]
        raw: bool,
    },
    /// Goldman bracket of two words
    Bracket { v: String, w: String },
    /// Run a property-check suite
    Check(CheckArgs),
    /// Arc diagram of a word, or of a pair with --pair
    Diagram {
        #[arg(long)]
        pair: bool,
        #[arg(required = true, num_args = 1..=2)]
        words: Vec<String>,
        #[arg(long, conflicts_with = "svg")]
        dot: bool,
        #[arg(long)]
        svg: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Invariance,
    Bialgebra,
    All,
}

#[derive(Args)]
struct CheckArgs {
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Longest random word
    #[arg(long)]
    max_len: Option<usize>,
    /// Random cases
    #[arg(long)]
    samples: Option<u64>,
    /// Longest word in the exhaustive part
    #[arg(long)]
    exhaustive_len: Option<usize>,
    /// Run on one thread
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Output {
    Text,
    Json,
}

/// Settings shared by every command once defaults are filled in.
#[derive(Debug, Clone, Copy)]
struct RunConfig {
    genus: u32,
    seed: u64,
    max_len: usize,
    output: Output,
    wedge: bool,
}

impl RunConfig {
    fn new(genus: u32, output: Output) -> Result<Self, String> {
        if genus == 0 {
            return Err("genus must be at least 1".into());
        }
        Ok(RunConfig {
            genus,
            seed: 0,
            max_len: 1,
            output,
            wedge: false,
        })
    }

    fn word(&self, text: &str) -> Result<Word, String> {
        Word::parse(text, self.genus).map_err(|e| e.to_string())
    }
}

enum Failure {
    Usage(String),
    Check,
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

impl From<gtbracket::Error> for Failure {
    fn from(e: gtbracket::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let output = if cli.json { Output::Json } else { Output::Text };
    if let Command::Check(args) = cli.command {
        return check(args, cli.genus, output);
    }
    let mut cfg = RunConfig::new(cli.genus.unwrap_or(1), output)?;
    match cli.command {
        Command::Reduce { word } => {
            let w = cfg.word(&word)?;
            let reduced = w.reduce();
            let canonical = w.canonical();
            match cfg.output {
                Output::Text => println!("{}", word_text(&reduced.to_string())),
                Output::Json => println!(
                    "{}",
                    json!({ "reduced": reduced.to_string(), "canonical": canonical.to_string() })
                ),
            }
        }
        Command::Canon { word } => {
            let c = cfg.word(&word)?.canonical();
            match cfg.output {
                Output::Text => println!("{}", word_text(&c.to_string())),
                Output::Json => println!("{}", json!({ "canonical": c.to_string() })),
            }
        }
        Command::Lk { pair, args } => {
            let lk = match (pair, args.as_slice()) {
                (false, [w, i, j]) => lk_self(&cfg.word(w)?, index(i)?, index(j)?)?,
                (true, [v, w, i, j]) => {
                    lk_pair(&cfg.word(v)?, index(i)?, &cfg.word(w)?, index(j)?)?
                }
                (false, _) => return Err(Failure::Usage("expected WORD I J".into())),
                (true, _) => return Err(Failure::Usage("expected V W I J with --pair".into())),
            };
            match cfg.output {
                Output::Text => println!("{lk}"),
                Output::Json => println!("{}", json!({ "lk": lk })),
            }
        }
        Command::Cobracket { word, wedge, raw } => {
            cfg.wedge = wedge;
            let w = cfg.word(&word)?;
            let d = if raw {
                cobracket_word(&w)
            } else {
                cobracket(&LinComb::from_word(&w))
            };
            print_tensor(&cfg, &d)?;
        }
        Command::Bracket { v, w } => {
            let b = bracket(
                &LinComb::from_word(&cfg.word(&v)?),
                &LinComb::from_word(&cfg.word(&w)?),
            )?;
            match cfg.output {
                Output::Text => println!("{b}"),
                Output::Json => println!("{}", b.to_json()),
            }
        }
        Command::Diagram {
            pair,
            words,
            dot: _,
            svg,
        } => {
            let d = match (pair, words.as_slice()) {
                (false, [w]) => Diagram::single(&cfg.word(w)?),
                (true, [v, w]) => Diagram::pair(&cfg.word(v)?, &cfg.word(w)?)?,
                (false, _) => {
                    return Err(Failure::Usage(
                        "expected one word; use --pair for two".into(),
                    ))
                }
                (true, _) => return Err(Failure::Usage("expected two words with --pair".into())),
            };
            print!("{}", if svg { d.to_svg() } else { d.to_dot() });
        }
        Command::Check(_) => unreachable!(),
    }
    Ok(())
}

fn word_text(s: &str) -> &str {
    if s.is_empty() {
        "[1]"
    } else {
        s
    }
}

fn index(s: &str) -> Result<usize, String> {
    s.parse()
        .map_err(|_| format!("invalid partition index `{s}`"))
}

fn print_tensor(cfg: &RunConfig, d: &TensorComb) -> Result<(), Failure> {
    match (cfg.output, cfg.wedge) {
        (Output::Text, false) => println!("{d}"),
        (Output::Text, true) => println!("{}", d.wedge_string()?),
        (Output::Json, false) => println!("{}", d.to_json()),
        (Output::Json, true) => println!("{}", d.to_wedge_json()?),
    }
    Ok(())
}

fn check(args: CheckArgs, genus: Option<u32>, output: Output) -> Result<(), Failure> {
    let exec = if args.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let suites = match args.suite {
        Suite::All => vec![Suite::Oracle, Suite::Invariance, Suite::Bialgebra],
        s => vec![s],
    };
    let labelled = suites.len() > 1;
    let mut all_passed = true;
    for suite in suites {
        let default_genus = if suite == Suite::Bialgebra { 2 } else { 3 };
        let mut cfg = RunConfig::new(genus.unwrap_or(default_genus), output)?;
        cfg.seed = args.seed;
        let (max_len, samples, exhaustive) = match suite {
            Suite::Bialgebra => (5, 1_000, 2),
            _ => (8, 10_000, 4),
        };
        cfg.max_len = args.max_len.unwrap_or(max_len);
        if cfg.max_len == 0 {
            return Err(Failure::Usage("max-len must be at least 1".into()));
        }
        let samples = args.samples.unwrap_or(samples);
        let exhaustive = args.exhaustive_len.unwrap_or(exhaustive);
        let report = run_suite(suite, &cfg, samples, exhaustive, exec);
        all_passed &= report.passed();
        print_report(&cfg, suite_name(suite), labelled, &report);
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_suite(suite: Suite, cfg: &RunConfig, samples: u64, exhaustive: usize, exec: Exec) -> Report {
    let g = cfg.genus;
    match suite {
        Suite::Oracle => oracle_exhaustive(&Letter::alphabet(g), g, exhaustive, exec)
            .merge(oracle_random(cfg.seed, samples, cfg.max_len, g, exec)),
        Suite::Invariance => invariance_random(cfg.seed, samples, cfg.max_len, g, exec),
        Suite::Bialgebra => identities_exhaustive(g, exhaustive, exec).merge(identities_random(
            cfg.seed,
            samples,
            cfg.max_len,
            g,
            exec,
        )),
        Suite::All => unreachable!(),
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Oracle => "oracle",
        Suite::Invariance => "invariance",
        Suite::Bialgebra => "bialgebra",
        Suite::All => "all",
    }
}

fn print_report(cfg: &RunConfig, name: &str, labelled: bool, r: &Report) {
    if cfg.output == Output::Json {
        let first = r
            .first_failure
            .as_ref()
            .map(|(i, m)| json!({ "case": i, "message": m }));
        let value = json!({
            "suite": name,
            "passed": r.passed(),
            "checked": r.checked,
            "failures": r.failures,
            "first_failure": first,
        });
        println!("{value}");
        return;
    }
    let prefix = if labelled {
        format!("{name}: ")
    } else {
        String::new()
    };
    match &r.first_failure {
        None => println!("{prefix}PASS n={}", r.checked),
        Some((i, msg)) => println!(
            "{prefix}FAIL n={} failures={} first=case {i}: {msg}",
            r.checked, r.failures
        ),
    }
}
