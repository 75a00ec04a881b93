use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cupvote::cli::{self, WinnersOptions};
use cupvote::oracle::Source;
use cupvote::selfcheck::SelfCheckConfig;
use cupvote::{Error, Method, Notion};

#[derive(Parser)]
#[command(version, about = "Winner determination for sequential majority voting with incomplete preferences")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum NotionArg {
    All,
    Wc,
    Sc,
    Wp,
    Sp,
    Fwc,
    Fsc,
    Fwp,
    Fsp,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Profile,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Search,
    Brute,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the majority graph of a profile file.
    Graph { file: PathBuf },
    /// Compute winner sets.
    Winners {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        notion: NotionArg,
        #[arg(long, value_enum, default_value = "profile")]
        source: SourceArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Print a completion and agenda for each existential winner.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run one agenda on the profile's majority graph.
    Eval {
        file: PathBuf,
        #[arg(long)]
        agenda: String,
    },
    /// Build the partition instance for the given integers.
    Reduce {
        #[arg(required = true)]
        integers: Vec<u64>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Check relations between notions on random profiles.
    Selfcheck {
        #[arg(long, default_value_t = 4)]
        candidates: usize,
        #[arg(long, default_value_t = 4)]
        votes: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read(path: &PathBuf) -> Result<String, (i32, String)> {
    fs::read_to_string(path).map_err(|e| (cli::EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn fail(e: Error) -> (i32, String) {
    (cli::exit_code(&e), e.to_string())
}

fn run(args: Args) -> Result<String, (i32, String)> {
    match args.cmd {
        Cmd::Graph { file } => cli::cmd_graph(&read(&file)?).map_err(fail),
        Cmd::Winners {
            file,
            notion,
            source,
            method,
            witness,
            budget,
        } => {
            let notions = match notion {
                NotionArg::All => Notion::ALL.to_vec(),
                NotionArg::Wc => vec![Notion::Wc],
                NotionArg::Sc => vec![Notion::Sc],
                NotionArg::Wp => vec![Notion::Wp],
                NotionArg::Sp => vec![Notion::Sp],
                NotionArg::Fwc => vec![Notion::Fwc],
                NotionArg::Fsc => vec![Notion::Fsc],
                NotionArg::Fwp => vec![Notion::Fwp],
                NotionArg::Fsp => vec![Notion::Fsp],
            };
            let opts = WinnersOptions {
                notions,
                source: match source {
                    SourceArg::Profile => Source::Profile,
                    SourceArg::Graph => Source::Graph,
                },
                method: match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Search => Method::Search,
                    MethodArg::Brute => Method::Brute,
                },
                witness,
                budget,
            };
            cli::cmd_winners(&read(&file)?, &opts).map_err(fail)
        }
        Cmd::Eval { file, agenda } => cli::cmd_eval(&read(&file)?, &agenda).map_err(fail),
        Cmd::Reduce { integers, output } => {
            let (text, designated) = cli::cmd_reduce(&integers).map_err(fail)?;
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| (cli::EXIT_PARSE, format!("{}: {e}", path.display())))?;
                    Ok(format!("designated: {designated}\n"))
                }
                None => Ok(text),
            }
        }
        Cmd::Selfcheck {
            candidates,
            votes,
            trials,
            seed,
        } => {
            let cfg = SelfCheckConfig {
                candidates,
                max_votes: votes,
                trials,
                seed,
                ..SelfCheckConfig::default()
            };
            let out = cli::cmd_selfcheck(&cfg).map_err(fail)?;
            if out.passed {
                Ok(out.text)
            } else {
                Err((cli::EXIT_VIOLATION, out.text))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((code, msg)) if code == cli::EXIT_VIOLATION => {
            print!("{msg}");
            ExitCode::from(code as u8)
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
