use clap::{Parser, Subcommand, ValueEnum};
use ought::cli::{
    cmd_check, cmd_crosscheck_file, cmd_crosscheck_random, cmd_iol, cmd_query, cmd_rank,
    load_theory_file, render_check, render_crosscheck, render_iol, render_query_json,
    render_query_text, render_rank, CliError, RankMethod, TheoryFile, EXIT_INCOHERENT,
    EXIT_NOT_ENTAILED, EXIT_OK,
};
use ought::model::EntailmentMode;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ought",
    version,
    about = "Defeasible conditional obligation reasoner"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lex,
    Fdis,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Replete,
    AllModels,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a theory file and report coherence, defeat, and stratification
    Check { file: String },
    /// Print the world ranking table
    Rank {
        file: String,
        #[arg(long, value_enum, default_value = "lex")]
        method: MethodArg,
        #[arg(long)]
        allow_incoherent: bool,
    },
    /// Decide the file's queries
    Query {
        file: String,
        #[arg(long, value_enum, default_value = "replete")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        allow_incoherent: bool,
    },
    /// Run the output engine on one input/head pair
    Iol {
        file: String,
        #[arg(long)]
        input: String,
        #[arg(long)]
        head: String,
    },
    /// Compare the preference and output engines
    Crosscheck {
        /// Theory file with obligation queries (mutually exclusive with --random)
        file: Option<String>,
        /// Number of random theories to generate instead of reading a file
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        #[arg(long, default_value_t = 3)]
        rules: usize,
        /// Input/head pairs sampled per random theory
        #[arg(long, default_value_t = 3)]
        pairs: usize,
        /// Generator seed; required with --random
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load(path: &str) -> Result<TheoryFile, CliError> {
    let file = load_theory_file(path)?;
    for warning in &file.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(file)
}

fn run() -> Result<i32, CliError> {
    match Args::parse().command {
        Command::Check { file } => {
            let file = load(&file)?;
            let report = cmd_check(&file);
            print!("{}", render_check(&report));
            Ok(if report.coherent {
                EXIT_OK
            } else {
                EXIT_INCOHERENT
            })
        }
        Command::Rank {
            file,
            method,
            allow_incoherent,
        } => {
            let file = load(&file)?;
            let method = match method {
                MethodArg::Lex => RankMethod::Lex,
                MethodArg::Fdis => RankMethod::Fdis,
            };
            let report = cmd_rank(&file, method, allow_incoherent)?;
            print!("{}", render_rank(&report));
            Ok(EXIT_OK)
        }
        Command::Query {
            file,
            mode,
            format,
            allow_incoherent,
        } => {
            let file = load(&file)?;
            let mode = match mode {
                ModeArg::Replete => EntailmentMode::Replete,
                ModeArg::AllModels => EntailmentMode::AllModels,
            };
            let report = cmd_query(&file, mode, allow_incoherent)?;
            match format {
                FormatArg::Text => print!("{}", render_query_text(&report)),
                FormatArg::Json => println!("{}", render_query_json(&report)),
            }
            Ok(if report.all_entailed() {
                EXIT_OK
            } else {
                EXIT_NOT_ENTAILED
            })
        }
        Command::Iol { file, input, head } => {
            let file = load(&file)?;
            let report = cmd_iol(&file, &input, &head)?;
            print!("{}", render_iol(&report));
            Ok(EXIT_OK)
        }
        Command::Crosscheck {
            file,
            random,
            atoms,
            rules,
            pairs,
            seed,
        } => {
            let report = match (file, random) {
                (Some(_), Some(_)) | (None, None) => {
                    return Err(CliError::Parse {
                        line: 0,
                        message: "pass either a file or --random N".to_string(),
                    })
                }
                (Some(path), None) => cmd_crosscheck_file(&load(&path)?)?,
                (None, Some(count)) => {
                    let seed = seed.ok_or_else(|| CliError::Parse {
                        line: 0,
                        message: "--random requires --seed".to_string(),
                    })?;
                    cmd_crosscheck_random(count, atoms, rules, pairs, seed)?
                }
            };
            print!("{}", render_crosscheck(&report));
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_NOT_ENTAILED
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
