use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use monideal::dsl::{Config, DslError, OutputFormat, Session, FUNCTIONS};
use monideal::json::ideal_to_json;
use monideal::{gen_ideal, selftest, Characteristic, GenParams, IdealClass};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "monideal", version, about = "Calculator for monomial ideals")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Field characteristic (0 or a prime), used by Borel-fixedness.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    /// Bound for bounded power tests.
    #[arg(long, global = true, default_value_t = monideal::classes::DEFAULT_K_MAX)]
    kmax: u32,
    /// Cap on intermediate generator counts.
    #[arg(long, global = true, default_value_t = monideal::limits::DEFAULT_MAX_TERMS)]
    max_terms: usize,
    /// Seed for random sampling and generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a script given on the command line.
    Eval {
        #[arg(short = 'e', long = "expr")]
        script: String,
    },
    /// Evaluate a script file.
    Run { file: PathBuf },
    /// Interactive session, one script per line.
    Repl,
    /// Print a random ideal of the given class (JSON by default).
    Gen {
        /// borel-type, borel-fixed, strongly-stable, lexsegment,
        /// universal-lexsegment, squarefree-strongly-stable or stably-lexsegment.
        #[arg(long)]
        class: IdealClass,
        #[arg(short, long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: u32,
        #[arg(long, default_value_t = 3)]
        max_gens: usize,
    },
    /// Run the built-in golden examples.
    Selftest,
}

fn report(err: &DslError, format: OutputFormat) -> u8 {
    match format {
        OutputFormat::Json => eprintln!("{}", err.to_json()),
        OutputFormat::Text => eprintln!("error[{}]: {err}", err.code()),
    }
    err.exit_code() as u8
}

fn run_script(session: &mut Session, text: &str, format: OutputFormat) -> Result<(), u8> {
    let lines = session
        .run_to_lines(text, format)
        .map_err(|e| report(&e, format))?;
    let mut out = io::stdout().lock();
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    Ok(())
}

fn repl(session: &mut Session, format: OutputFormat) {
    let interactive = io::stdin().is_terminal();
    let prompt = || {
        if interactive {
            print!("> ");
            let _ = io::stdout().flush();
        }
    };
    prompt();
    for line in io::stdin().lock().lines() {
        let Ok(line) = line else { break };
        match line.trim() {
            ":quit" | ":q" => break,
            ":help" => {
                for f in FUNCTIONS {
                    println!("{}", f.signature);
                }
            }
            "" => {}
            text => {
                let _ = run_script(session, text, format);
            }
        }
        prompt();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let characteristic = match Characteristic::new(cli.characteristic) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            return ExitCode::from(2);
        }
    };
    let config = Config {
        characteristic,
        k_max: cli.kmax,
        max_terms: cli.max_terms,
        seed: cli.seed,
    };
    let text_or = |default| match cli.format {
        Some(Format::Text) => OutputFormat::Text,
        Some(Format::Json) => OutputFormat::Json,
        None => default,
    };
    let mut session = Session::new(config);
    let result = match &cli.command {
        Command::Eval { script } => run_script(&mut session, script, text_or(OutputFormat::Text)),
        Command::Run { file } => match std::fs::read_to_string(file) {
            Ok(text) => run_script(&mut session, &text, text_or(OutputFormat::Text)),
            Err(e) => {
                eprintln!("error[io-error]: {}: {e}", file.display());
                Err(2)
            }
        },
        Command::Repl => {
            repl(&mut session, text_or(OutputFormat::Text));
            Ok(())
        }
        Command::Gen {
            class,
            n,
            max_deg,
            max_gens,
        } => {
            let params = GenParams::new(*class, *n, *max_deg, *max_gens, cli.seed)
                .with_characteristic(characteristic);
            match gen_ideal(&params) {
                Ok(ideal) => {
                    match text_or(OutputFormat::Json) {
                        OutputFormat::Json => println!("{}", ideal_to_json(&ideal)),
                        OutputFormat::Text => println!("{ideal}"),
                    }
                    Ok(())
                }
                Err(e) => {
                    eprintln!("error[{}]: {e}", e.code());
                    Err(if e.kind() == monideal::ErrorKind::Resource {
                        3
                    } else {
                        2
                    })
                }
            }
        }
        Command::Selftest => {
            let mut failed = 0;
            for (name, outcome) in selftest::run_golden() {
                match outcome {
                    Ok(()) => println!("PASS {name}"),
                    Err(msg) => {
                        failed += 1;
                        println!("FAIL {name}: {msg}");
                    }
                }
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(2)
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
