//! `mcturan`: command-line access to exact multicolor Turán numbers,
//! constructions, certificate checking and bound tables.
//!
//! Exit codes: 0 success, 2 budget exhausted, 3 verification failure,
//! 4 parse or parameter error.

mod args;
mod commands;
mod failure;
mod io;
mod table;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use failure::Failure;

fn run(cli: &Cli) -> Result<i32, Failure> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Failure::Input("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Failure::Input(format!("cannot start workers: {e}")))?;
    }
    match &cli.command {
        Command::Exact(a) => commands::exact(a),
        Command::Construct(a) => commands::construct(a),
        Command::Verify(a) => commands::verify(a),
        Command::Table(a) => table::table(a),
        Command::Convert(a) => commands::convert(a),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 4,
            };
            std::process::exit(code);
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).parse_default_env().init();
    let code = run(&cli).unwrap_or_else(|failure| {
        eprintln!("{failure}");
        failure.exit_code()
    });
    std::process::exit(code);
}
