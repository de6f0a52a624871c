use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = fdpi_cli::Cli::parse();
    match fdpi_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("fdpi: {err:#}");
            ExitCode::from(fdpi_cli::exit_code(&err))
        }
    }
}
