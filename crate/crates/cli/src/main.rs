use std::process::ExitCode;

use albert_cli::{run, Cli, RunConfig, EXIT_INVALID};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match RunConfig::try_from(cli) {
        Ok(config) => run(
            &config,
            &mut std::io::stdout().lock(),
            &mut std::io::stderr().lock(),
        ),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    };
    ExitCode::from(code as u8)
}
