use std::io::Write;
use std::process::ExitCode;

use chainrep_cli::record::{self, RunRecord};
use chainrep_cli::{exit, run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(outcome.render(cli.format).as_bytes()).is_err() {
        return ExitCode::from(exit::INPUT);
    }
    if !cli.no_persist {
        let run =
            RunRecord::new(outcome.digest.clone(), outcome.command, outcome.parameters.clone(), outcome.json.clone());
        if let Err(e) = record::append(&record::data_root(), &run) {
            eprintln!("warning: run record not saved: {e}");
        }
    }
    ExitCode::from(outcome.code)
}
