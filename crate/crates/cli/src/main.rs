use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use liftcode_cli::{format::write_text, run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|o| {
        match &cli.out {
            Some(path) => write_text(path, &o.output)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                // a closed pipe is not worth a failure status
                let _ = stdout.write_all(o.output.as_bytes());
            }
        }
        Ok(o.passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
