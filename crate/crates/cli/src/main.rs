use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxk3::{json, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            for doc in &out.documents {
                let text = if cli.json || out.stream { doc.to_string() } else { json::render(doc) };
                // a closed pipe is not an error for the computation
                if writeln!(stdout, "{text}").is_err() {
                    break;
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("validation failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
