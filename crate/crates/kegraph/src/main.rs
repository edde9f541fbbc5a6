use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use kegraph::cli::{run, Command, RunConfig, EXIT_PARSE};

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let input = if config.command == Command::Gen {
        String::new()
    } else {
        match read_input(&config.input) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", config.input);
                return ExitCode::from(EXIT_PARSE as u8);
            }
        }
    };
    let out = run(&config, &input);
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
