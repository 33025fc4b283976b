use std::process::ExitCode;

use clap::Parser;
use stabcode_cli::{execute, Cli, CliError};

fn print_error(cli: &Cli, err: &CliError) {
    if let CliError::Invalid(report) = err {
        if cli.json {
            println!("{}", report.to_json());
        } else {
            print!("{}", report.to_text());
        }
    } else if cli.json {
        let obj = serde_json::json!({
            "error": { "kind": err.kind(), "message": err.to_string() }
        });
        println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
    }
    eprintln!("error: {err}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut warnings = Vec::new();
    let result = execute(&cli, &mut warnings);
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            print_error(&cli, &err);
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
