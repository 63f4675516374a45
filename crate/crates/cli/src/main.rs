use std::process::ExitCode;

use burnside_cli::{parse_config, render, run, UsageError, EXIT_INTERNAL, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match parse_config(std::env::args_os().skip(1)) {
        Ok(config) => config,
        Err(e) if e.is_informational() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(UsageError::Clap(e)) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let doc = match run(&config) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render(&doc, config.format);
    match &config.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(doc.exit_code())
}
