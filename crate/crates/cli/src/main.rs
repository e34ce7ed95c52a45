use std::process::ExitCode;

use clap::Parser;
use equidouble::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("EQUIDOUBLE_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
            }
            _ => {
                eprintln!("EQUIDOUBLE_THREADS must be a positive integer");
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
    }
    let (code, text) = run(&cli.command, &cli.opts);
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
