use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fdim_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => {
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("fdim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
