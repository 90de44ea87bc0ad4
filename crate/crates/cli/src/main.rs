use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use rainbow_cli::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    let (out, err) = rainbow_cli::execute(cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    if let Some(msg) = err {
        eprintln!("{msg}");
    }
    ExitCode::from(out.code as u8)
}
