mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Failure;

fn run(cli: Cli) -> Result<commands::Report, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Cap(c) => commands::cap(c),
        Command::Build(c) => commands::build(c),
        Command::Color(c) => commands::color(c),
        Command::Bounds(c) => commands::bounds(c),
        Command::Search(c) => commands::search(c),
        Command::Claim1(c) => commands::claim1(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let format = cli.format;
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(report) => {
            let fmt = format.unwrap_or(report.default_format);
            let text = match (fmt, report.csv) {
                (Format::Csv, Some(csv)) => csv,
                _ => output::render(report.value, fmt),
            };
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let code = failure.exit_code();
            match failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Verification { report, message } | Failure::Budget { report, message } => {
                    let _ = stdout.write_all(
                        output::render(report, format.unwrap_or(Format::Text)).as_bytes(),
                    );
                    eprintln!("error: {message}");
                }
            }
            ExitCode::from(code)
        }
    }
}
