mod args;
mod error;
mod output;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use args::{Cli, Format};
use error::CliError;

fn write_output(cli: &Cli, run: &run::Run) -> Result<(), CliError> {
    let out = run::output_args(&cli.command);
    let text = match out.format {
        Format::Csv => run.table.to_csv(),
        Format::Json => run.table.to_json(&run.meta),
    };
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };

    match run::execute(&cli.command).and_then(|r| write_output(&cli, &r)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.machine_line());
            if let CliError::Usage(msg) = &e {
                let mut cmd = Cli::command();
                let usage = match cmd.find_subcommand_mut(run::name(&cli.command)) {
                    Some(sub) => sub.render_usage(),
                    None => cmd.render_usage(),
                };
                eprintln!("error: {msg}\n\n{usage}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
