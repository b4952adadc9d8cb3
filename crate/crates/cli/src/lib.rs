//! Command-line front end: tables, verification suites and an on-disk cache
//! on top of `supercapelli-core`.

pub mod cache;
pub mod commands;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use commands::{execute, exit_code, Cli, Format};

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code: 0 on success, 1 on a failed verification, 2 on invalid input.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let mut body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON output"),
        Format::Text => out.text,
    };
    body.push('\n');
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    if out.pass {
        0
    } else {
        1
    }
}
