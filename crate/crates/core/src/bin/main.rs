use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use local_bezout::cli::{run, Cli};

fn main() {
    // Argument errors belong to the input-error exit code; help and
    // version are successes.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    let (out, code) = run(&cli);
    print!("{out}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
