use clap::Parser;
use hypchaos_cli::{execute, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests go to stdout and succeed
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    std::process::exit(execute(&cli));
}
