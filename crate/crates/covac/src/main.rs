use clap::Parser;
use covac::cli::{run, Cli};

fn main() {
    // clap exits with code 2 on usage errors; domain errors exit 1 with a
    // one-line diagnostic on stderr.
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
