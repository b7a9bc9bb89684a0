use clap::Parser;

fn main() {
    let cli = galext_cli::config::Cli::parse();
    std::process::exit(galext_cli::run(&cli));
}
