use clap::Parser;

fn main() {
    let cli = aspec_cli::Cli::parse();
    std::process::exit(aspec_cli::run(&cli));
}
