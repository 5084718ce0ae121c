use clap::Parser;

fn main() {
    let cli = hirzebruch_cli::Cli::parse();
    std::process::exit(hirzebruch_cli::main_with(&cli));
}
