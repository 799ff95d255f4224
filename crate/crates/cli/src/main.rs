use clap::Parser;

fn main() {
    let cli = ginv_cli::Cli::parse();
    std::process::exit(ginv_cli::run(&cli));
}
