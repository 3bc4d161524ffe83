use clap::Parser;

fn main() {
    let args = crossres::cli::Args::parse();
    std::process::exit(crossres::cli::main_with_args(args));
}
