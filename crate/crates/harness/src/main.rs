use clap::Parser;

fn main() {
    let cli = regpow::cli::Cli::parse();
    let code = regpow::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
