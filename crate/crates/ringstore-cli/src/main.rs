use clap::Parser;

fn main() {
    let cli = ringstore_cli::Cli::parse();
    match ringstore_cli::run(cli.command) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            eprintln!("error: {}: {}", e.category(), e);
            std::process::exit(1);
        }
    }
}
